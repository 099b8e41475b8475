// Copyright 2026 The entglkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTGLKIT_COMMON_HPP
#define ENTGLKIT_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace entglkit {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
inline constexpr double herm = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double psd = 1e-9;
inline constexpr double rank = 1e-9;
inline constexpr double norm = 1e-10;
inline constexpr double rec = 1e-10;
inline constexpr double wit = 1e-8;
}  // namespace tol

enum class ErrorCode {
    InvalidSubsystem,
    NotBipartite,
    DimensionMismatch,
    NotHermitian,
    NotSquare,
    WrongDimension,
    NotDetected,
    PartyCountTooLarge,
    InvalidOrder,
    NotUnitVector,
    ParamOutOfRange,
    NotOrthonormal,
    StateIsPPT,
    SizeCapExceeded,
    InvariantViolation,
    ParseError,
};

const char *error_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace entglkit

#endif
