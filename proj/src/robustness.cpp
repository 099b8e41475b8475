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


#include "entglkit/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace entglkit {

SchmidtSpectrum::SchmidtSpectrum(std::vector<double> c, int d_) : coeffs(std::move(c)), d(d_) {
    if (coeffs.empty() || d < 1 || static_cast<int>(coeffs.size()) > d)
        throw Error(ErrorCode::ParamOutOfRange, "spectrum must be nonempty with length <= d");
    double sq = 0.0;
    for (double a : coeffs) {
        if (!(a >= 0.0)) throw Error(ErrorCode::ParamOutOfRange, "Schmidt coefficients must be nonnegative");
        sq += a * a;
    }
    if (std::abs(sq - 1.0) > tol::norm) throw Error(ErrorCode::ParamOutOfRange, "sum of squared coefficients must be 1");
    std::sort(coeffs.begin(), coeffs.end(), std::greater<double>());
}

SchmidtSpectrum SchmidtSpectrum::from(const SchmidtData &data, int d) {
    std::vector<double> c(data.coefficients.data(), data.coefficients.data() + data.coefficients.size());
    return SchmidtSpectrum(std::move(c), d);
}

double SchmidtSpectrum::sum() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0.0); }

PureRobustness robustness_pure(const SchmidtSpectrum &sp) {
    const double s = sp.sum();
    return {s * s - 1.0, s * s - 1.0, sp.at(0) * sp.at(1)};
}

double gen_schmidt_robustness_maxent(int d, int n) {
    if (n < 1 || n > d) throw Error(ErrorCode::InvalidOrder, "need 1 <= n <= d");
    return static_cast<double>(d - n) / n;
}

BoundPair gen_schmidt_robustness_bounds(const SchmidtSpectrum &sp, int n) {
    if (n < 1 || n > sp.d) throw Error(ErrorCode::InvalidOrder, "need 1 <= n <= d");
    const double s2 = sp.sum() * sp.sum();
    const double rg = s2 - 1.0;
    const double upper = sp.d == 1 ? 0.0 : rg * (sp.d - n) / ((sp.d - 1.0) * n);
    return {std::max(0.0, s2 / n - 1.0), upper};
}

double random_schmidt_upper(const SchmidtSpectrum &sp, int n) {
    if (n < 1 || n > sp.d) throw Error(ErrorCode::InvalidOrder, "need 1 <= n <= d");
    return sp.at(0) * sp.at(1) * (sp.d - n) / (static_cast<double>(sp.d) * n - 1.0);
}

ConjectureBound random_schmidt_lower(const SchmidtSpectrum &sp, int n) {
    if (n < 1 || n >= sp.d) throw Error(ErrorCode::InvalidOrder, "need 1 <= n < d");
    const int d = sp.d;
    Eigen::VectorXd b(d);
    for (int i = 0; i < d; ++i) b(i) = sp.at(i);
    const Eigen::MatrixXd j = Eigen::MatrixXd::Ones(d, d);
    const Eigen::MatrixXd left = Eigen::MatrixXd::Identity(d, d) - (n / (n * static_cast<double>(d) - 1.0)) * j;
    const Eigen::MatrixXd right = n * Eigen::MatrixXd(b.cwiseProduct(b).asDiagonal()) - b * b.transpose();
    // The product of two symmetric matrices is not symmetric; its spectrum is
    // taken from the general solver and reduced to real parts.
    Eigen::EigenSolver<Eigen::MatrixXd> es(left * right, false);
    return {es.eigenvalues().real().minCoeff(), true};
}

}  // namespace entglkit
