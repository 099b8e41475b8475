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


#ifndef ENTGLKIT_ROBUSTNESS_HPP
#define ENTGLKIT_ROBUSTNESS_HPP

#include <vector>

#include "entglkit/qstate.hpp"

namespace entglkit {

// Schmidt amplitudes a_1 >= a_2 >= ... (not squared), sum of squares one,
// living in a d x d space. Shorter lists are zero padded up to d.
struct SchmidtSpectrum {
    std::vector<double> coeffs;
    int d = 0;

    SchmidtSpectrum() = default;
    // Sorts descending and validates normalization and length.
    SchmidtSpectrum(std::vector<double> coeffs, int d);
    static SchmidtSpectrum from(const SchmidtData &data, int d);

    double at(int i) const { return i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0.0; }
    double sum() const;
};

struct PureRobustness {
    double r_s;  // Schmidt robustness
    double r_g;  // generalized robustness
    double r_r;  // random robustness
};

struct ConjectureBound {
    double value;
    bool conjecture;
};

struct BoundPair {
    double lower;
    double upper;
};

PureRobustness robustness_pure(const SchmidtSpectrum &sp);
double gen_schmidt_robustness_maxent(int d, int n);
BoundPair gen_schmidt_robustness_bounds(const SchmidtSpectrum &sp, int n);
double random_schmidt_upper(const SchmidtSpectrum &sp, int n);
// Smallest eigenvalue of (1 - nJ/(nd-1))(nD - B), D = diag(b_i^2), B = b b^T.
ConjectureBound random_schmidt_lower(const SchmidtSpectrum &sp, int n);

}  // namespace entglkit

#endif
