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


#ifndef ENTGLKIT_PERMCRIT_HPP
#define ENTGLKIT_PERMCRIT_HPP

#include <vector>

#include "entglkit/qstate.hpp"

namespace entglkit {

// A permutation of the 2r matrix indices of an r-party operator with local
// dimension d. sigma is stored 1-based in one-line notation; positions
// 2k-1 and 2k hold the row and column index of party k.
struct PermutationCriterion {
    std::vector<int> sigma;
    int r = 0;
    int d = 0;

    PermutationCriterion() = default;
    PermutationCriterion(std::vector<int> sigma, int r, int d);

    static PermutationCriterion partial_transpose_b() { return {{1, 2, 4, 3}, 2, 2}; }
    static PermutationCriterion realignment() { return {{1, 3, 2, 4}, 2, 2}; }
};

struct CriterionClassification {
    int r = 0;
    int orbit_count = 0;
    std::vector<std::vector<int>> representatives;  // 1-based, lexicographic minimum of each orbit
    bool includes_identity = false;
};

// Lambda_sigma(A)[i_1 ... i_2r] = A[i_sigma(1) ... i_sigma(2r)].
ComplexMatrix apply_permutation(const ComplexMatrix &a, const std::vector<int> &sigma, int r, int d);
ComplexMatrix apply_permutation(const QuantumState &s, const PermutationCriterion &c);

double criterion_value(const QuantumState &s, const PermutationCriterion &c);

// Witness W with Tr(rho W) = 1 - criterion_value(rho). Throws NotDetected when
// the criterion value does not exceed one.
ComplexMatrix permutation_witness(const QuantumState &s, const PermutationCriterion &c);

// Index map whose action is adjoint to sigma under the trace pairing:
// Tr[A Lambda_sigma(B)] = Tr[Lambda_adj(A) B].
std::vector<int> adjoint_permutation(const std::vector<int> &sigma);
std::vector<int> compose(const std::vector<int> &outer, const std::vector<int> &inner);
std::vector<int> inverse(const std::vector<int> &sigma);
std::vector<int> row_column_swap(int r);

std::vector<int> canonical_tag(const PermutationCriterion &c);
std::vector<int> canonical_tag(const std::vector<int> &sigma);
CriterionClassification classify_independent(int r);
// (1/4)[C(2r, r) + 2^r + C(r, r/2) even(r)]
long long predicted_orbit_count(int r);

}  // namespace entglkit

#endif
