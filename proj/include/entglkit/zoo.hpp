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


#ifndef ENTGLKIT_ZOO_HPP
#define ENTGLKIT_ZOO_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "entglkit/qstate.hpp"

namespace entglkit {

enum class Family {
    Werner,
    Isotropic,
    Stormer,
    Uuvvf,
    Watrous,
    Rainbow,
    BellDiagonal,
    Chessboard,
    TilesUpb,
    Edge55,
    Edge66,
    MaxCorrelated,
};

const char *family_name(Family f);

struct FamilyPoint {
    Family family;
    std::map<std::string, double> params;  // defining parameters plus derived numbers
    std::map<std::string, bool> flags;     // analytic predicates
    QuantumState state;
};

// (1 + beta F) / (d^2 + beta d), -1 <= beta <= 1.
FamilyPoint werner(int d, double beta);
// (1 + beta P+) / (d^2 + beta), beta >= -1, P+ the normalized projector.
FamilyPoint isotropic(int d, double beta);
int isotropic_schmidt_number(int d, double beta);
FamilyPoint stormer(double alpha);
FamilyPoint chessboard();
FamilyPoint edge55();
FamilyPoint edge66();

struct TilesUpb {
    std::vector<PureStateVector> vectors;
    FamilyPoint point;
};
TilesUpb tiles_upb();

// Two pairs (A1,B1) and (A2,B2) of d-level systems. The state is returned on
// the bipartite cut (A1 A2 | B1 B2), dims {d^2, d^2}.
FamilyPoint uuvvf(int d, double eps, double delta);
bool uuvvf_admissible(int d, double eps, double delta);
std::pair<double, double> uuvvf_two_copy_recursion(double eps, double delta, int d);
// Unnormalized operator in pair order (A1, B1, A2, B2).
ComplexMatrix uuvvf_pairwise_operator(int d, double eps, double delta);
FamilyPoint watrous(int d, double eps);
double watrous_delta(int d, double eps);

// m-level pair (A1,B1) and d-level pair (A2,B2), 3 <= m < d; returned on
// (A1 A2 | B1 B2), dims {m d, m d}.
FamilyPoint rainbow(int m, int d, double eps, double delta);
bool rainbow_admissible(int m, int d, double eps, double delta);
bool rainbow_ppt_entangled_predicate(int m, int d, double eps, double delta);

// p = (p00, p01, p10, p11), first index phase, second shift.
FamilyPoint bell_diagonal(const std::array<double, 4> &p);
ComplexVector bell_vector(int phase, int shift);

// sum_ij alpha_ij |ii><jj| for a PSD, unit-trace d x d matrix alpha.
FamilyPoint max_correlated(const ComplexMatrix &alpha);

}  // namespace entglkit

#endif
