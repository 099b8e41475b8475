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


#ifndef ENTGLKIT_WITNESS_HPP
#define ENTGLKIT_WITNESS_HPP

#include <array>
#include <vector>

#include "entglkit/qstate.hpp"

namespace entglkit {

enum class WitnessKind { Entanglement, SchmidtN, Distillability };

struct WitnessOperator {
    ComplexMatrix matrix;
    int d_a = 0;
    int d_b = 0;
    WitnessKind kind = WitnessKind::Entanglement;
    int n = 0;  // Schmidt order when kind == SchmidtN
};

enum class MapKind {
    Identity,
    Reduction,           // Tr(A) 1 - p A   (p = 1 is the reduction map)
    DiagPlus,            // Tr(A) 1 + A - 2 diag(A)
    DiagTransposePlus,   // A^T + (d - 2) diag(A)
    DiagTransposeMinus,  // -A^T + d diag(A)
    IsotropicSum,        // (d - 2) Tr(A) 1 + (2d - 1) A^T
    Choi,
    Transpose,
    CustomKraus,         // sum_k sign_k V_k A V_k^dagger
};

struct LinearMapSpec {
    MapKind kind = MapKind::Identity;
    int d = 0;        // input dimension
    double p = 1.0;   // Reduction only
    std::vector<ComplexMatrix> kraus;
    std::vector<double> signs;

    static LinearMapSpec of(MapKind kind, int d, double p = 1.0);
    int output_dim() const;
};

ComplexMatrix apply_map(const LinearMapSpec &m, const ComplexMatrix &a);
// Hilbert-Schmidt adjoint: Tr[A^dagger m(B)] = Tr[adj(A)^dagger B].
ComplexMatrix apply_map_adjoint(const LinearMapSpec &m, const ComplexMatrix &a);
// (1 (x) m)(rho), computed block by block.
ComplexMatrix apply_map_one_sided(const QuantumState &s, const LinearMapSpec &m);
ComplexMatrix apply_map_one_sided(const ComplexMatrix &rho, int d_a, int d_b, const LinearMapSpec &m);

// W = d (1 (x) m)(P+) = sum_ij |i><j| (x) m(|i><j|).
WitnessOperator map_to_witness(const LinearMapSpec &m, int d);
// Kraus form recovered from the spectral decomposition of W.
LinearMapSpec witness_to_map(const WitnessOperator &w);

// which = 1..5
ComplexMatrix reduction_like_map(int which, const ComplexMatrix &a);
LinearMapSpec reduction_like_spec(int which, int d);
ComplexMatrix choi_map(const ComplexMatrix &a);

WitnessOperator schmidt_witness(int d, int n);
WitnessOperator chsh_witness(const std::array<double, 3> &a, const std::array<double, 3> &a2,
                             const std::array<double, 3> &b, const std::array<double, 3> &b2);
// P2 (x) X^{T_B} on (A1 A2 | B1 B2), with (A1, B1) the qubit pair.
WitnessOperator klc_witness(const QuantumState &x);

double evaluate_witness(const WitnessOperator &w, const QuantumState &s);
double evaluate_witness(const ComplexMatrix &w, const QuantumState &s);

}  // namespace entglkit

#endif
