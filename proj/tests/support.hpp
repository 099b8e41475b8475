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


// Shared oracles and samplers for the unit tests and the acceptance binary.

#ifndef ENTGLKIT_TESTS_SUPPORT_HPP
#define ENTGLKIT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "entglkit/common.hpp"
#include "entglkit/montecarlo.hpp"
#include "entglkit/qstate.hpp"
#include "entglkit/rng.hpp"

namespace entglkit::testing {

inline ComplexVector random_ket(int d, Rng &rng) {
    ComplexVector v(d);
    for (int i = 0; i < d; ++i) v(i) = rng.complex_normal();
    return v.normalized();
}

inline ComplexMatrix random_product_state(int d_a, int d_b, Rng &rng) {
    return kron(projector(random_ket(d_a, rng)), projector(random_ket(d_b, rng)));
}

// Re Tr(W rho).
inline double evaluate_trace(const ComplexMatrix &w, const ComplexMatrix &rho) { return (w * rho).trace().real(); }

inline ComplexMatrix random_hermitian(int d, Rng &rng) {
    ComplexMatrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
    return (g + g.adjoint()) / 2.0;
}

// The 9 x 9 state whose partial transpose has eigenpair -1/8,
// (|00> + |11> - |22>)/sqrt(3).
inline ComplexMatrix robustness_example_state() {
    const double raw[9][9] = {
        {1, 0, 0, 0, 0, 0, 0, 0, 0},  {0, 2, 0, -1, 0, 0, 0, 0, 0}, {0, 0, 2, 0, 0, 0, 2, 0, 0},
        {0, -1, 0, 2, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0, 0},  {0, 0, 0, 0, 0, 2, 0, 2, 0},
        {0, 0, 2, 0, 0, 0, 2, 0, 0},  {0, 0, 0, 0, 0, 2, 0, 2, 0},  {0, 0, 0, 0, 0, 0, 0, 0, 2}};
    ComplexMatrix m(9, 9);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) m(i, j) = raw[i][j] / 16.0;
    return m;
}

// Majorization by direct partial sums: x is majorized by y.
inline bool majorized_by(std::vector<double> x, std::vector<double> y) {
    const std::size_t n = std::max(x.size(), y.size());
    x.resize(n, 0.0);
    y.resize(n, 0.0);
    std::sort(x.rbegin(), x.rend());
    std::sort(y.rbegin(), y.rend());
    double sx = 0.0, sy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sx += x[k];
        sy += y[k];
        if (sx > sy + 1e-12) return false;
    }
    return true;
}

// Controlled-NOT on four qubits ordered (A1, B1, A2, B2), acting as
// A1 -> A2 and B1 -> B2 simultaneously.
inline ComplexMatrix bilateral_xor_unitary() {
    ComplexMatrix u = ComplexMatrix::Zero(16, 16);
    for (int in = 0; in < 16; ++in) {
        const int a1 = (in >> 3) & 1, b1 = (in >> 2) & 1, a2 = (in >> 1) & 1, b2 = in & 1;
        const int out = (a1 << 3) | (b1 << 2) | ((a2 ^ a1) << 1) | (b2 ^ b1);
        u(out, in) = 1.0;
    }
    return u;
}

// Two-copy state reordered from pair order (A1 B1 A2 B2) and projected as in
// the two-copy recursion: rho'[x3 x4 x7 x8; y3 y4 y7 y8] =
//   d^-2 sum_{ijkl} rho[i j x3 x4; k l y3 y4] rho[i j x7 x8; k l y7 y8].
// rho is the pairwise operator of one copy with local dimension d.
inline ComplexMatrix two_copy_projection(const ComplexMatrix &rho, int d) {
    const int n = d * d * d * d;
    auto idx = [d](int a, int b, int c, int e) { return ((a * d + b) * d + c) * d + e; };
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (int x3 = 0; x3 < d; ++x3)
        for (int x4 = 0; x4 < d; ++x4)
            for (int x7 = 0; x7 < d; ++x7)
                for (int x8 = 0; x8 < d; ++x8)
                    for (int y3 = 0; y3 < d; ++y3)
                        for (int y4 = 0; y4 < d; ++y4)
                            for (int y7 = 0; y7 < d; ++y7)
                                for (int y8 = 0; y8 < d; ++y8) {
                                    cplx acc = 0.0;
                                    for (int i = 0; i < d; ++i)
                                        for (int j = 0; j < d; ++j)
                                            for (int k = 0; k < d; ++k)
                                                for (int l = 0; l < d; ++l)
                                                    acc += rho(idx(i, j, x3, x4), idx(k, l, y3, y4)) *
                                                           rho(idx(i, j, x7, x8), idx(k, l, y7, y8));
                                    out(idx(x3, x4, x7, x8), idx(y3, y4, y7, y8)) = acc / double(d * d);
                                }
    return out;
}

// Coefficients (c0, c1, c2) of m = c0 1 + c1 (1 (x) F + F (x) 1) + c2 F (x) F,
// fitted through the Hilbert-Schmidt Gram system.
inline std::array<double, 3> fit_pair_basis(const ComplexMatrix &m, int d) {
    const ComplexMatrix id = ComplexMatrix::Identity(d * d, d * d), f = swap_operator(d);
    const ComplexMatrix basis[3] = {kron(id, id), kron(id, f) + kron(f, id), kron(f, f)};
    Eigen::Matrix3d g;
    Eigen::Vector3d rhs;
    for (int a = 0; a < 3; ++a) {
        rhs(a) = (basis[a].adjoint() * m).trace().real();
        for (int b = 0; b < 3; ++b) g(a, b) = (basis[a].adjoint() * basis[b]).trace().real();
    }
    const Eigen::Vector3d c = g.ldlt().solve(rhs);
    return {c(0), c(1), c(2)};
}

}  // namespace entglkit::testing

#endif
