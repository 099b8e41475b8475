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


#include "entglkit/zoo.hpp"

#include <cmath>
#include <limits>

namespace entglkit {

namespace {

constexpr double kBoundaryTol = 1e-12;

ComplexMatrix from_rows(const std::vector<std::vector<double>> &rows, double scale) {
    const int n = static_cast<int>(rows.size());
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j] / scale;
    return m;
}

FamilyPoint make_point(Family f, const ComplexMatrix &unnormalized, std::vector<int> dims) {
    const double norm = unnormalized.trace().real();
    FamilyPoint p{f, {}, {}, QuantumState(unnormalized / norm, std::move(dims))};
    p.params["norm"] = norm;
    return p;
}

void record_ranks(FamilyPoint &p) {
    p.params["rank"] = numerical_rank(p.state.matrix());
    p.params["rank_pt"] = numerical_rank(partial_transpose(p.state, 1));
    p.flags["ppt"] = is_ppt(p.state);
}

ComplexMatrix identity(int n) { return ComplexMatrix::Identity(n, n); }

// Pairwise (A1,B1,A2,B2) -> bipartite (A1,A2 | B1,B2).
ComplexMatrix to_cut(const ComplexMatrix &pairwise, int m, int d) {
    return permute_subsystems(pairwise, {m, m, d, d}, {0, 2, 1, 3});
}

}  // namespace

const char *family_name(Family f) {
    switch (f) {
        case Family::Werner: return "werner";
        case Family::Isotropic: return "isotropic";
        case Family::Stormer: return "stormer";
        case Family::Uuvvf: return "uuvvf";
        case Family::Watrous: return "watrous";
        case Family::Rainbow: return "rainbow";
        case Family::BellDiagonal: return "bell_diagonal";
        case Family::Chessboard: return "chessboard";
        case Family::TilesUpb: return "tiles_upb";
        case Family::Edge55: return "edge55";
        case Family::Edge66: return "edge66";
        case Family::MaxCorrelated: return "max_correlated";
    }
    return "unknown";
}

FamilyPoint werner(int d, double beta) {
    if (d < 2 || !(beta >= -1.0 && beta <= 1.0))
        throw Error(ErrorCode::ParamOutOfRange, "werner needs d >= 2 and -1 <= beta <= 1");
    FamilyPoint p = make_point(Family::Werner, identity(d * d) + beta * swap_operator(d), {d, d});
    p.params["d"] = d;
    p.params["beta"] = beta;
    p.flags["entangled"] = beta < -1.0 / d;
    p.flags["one_distillable"] = beta < -0.5;
    return p;
}

int isotropic_schmidt_number(int d, double beta) {
    if (beta <= d) return 1;
    for (int n = 2; n < d; ++n)
        if (beta <= d * (n * d - 1.0) / (d - n)) return n;
    return d;
}

FamilyPoint isotropic(int d, double beta) {
    if (d < 2 || !(beta >= -1.0) || !std::isfinite(beta))
        throw Error(ErrorCode::ParamOutOfRange, "isotropic needs d >= 2 and beta >= -1");
    FamilyPoint p = make_point(Family::Isotropic, identity(d * d) + beta * max_entangled_projector(d), {d, d});
    p.params["d"] = d;
    p.params["beta"] = beta;
    p.params["schmidt_number"] = isotropic_schmidt_number(d, beta);
    p.flags["entangled"] = beta > d;
    return p;
}

FamilyPoint stormer(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 5.0)) throw Error(ErrorCode::ParamOutOfRange, "stormer needs 0 <= alpha <= 5");
    ComplexMatrix plus = ComplexMatrix::Zero(9, 9);
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}}) plus(3 * i + j, 3 * i + j) = 1.0 / 3.0;
    const ComplexMatrix f = swap_operator(3);
    const ComplexMatrix minus = f * plus * f;
    ComplexMatrix sigma = (2.0 * max_entangled_projector(3) + alpha * plus + (5.0 - alpha) * minus) / 7.0;
    FamilyPoint p = make_point(Family::Stormer, sigma, {3, 3});
    p.params["alpha"] = alpha;
    p.flags["ppt"] = alpha >= 1.0 && alpha <= 4.0;
    p.flags["separable"] = alpha >= 2.0 && alpha <= 3.0;
    return p;
}

FamilyPoint chessboard() {
    ComplexMatrix m = from_rows({{1, 0, 1, 0, 0, 0, 1, 0, 0},
                                 {0, 1, 0, 0, 0, -1, 0, -1, 0},
                                 {1, 0, 2, 0, -1, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 0, -1, 0, 1, 0},
                                 {0, 0, -1, 0, 1, 0, 1, 0, 0},
                                 {0, -1, 0, -1, 0, 2, 0, 0, 0},
                                 {1, 0, 0, 0, 1, 0, 2, 0, 0},
                                 {0, -1, 0, 1, 0, 0, 0, 2, 0},
                                 {0, 0, 0, 0, 0, 0, 0, 0, 0}},
                                12.0);
    FamilyPoint p{Family::Chessboard, {}, {}, QuantumState(m, {3, 3})};
    record_ranks(p);
    return p;
}

FamilyPoint edge55() {
    ComplexMatrix m = from_rows({{0, 0, 0, 0, 0, 0, 0, 0, 0},
                                 {0, 2, -1, 0, 0, 0, 0, 0, 1},
                                 {0, -1, 1, 0, 0, 0, 0, 0, -1},
                                 {0, 0, 0, 3, 0, -1, -1, 0, 0},
                                 {0, 0, 0, 0, 0, 0, 0, 0, 0},
                                 {0, 0, 0, -1, 0, 1, 1, 0, 0},
                                 {0, 0, 0, -1, 0, 1, 1, 0, 0},
                                 {0, 0, 0, 0, 0, 0, 0, 2, -2},
                                 {0, 1, -1, 0, 0, 0, 0, -2, 3}},
                                13.0);
    FamilyPoint p{Family::Edge55, {}, {}, QuantumState(m, {3, 3})};
    record_ranks(p);
    return p;
}

FamilyPoint edge66() {
    ComplexMatrix m = from_rows({{1, 0, 0, 0, 0, 0, 0, 0, -1},
                                 {0, 2, 0, -1, 0, 0, 0, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 1, 0, 0},
                                 {0, -1, 0, 1, 0, 0, 0, 0, 1},
                                 {0, 0, 0, 0, 1, 0, 1, 0, 0},
                                 {0, 0, 0, 0, 0, 1, 0, -1, 0},
                                 {0, 0, 1, 0, 1, 0, 2, 0, 0},
                                 {0, 0, 0, 0, 0, -1, 0, 1, 0},
                                 {-1, 0, 0, 1, 0, 0, 0, 0, 3}},
                                13.0);
    FamilyPoint p{Family::Edge66, {}, {}, QuantumState(m, {3, 3})};
    record_ranks(p);
    return p;
}

TilesUpb tiles_upb() {
    const double h = 1.0 / std::sqrt(2.0);
    auto ket = [](std::initializer_list<double> a) {
        ComplexVector v(3);
        int i = 0;
        for (double x : a) v(i++) = x;
        return v;
    };
    const ComplexVector e0 = ket({1, 0, 0}), e2 = ket({0, 0, 1});
    const ComplexVector m01 = ket({h, -h, 0}), m12 = ket({0, h, -h});
    // (|0>+|1>+|2>)/sqrt(3) on each side, i.e. the displayed 1/3 prefactor
    // applied to the unnormalized product of two all-ones vectors.
    const ComplexVector all = ket({1, 1, 1}) / std::sqrt(3.0);
    std::vector<PureStateVector> vs;
    for (const auto &[a, b] : {std::pair{e0, m01}, std::pair{m01, e2}, std::pair{e2, m12}, std::pair{m12, e0},
                               std::pair{all, all}})
        vs.emplace_back(kron(a, b), 3, 3);
    ComplexMatrix rho = identity(9);
    for (const auto &v : vs) rho -= v.projector();
    FamilyPoint p = make_point(Family::TilesUpb, rho, {3, 3});
    record_ranks(p);
    return {vs, p};
}

bool uuvvf_admissible(int d, double eps, double delta) {
    const double dd = d;
    return (dd - 1) * (dd - 1) + 2 * eps * dd * (dd - 1) + delta * dd * dd >= -kBoundaryTol &&
           dd * dd - 1 + 2 * eps * dd - delta * dd * dd >= -kBoundaryTol &&
           (dd + 1) * (dd + 1) - 2 * eps * dd * (dd + 1) + delta * dd * dd >= -kBoundaryTol;
}

ComplexMatrix uuvvf_pairwise_operator(int d, double eps, double delta) {
    const double dd = d;
    const ComplexMatrix id = identity(d * d), f = swap_operator(d);
    return kron(id, id) + ((eps * dd - 1) / dd) * (kron(id, f) + kron(f, id)) +
           ((1 - 2 * eps * dd + delta * dd * dd) / (dd * dd)) * kron(f, f);
}

FamilyPoint uuvvf(int d, double eps, double delta) {
    if (d < 2 || !std::isfinite(eps) || !std::isfinite(delta) || !uuvvf_admissible(d, eps, delta))
        throw Error(ErrorCode::ParamOutOfRange, "uuvvf parameters outside the admissible region");
    FamilyPoint p = make_point(Family::Uuvvf, to_cut(uuvvf_pairwise_operator(d, eps, delta), d, d), {d * d, d * d});
    const double dd = d;
    p.params["d"] = d;
    p.params["eps"] = eps;
    p.params["delta"] = delta;
    p.flags["entangled"] = eps < 0 || delta < 0;
    p.flags["separable"] = !p.flags["entangled"];
    p.flags["psi_a"] = dd * dd + 3 * dd * (eps * dd - 1) + 2 * (1 - 2 * eps * dd + delta * dd * dd) < 0;
    p.flags["psi_b"] = eps < 1 / dd - 0.5;
    p.flags["psi_c"] = delta < 1 / (dd * dd) - 0.5;
    p.flags["one_distillable"] = p.flags["psi_a"] || p.flags["psi_b"] || p.flags["psi_c"];
    return p;
}

std::pair<double, double> uuvvf_two_copy_recursion(double eps, double delta, int d) {
    const double d2 = static_cast<double>(d) * d;
    const double den = d2 * eps * eps + d2 - 1;
    return {eps * (d2 * delta + d2 - 1) / den, (eps * eps * (d2 - 1) + d2 * delta * delta) / den};
}

double watrous_delta(int d, double eps) {
    const double dd = d;
    return (dd * dd - 1 + 2 * eps * dd) / (dd * dd);
}

FamilyPoint watrous(int d, double eps) {
    const double dd = d;
    if (d < 2 || !(eps > 1 / dd - 1 && eps < 1 + 1 / dd))
        throw Error(ErrorCode::ParamOutOfRange, "watrous needs 1/d - 1 < eps < 1 + 1/d");
    FamilyPoint p = uuvvf(d, eps, watrous_delta(d, eps));
    p.family = Family::Watrous;
    p.flags["entangled"] = eps < 0;
    p.flags["separable"] = eps >= 0;
    p.flags["one_distillable"] = eps < 1 / dd - 0.5;
    return p;
}

bool rainbow_admissible(int m, int d, double eps, double delta) {
    // Eigenvalues of the unnormalized operator on the four (anti)symmetric sectors.
    const double a = (d * eps - 1) / d, b = (m * eps - 1) / m;
    const double c = (1 - (m + d) * eps + d * m * delta) / (d * static_cast<double>(m));
    for (int sm : {1, -1})
        for (int sd : {1, -1})
            if (1 + sd * a + sm * b + sm * sd * c < -kBoundaryTol) return false;
    return true;
}

bool rainbow_ppt_entangled_predicate(int m, int d, double eps, double delta) {
    return eps * m * m * (static_cast<double>(d) * d - 1) + d * m * delta * (m - d) < 0;
}

FamilyPoint rainbow(int m, int d, double eps, double delta) {
    if (m < 3 || m >= d || !std::isfinite(eps) || !std::isfinite(delta) || !rainbow_admissible(m, d, eps, delta))
        throw Error(ErrorCode::ParamOutOfRange, "rainbow parameters outside the admissible region");
    const ComplexMatrix im = identity(m * m), id = identity(d * d);
    const ComplexMatrix fm = swap_operator(m), fd = swap_operator(d);
    const double md = static_cast<double>(m) * d;
    ComplexMatrix pairwise = kron(im, id) + ((d * eps - 1) / d) * kron(im, fd) + ((m * eps - 1) / m) * kron(fm, id) +
                             ((1 - (m + d) * eps + md * delta) / md) * kron(fm, fd);
    FamilyPoint p = make_point(Family::Rainbow, to_cut(pairwise, m, d), {m * d, m * d});
    p.params["m"] = m;
    p.params["d"] = d;
    p.params["eps"] = eps;
    p.params["delta"] = delta;
    p.flags["npt"] = eps < 0 || delta < 0;
    p.flags["ppt_entangled"] = !p.flags["npt"] && rainbow_ppt_entangled_predicate(m, d, eps, delta);
    return p;
}

ComplexVector bell_vector(int phase, int shift) {
    if ((phase & ~1) || (shift & ~1)) throw Error(ErrorCode::ParamOutOfRange, "Bell indices are bits");
    ComplexVector v = ComplexVector::Zero(4);
    const double h = 1.0 / std::sqrt(2.0);
    v(shift) = h;                          // |0, shift>
    v(2 + (1 - shift)) = phase ? -h : h;   // |1, 1 - shift>
    return v;
}

FamilyPoint bell_diagonal(const std::array<double, 4> &prob) {
    double total = 0.0;
    for (double x : prob) {
        if (!(x >= 0.0)) throw Error(ErrorCode::ParamOutOfRange, "probabilities must be nonnegative");
        total += x;
    }
    if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorCode::ParamOutOfRange, "probabilities must sum to 1");
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) rho += prob[2 * i + j] * projector(bell_vector(i, j));
    FamilyPoint p{Family::BellDiagonal, {}, {}, QuantumState(rho, {2, 2})};
    const char *names[] = {"p00", "p01", "p10", "p11"};
    for (int k = 0; k < 4; ++k) p.params[names[k]] = prob[k];
    p.flags["entangled"] = std::max({prob[0], prob[1], prob[2], prob[3]}) > 0.5;
    return p;
}

FamilyPoint max_correlated(const ComplexMatrix &alpha) {
    if (alpha.rows() != alpha.cols() || alpha.rows() < 2)
        throw Error(ErrorCode::ParamOutOfRange, "coefficient matrix must be square with d >= 2");
    const int d = static_cast<int>(alpha.rows());
    ComplexMatrix rho = ComplexMatrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) rho(i * d + i, j * d + j) = alpha(i, j);
    FamilyPoint p{Family::MaxCorrelated, {}, {}, QuantumState(rho, {d, d})};
    p.params["d"] = d;
    return p;
}

}  // namespace entglkit
