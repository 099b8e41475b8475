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


#include "entglkit/witness.hpp"

#include <cmath>

namespace entglkit {

namespace {

ComplexMatrix diag_part(const ComplexMatrix &a) { return a.diagonal().asDiagonal(); }

void require_square(const ComplexMatrix &a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, "map input must be square");
}

ComplexMatrix pauli_dot(const std::array<double, 3> &v) {
    ComplexMatrix m(2, 2);
    m << v[2], cplx(v[0], -v[1]), cplx(v[0], v[1]), -v[2];
    return m;
}

void require_unit(const std::array<double, 3> &v) {
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (std::abs(n - 1.0) > 1e-10) throw Error(ErrorCode::NotUnitVector, "measurement direction must be a unit vector");
}

}  // namespace

LinearMapSpec LinearMapSpec::of(MapKind kind, int d, double p) {
    LinearMapSpec m;
    m.kind = kind;
    m.d = d;
    m.p = p;
    if (kind == MapKind::Choi && d != 3) throw Error(ErrorCode::WrongDimension, "the Choi map acts on 3x3 matrices");
    return m;
}

int LinearMapSpec::output_dim() const {
    if (kind == MapKind::CustomKraus) return kraus.empty() ? 0 : static_cast<int>(kraus.front().rows());
    return d;
}

ComplexMatrix reduction_like_map(int which, const ComplexMatrix &a) {
    require_square(a);
    const int d = static_cast<int>(a.rows());
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    const cplx tr = a.trace();
    switch (which) {
        case 1: return tr * id - a;
        case 2: return tr * id + a - 2.0 * diag_part(a);
        case 3: return ComplexMatrix(a.transpose()) + (d - 2.0) * diag_part(a);
        case 4: return -ComplexMatrix(a.transpose()) + static_cast<double>(d) * diag_part(a);
        case 5: return (d - 2.0) * tr * id + (2.0 * d - 1.0) * ComplexMatrix(a.transpose());
        default: throw Error(ErrorCode::ParamOutOfRange, "reduction-like maps are numbered 1..5");
    }
}

LinearMapSpec reduction_like_spec(int which, int d) {
    static const MapKind kinds[] = {MapKind::Reduction, MapKind::DiagPlus, MapKind::DiagTransposePlus,
                                    MapKind::DiagTransposeMinus, MapKind::IsotropicSum};
    if (which < 1 || which > 5) throw Error(ErrorCode::ParamOutOfRange, "reduction-like maps are numbered 1..5");
    return LinearMapSpec::of(kinds[which - 1], d);
}

ComplexMatrix choi_map(const ComplexMatrix &a) {
    if (a.rows() != 3 || a.cols() != 3) throw Error(ErrorCode::WrongDimension, "the Choi map acts on 3x3 matrices");
    ComplexMatrix out = -a;
    out(0, 0) = a(0, 0) + a(2, 2);
    out(1, 1) = a(1, 1) + a(0, 0);
    out(2, 2) = a(2, 2) + a(1, 1);
    return out;
}

ComplexMatrix apply_map(const LinearMapSpec &m, const ComplexMatrix &a) {
    require_square(a);
    if (m.kind != MapKind::CustomKraus && a.rows() != m.d)
        throw Error(ErrorCode::DimensionMismatch, "map input dimension mismatch");
    const int d = static_cast<int>(a.rows());
    switch (m.kind) {
        case MapKind::Identity: return a;
        case MapKind::Reduction: return a.trace() * ComplexMatrix::Identity(d, d) - m.p * a;
        case MapKind::DiagPlus: return reduction_like_map(2, a);
        case MapKind::DiagTransposePlus: return reduction_like_map(3, a);
        case MapKind::DiagTransposeMinus: return reduction_like_map(4, a);
        case MapKind::IsotropicSum: return reduction_like_map(5, a);
        case MapKind::Choi: return choi_map(a);
        case MapKind::Transpose: return a.transpose();
        case MapKind::CustomKraus: {
            if (m.kraus.empty()) throw Error(ErrorCode::ParamOutOfRange, "empty Kraus list");
            if (m.kraus.front().cols() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "Kraus operator shape");
            ComplexMatrix out = ComplexMatrix::Zero(m.kraus.front().rows(), m.kraus.front().rows());
            for (size_t k = 0; k < m.kraus.size(); ++k) {
                double sign = k < m.signs.size() ? m.signs[k] : 1.0;
                out += sign * m.kraus[k] * a * m.kraus[k].adjoint();
            }
            return out;
        }
    }
    return a;
}

ComplexMatrix apply_map_adjoint(const LinearMapSpec &m, const ComplexMatrix &a) {
    const LinearMapSpec k = m.kind == MapKind::CustomKraus ? m : witness_to_map(map_to_witness(m, m.d));
    if (k.kraus.empty()) throw Error(ErrorCode::ParamOutOfRange, "empty Kraus list");
    ComplexMatrix out = ComplexMatrix::Zero(k.kraus.front().cols(), k.kraus.front().cols());
    for (size_t i = 0; i < k.kraus.size(); ++i) {
        double sign = i < k.signs.size() ? k.signs[i] : 1.0;
        out += sign * k.kraus[i].adjoint() * a * k.kraus[i];
    }
    return out;
}

ComplexMatrix apply_map_one_sided(const ComplexMatrix &rho, int d_a, int d_b, const LinearMapSpec &m) {
    if (rho.rows() != static_cast<Eigen::Index>(d_a) * d_b || rho.cols() != rho.rows())
        throw Error(ErrorCode::DimensionMismatch, "state order is not d_a * d_b");
    ComplexMatrix probe = apply_map(m, ComplexMatrix::Zero(d_b, d_b));
    const Eigen::Index d_out = probe.rows();
    ComplexMatrix out(d_a * d_out, d_a * d_out);
    for (int i = 0; i < d_a; ++i)
        for (int j = 0; j < d_a; ++j)
            out.block(i * d_out, j * d_out, d_out, d_out) = apply_map(m, rho.block(i * d_b, j * d_b, d_b, d_b));
    return out;
}

ComplexMatrix apply_map_one_sided(const QuantumState &s, const LinearMapSpec &m) {
    if (!s.bipartite()) throw Error(ErrorCode::DimensionMismatch, "state must be bipartite");
    return apply_map_one_sided(s.matrix(), s.dims()[0], s.dims()[1], m);
}

WitnessOperator map_to_witness(const LinearMapSpec &m, int d) {
    if (d < 1) throw Error(ErrorCode::ParamOutOfRange, "d must be positive");
    ComplexMatrix unit = ComplexMatrix::Zero(d, d);
    unit(0, 0) = 1.0;
    const Eigen::Index d_out = apply_map(m, unit).rows();
    WitnessOperator w;
    w.d_a = d;
    w.d_b = static_cast<int>(d_out);
    w.matrix = ComplexMatrix::Zero(d * d_out, d * d_out);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ComplexMatrix e = ComplexMatrix::Zero(d, d);
            e(i, j) = 1.0;
            w.matrix.block(i * d_out, j * d_out, d_out, d_out) = apply_map(m, e);
        }
    return w;
}

LinearMapSpec witness_to_map(const WitnessOperator &w) {
    const int da = w.d_a, db = w.d_b;
    if (w.matrix.rows() != static_cast<Eigen::Index>(da) * db || w.matrix.cols() != w.matrix.rows())
        throw Error(ErrorCode::DimensionMismatch, "witness order is not d_a * d_b");
    ComplexMatrix h = (w.matrix + w.matrix.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    const double cutoff = 1e-14 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    LinearMapSpec m;
    m.kind = MapKind::CustomKraus;
    m.d = da;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        const double lambda = es.eigenvalues()(k);
        if (std::abs(lambda) <= cutoff) continue;
        // <k'|V|i> = sqrt|lambda| <i k'|w_k>
        ComplexMatrix v(db, da);
        for (int i = 0; i < da; ++i)
            for (int kk = 0; kk < db; ++kk) v(kk, i) = es.eigenvectors()(i * db + kk, k);
        m.kraus.push_back(std::sqrt(std::abs(lambda)) * v);
        m.signs.push_back(lambda > 0 ? 1.0 : -1.0);
    }
    if (m.kraus.empty()) {
        m.kraus.push_back(ComplexMatrix::Zero(db, da));
        m.signs.push_back(1.0);
    }
    return m;
}

WitnessOperator schmidt_witness(int d, int n) {
    if (d < 2 || n < 2 || n > d) throw Error(ErrorCode::InvalidOrder, "need 2 <= n <= d");
    WitnessOperator w;
    w.d_a = w.d_b = d;
    w.kind = WitnessKind::SchmidtN;
    w.n = n;
    w.matrix = ComplexMatrix::Identity(d * d, d * d) - (static_cast<double>(d) / (n - 1)) * max_entangled_projector(d);
    return w;
}

WitnessOperator chsh_witness(const std::array<double, 3> &a, const std::array<double, 3> &a2,
                             const std::array<double, 3> &b, const std::array<double, 3> &b2) {
    for (const auto *v : {&a, &a2, &b, &b2}) require_unit(*v);
    const ComplexMatrix bsum = pauli_dot(b) + pauli_dot(b2);
    const ComplexMatrix bdiff = pauli_dot(b) - pauli_dot(b2);
    WitnessOperator w;
    w.d_a = w.d_b = 2;
    w.matrix = 2.0 * ComplexMatrix::Identity(4, 4) - (kron(pauli_dot(a), bsum) + kron(pauli_dot(a2), bdiff));
    return w;
}

WitnessOperator klc_witness(const QuantumState &x) {
    if (!x.bipartite() || x.dims()[0] != x.dims()[1])
        throw Error(ErrorCode::DimensionMismatch, "X must be a d x d bipartite state");
    const int d = x.dims()[0];
    const ComplexMatrix pairwise = kron(max_entangled_projector(2), partial_transpose(x, 1));
    WitnessOperator w;
    w.d_a = w.d_b = 2 * d;
    w.kind = WitnessKind::Entanglement;
    // memory order (A1, B1, A2, B2) -> (A1, A2, B1, B2)
    w.matrix = permute_subsystems(pairwise, {2, 2, d, d}, {0, 2, 1, 3});
    return w;
}

double evaluate_witness(const ComplexMatrix &w, const QuantumState &s) {
    if (w.rows() != s.matrix().rows() || w.cols() != s.matrix().cols())
        throw Error(ErrorCode::DimensionMismatch, "witness and state orders differ");
    return (w.cwiseProduct(s.matrix().transpose())).sum().real();
}

double evaluate_witness(const WitnessOperator &w, const QuantumState &s) { return evaluate_witness(w.matrix, s); }

}  // namespace entglkit
