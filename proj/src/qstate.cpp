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


#include "entglkit/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "entglkit/rng.hpp"

namespace entglkit {

const char *error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidSubsystem: return "InvalidSubsystem";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::WrongDimension: return "WrongDimension";
        case ErrorCode::NotDetected: return "NotDetected";
        case ErrorCode::PartyCountTooLarge: return "PartyCountTooLarge";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::NotUnitVector: return "NotUnitVector";
        case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
        case ErrorCode::NotOrthonormal: return "NotOrthonormal";
        case ErrorCode::StateIsPPT: return "StateIsPPT";
        case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Error";
}

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

namespace {

int product(const std::vector<int> &dims) {
    return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
}

double one_norm(const ComplexMatrix &m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().colwise().sum().maxCoeff();
}

// Digits of a flat index, most significant factor first.
void to_digits(int index, const std::vector<int> &dims, std::vector<int> &digits) {
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        digits[k] = index % dims[k];
        index /= dims[k];
    }
}

int from_digits(const std::vector<int> &digits, const std::vector<int> &dims) {
    int index = 0;
    for (size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digits[k];
    return index;
}

void check_dims(const ComplexMatrix &m, const std::vector<int> &dims) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "matrix is not square");
    for (int d : dims)
        if (d < 1) throw Error(ErrorCode::DimensionMismatch, "subsystem dimension < 1");
    if (product(dims) != m.rows())
        throw Error(ErrorCode::DimensionMismatch, "product of dims does not match matrix order");
}

}  // namespace

QuantumState::QuantumState(const ComplexMatrix &matrix, std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.size() < 2) throw Error(ErrorCode::DimensionMismatch, "a state needs at least two subsystems");
    check_dims(matrix, dims_);
    if (!matrix.allFinite()) throw Error(ErrorCode::InvariantViolation, "non-finite entries");
    double scale = std::max(1.0, one_norm(matrix));
    if (one_norm(matrix - matrix.adjoint()) > tol::herm * scale)
        throw Error(ErrorCode::InvariantViolation, "matrix is not Hermitian");
    matrix_ = (matrix + matrix.adjoint()) / 2.0;
    double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > tol::trace * scale) {
        std::ostringstream os;
        os.precision(17);
        os << "trace is " << tr << ", expected 1";
        throw Error(ErrorCode::InvariantViolation, os.str());
    }
    matrix_ /= tr;
    double lmin = min_eigenvalue(matrix_);
    if (lmin < -tol::psd) {
        std::ostringstream os;
        os.precision(17);
        os << "matrix is not positive semidefinite (min eigenvalue " << lmin << ")";
        throw Error(ErrorCode::InvariantViolation, os.str());
    }
}

PureStateVector::PureStateVector(const ComplexVector &amplitudes, int d_a, int d_b)
    : amplitudes_(amplitudes), d_a_(d_a), d_b_(d_b) {
    if (d_a < 1 || d_b < 1 || amplitudes.size() != static_cast<Eigen::Index>(d_a) * d_b)
        throw Error(ErrorCode::DimensionMismatch, "amplitude count must equal d_a * d_b");
    if (std::abs(amplitudes.norm() - 1.0) > tol::norm)
        throw Error(ErrorCode::InvariantViolation, "vector is not normalized");
}

ComplexMatrix PureStateVector::coefficient_matrix() const {
    ComplexMatrix psi(d_a_, d_b_);
    for (int i = 0; i < d_a_; ++i)
        for (int j = 0; j < d_b_; ++j) psi(i, j) = amplitudes_(i * d_b_ + j);
    return psi;
}

ComplexMatrix PureStateVector::projector() const { return amplitudes_ * amplitudes_.adjoint(); }

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, const std::vector<int> &dims,
                            const std::vector<int> &keep) {
    check_dims(m, dims);
    if (keep.empty()) throw Error(ErrorCode::InvalidSubsystem, "keep set is empty");
    std::vector<bool> kept(dims.size(), false);
    for (int k : keep) {
        if (k < 0 || k >= static_cast<int>(dims.size()))
            throw Error(ErrorCode::InvalidSubsystem, "subsystem index out of range");
        kept[k] = true;
    }
    std::vector<int> kept_dims, traced_dims;
    for (size_t k = 0; k < dims.size(); ++k) (kept[k] ? kept_dims : traced_dims).push_back(dims[k]);
    int nk = product(kept_dims), nt = product(traced_dims);

    // Flat index of (kept digits, traced digits) in the original ordering.
    std::vector<int> full(dims.size()), kd(kept_dims.size()), td(traced_dims.size());
    std::vector<int> index_of(static_cast<size_t>(nk) * nt);
    for (int a = 0; a < nk; ++a) {
        to_digits(a, kept_dims, kd);
        for (int t = 0; t < nt; ++t) {
            to_digits(t, traced_dims, td);
            size_t ik = 0, it = 0;
            for (size_t k = 0; k < dims.size(); ++k) full[k] = kept[k] ? kd[ik++] : td[it++];
            index_of[static_cast<size_t>(a) * nt + t] = from_digits(full, dims);
        }
    }
    ComplexMatrix out = ComplexMatrix::Zero(nk, nk);
    for (int a = 0; a < nk; ++a)
        for (int b = 0; b < nk; ++b) {
            cplx acc = 0.0;
            for (int t = 0; t < nt; ++t)
                acc += m(index_of[static_cast<size_t>(a) * nt + t], index_of[static_cast<size_t>(b) * nt + t]);
            out(a, b) = acc;
        }
    return out;
}

QuantumState partial_trace(const QuantumState &s, const std::vector<int> &keep) {
    ComplexMatrix reduced = partial_trace(s.matrix(), s.dims(), keep);
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> kept_dims;
    for (int k : sorted) kept_dims.push_back(s.dims()[k]);
    // A single kept factor still gets a bipartite label (d, 1) so the
    // QuantumState invariants (at least two factors) hold.
    if (kept_dims.size() == 1) kept_dims.push_back(1);
    return QuantumState(reduced, kept_dims);
}

ComplexMatrix partial_transpose(const ComplexMatrix &m, const std::vector<int> &dims, int subsystem) {
    check_dims(m, dims);
    if (subsystem < 0 || subsystem >= static_cast<int>(dims.size()))
        throw Error(ErrorCode::InvalidSubsystem, "subsystem index out of range");
    int stride = 1;
    for (size_t k = subsystem + 1; k < dims.size(); ++k) stride *= dims[k];
    const int ds = dims[subsystem];
    const Eigen::Index n = m.rows();
    ComplexMatrix out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        int di = static_cast<int>(i / stride) % ds;
        for (Eigen::Index j = 0; j < n; ++j) {
            int dj = static_cast<int>(j / stride) % ds;
            out(i + static_cast<Eigen::Index>(dj - di) * stride, j + static_cast<Eigen::Index>(di - dj) * stride) = m(i, j);
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const QuantumState &s, int subsystem) {
    return partial_transpose(s.matrix(), s.dims(), subsystem);
}

ComplexMatrix permute_subsystems(const ComplexMatrix &m, const std::vector<int> &dims,
                                 const std::vector<int> &perm) {
    check_dims(m, dims);
    if (perm.size() != dims.size()) throw Error(ErrorCode::DimensionMismatch, "permutation length");
    std::vector<int> check = perm;
    std::sort(check.begin(), check.end());
    for (size_t k = 0; k < check.size(); ++k)
        if (check[k] != static_cast<int>(k)) throw Error(ErrorCode::InvalidSubsystem, "not a permutation");
    std::vector<int> new_dims(dims.size());
    for (size_t k = 0; k < dims.size(); ++k) new_dims[k] = dims[perm[k]];
    const int n = static_cast<int>(m.rows());
    std::vector<int> source(n), nd(dims.size()), od(dims.size());
    for (int i = 0; i < n; ++i) {
        to_digits(i, new_dims, nd);
        for (size_t k = 0; k < dims.size(); ++k) od[perm[k]] = nd[k];
        source[i] = from_digits(od, dims);
    }
    ComplexMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = m(source[i], source[j]);
    return out;
}

ComplexMatrix realign(const ComplexMatrix &m, int d_a, int d_b) {
    check_dims(m, {d_a, d_b});
    ComplexMatrix out(d_a * d_a, d_b * d_b);
    for (int i = 0; i < d_a; ++i)
        for (int j = 0; j < d_a; ++j)
            for (int k = 0; k < d_b; ++k)
                for (int l = 0; l < d_b; ++l) out(i * d_a + j, k * d_b + l) = m(i * d_b + k, j * d_b + l);
    return out;
}

ComplexMatrix realign(const QuantumState &s) {
    if (!s.bipartite()) throw Error(ErrorCode::NotBipartite, "realignment needs a bipartite state");
    return realign(s.matrix(), s.dims()[0], s.dims()[1]);
}

double trace_norm(const ComplexMatrix &a) {
    if (a.size() == 0) return 0.0;
    Eigen::BDCSVD<ComplexMatrix> svd(a);
    return svd.singularValues().sum();
}

SchmidtData schmidt_decompose(const PureStateVector &psi) {
    Eigen::JacobiSVD<ComplexMatrix> svd(psi.coefficient_matrix(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    SchmidtData out;
    out.coefficients = svd.singularValues();
    const Eigen::Index k = out.coefficients.size();
    out.left_basis = svd.matrixU().leftCols(k);
    out.right_basis = svd.matrixV().leftCols(k).conjugate();
    out.rank = 0;
    for (Eigen::Index i = 0; i < k; ++i)
        if (out.coefficients(i) > tol::rank) ++out.rank;
    return out;
}

PureStateVector max_entangled(int d) {
    if (d < 2) throw Error(ErrorCode::ParamOutOfRange, "d must be at least 2");
    ComplexVector v = ComplexVector::Zero(d * d);
    for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
    return PureStateVector(v, d, d);
}

bool is_hermitian(const ComplexMatrix &h, double tolerance) {
    if (h.rows() != h.cols()) return false;
    return one_norm(h - h.adjoint()) <= tolerance * std::max(1.0, one_norm(h));
}

RealVector eigenvalues(const ComplexMatrix &h) {
    if (!is_hermitian(h)) throw Error(ErrorCode::NotHermitian, "eigenvalues need a Hermitian matrix");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix &h) { return eigenvalues(h)(0); }

int numerical_rank(const ComplexMatrix &h, double tolerance) {
    Eigen::BDCSVD<ComplexMatrix> svd(h);
    return static_cast<int>((svd.singularValues().array() > tolerance).count());
}

bool is_ppt(const QuantumState &s, double tolerance) {
    if (!s.bipartite()) throw Error(ErrorCode::NotBipartite, "PPT test needs a bipartite state");
    return min_eigenvalue(partial_transpose(s, 1)) >= -tolerance;
}

double max_entangled_fidelity(const QuantumState &s) {
    if (!s.bipartite() || s.dims()[0] != s.dims()[1])
        throw Error(ErrorCode::DimensionMismatch, "fidelity needs a d x d bipartite state");
    const int d = s.dims()[0];
    cplx acc = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) acc += s.matrix()(i * d + i, j * d + j);
    return acc.real() / d;
}

ComplexMatrix swap_operator(int d) {
    ComplexMatrix f = ComplexMatrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
    return f;
}

ComplexMatrix max_entangled_projector(int d) { return max_entangled(d).projector(); }

ComplexMatrix projector(const ComplexVector &v) { return v * v.adjoint(); }

ComplexVector basis_vector(int d, int i) {
    ComplexVector v = ComplexVector::Zero(d);
    v(i) = 1.0;
    return v;
}

}  // namespace entglkit
