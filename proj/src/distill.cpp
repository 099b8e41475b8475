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


#include "entglkit/distill.hpp"

#include <cmath>
#include <limits>

#include "entglkit/rng.hpp"
#include "entglkit/robustness.hpp"

namespace entglkit {

namespace {

constexpr std::uint64_t kOptSalt = 0x6F7074696D697A65ULL;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Two orthonormal kets in C^n; the first two rows of a Haar unitary have the
// same law as Gram-Schmidt applied to two complex Gaussian vectors.
ComplexMatrix random_frame(int n, Rng &rng) {
    ComplexMatrix rows(2, n);
    for (int r = 0; r < 2; ++r)
        for (int k = 0; k < n; ++k) rows(r, k) = rng.complex_normal();
    rows.row(0).normalize();
    rows.row(1) -= rows.row(0).dot(rows.row(1)) * rows.row(0);
    rows.row(1).normalize();
    return rows;
}

// Gram-Schmidt on the two rows; false when they are (numerically) parallel.
bool orthonormalize(ComplexMatrix &rows) {
    const double n0 = rows.row(0).norm();
    if (n0 < 1e-300) return false;
    rows.row(0) /= n0;
    rows.row(1) -= rows.row(0).dot(rows.row(1)) * rows.row(0);
    const double n1 = rows.row(1).norm();
    if (n1 < 1e-12) return false;
    rows.row(1) /= n1;
    return true;
}

bool is_orthonormal(const ComplexMatrix &rows, double tolerance) {
    const ComplexMatrix g = rows.conjugate() * rows.transpose();
    return (g - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= tolerance;
}

double hermitian_min(const ComplexMatrix &m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

// (1 (x) P) X (1 (x) P)^dagger for arbitrary (not necessarily orthonormal) rows,
// indexed (i, s) -> 2 i + s.
ComplexMatrix projected_matrix(const ComplexMatrix &x, int d_a, int d_b, const ComplexMatrix &rows) {
    const ComplexMatrix p = rows.conjugate();  // P = |0><a| + |1><b|
    const ComplexMatrix pt = p.adjoint();
    ComplexMatrix y(static_cast<Eigen::Index>(d_a) * d_b, 2 * d_a);
    for (int j = 0; j < d_a; ++j) y.middleCols(2 * j, 2).noalias() = x.middleCols(j * d_b, d_b) * pt;
    ComplexMatrix m(2 * d_a, 2 * d_a);
    for (int i = 0; i < d_a; ++i) m.middleRows(2 * i, 2).noalias() = p * y.middleRows(i * d_b, d_b);
    return m;
}

double projected_value(const ComplexMatrix &x, int d_a, int d_b, const ComplexMatrix &rows) {
    return hermitian_min(projected_matrix(x, d_a, d_b, rows));
}

// Objective over (rows_a, rows_b); rows_a is ignored for a single copy.
class Objective {
   public:
    virtual ~Objective() = default;
    virtual double value(const ComplexMatrix &rows_a, const ComplexMatrix &rows_b) const = 0;
    virtual int dim_a() const = 0;
    virtual int dim_b() const = 0;
    virtual bool project_a() const = 0;
};

class SingleCopy : public Objective {
   public:
    SingleCopy(ComplexMatrix x, int d_a, int d_b) : x_(std::move(x)), d_a_(d_a), d_b_(d_b) {}
    double value(const ComplexMatrix &, const ComplexMatrix &rows_b) const override {
        return projected_value(x_, d_a_, d_b_, rows_b);
    }
    int dim_a() const override { return d_a_; }
    int dim_b() const override { return d_b_; }
    bool project_a() const override { return false; }

   private:
    ComplexMatrix x_;
    int d_a_, d_b_;
};

// (rho^{T_B})^{(x) n} restricted to span{a_s (x) b_t}. The tensor power is
// never formed; it is applied one copy (mode) at a time in the interleaved
// ordering A1 B1 A2 B2 ...
class MultiCopy : public Objective {
   public:
    MultiCopy(ComplexMatrix x, int d_a, int d_b, int n) : x_(std::move(x)), n_(n), q_(d_a * d_b) {
        big_a_ = big_b_ = 1;
        for (int c = 0; c < n; ++c) {
            big_a_ *= d_a;
            big_b_ *= d_b;
        }
        offset_a_.resize(big_a_);
        offset_b_.resize(big_b_);
        for (int alpha = 0; alpha < big_a_; ++alpha) offset_a_[alpha] = interleave(alpha, d_a, d_b, true);
        for (int beta = 0; beta < big_b_; ++beta) offset_b_[beta] = interleave(beta, d_a, d_b, false);
    }

    double value(const ComplexMatrix &rows_a, const ComplexMatrix &rows_b) const override {
        const long long total = static_cast<long long>(big_a_) * big_b_;
        ComplexMatrix w = ComplexMatrix::Zero(total, 4);
        for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t)
                for (int alpha = 0; alpha < big_a_; ++alpha) {
                    const cplx ca = rows_a(s, alpha);
                    if (ca == cplx(0.0)) continue;
                    for (int beta = 0; beta < big_b_; ++beta)
                        w(offset_a_[alpha] + offset_b_[beta], 2 * s + t) = ca * rows_b(t, beta);
                }
        ComplexMatrix yw = w;
        for (int k = 0; k < 4; ++k) apply_power(yw.col(k).data());
        return hermitian_min(w.adjoint() * yw);
    }
    int dim_a() const override { return big_a_; }
    int dim_b() const override { return big_b_; }
    bool project_a() const override { return big_a_ > 2; }

   private:
    long long interleave(int flat, int d_a, int d_b, bool side_a) const {
        long long out = 0, weight = 1;
        for (int c = n_ - 1; c >= 0; --c) {
            const int dside = side_a ? d_a : d_b;
            const int digit = flat % dside;
            flat /= dside;
            out += (side_a ? digit * d_b : digit) * weight;
            weight *= q_;
        }
        return out;
    }

    void apply_power(cplx *v) const {
        using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
        long long left = 1, right = 1;
        for (int c = 1; c < n_; ++c) right *= q_;
        for (int c = 0; c < n_; ++c) {
            for (long long l = 0; l < left; ++l) {
                Eigen::Map<RowMat> block(v + l * q_ * right, q_, right);
                RowMat tmp = x_ * block;
                block = tmp;
            }
            left *= q_;
            right /= q_;
        }
    }

    ComplexMatrix x_;
    int n_, q_;
    int big_a_, big_b_;
    std::vector<long long> offset_a_, offset_b_;
};

// Planes on n copies built from a single-copy B plane: the A plane is the
// A-side support of the minimizing eigenvector. Empty rows when no product
// vector with a positive diagonal entry exists.
std::pair<ComplexMatrix, ComplexMatrix> lift_single_copy(const ComplexMatrix &x, int d_a, int d_b,
                                                         const ComplexMatrix &rows_b, int n) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(projected_matrix(x, d_a, d_b, rows_b));
    const ComplexVector v = es.eigenvectors().col(0);
    ComplexMatrix support(d_a, 2);
    for (int i = 0; i < d_a; ++i)
        for (int s = 0; s < 2; ++s) support(i, s) = v(2 * i + s);
    // Orthonormal basis of a 2-plane containing the column space.
    Eigen::HouseholderQR<ComplexMatrix> qr(support);
    const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d_a, 2);

    Eigen::Index best = 0;
    const double c = x.diagonal().real().maxCoeff(&best);
    if (!(c > 0.0)) return {};
    const ComplexVector e = basis_vector(d_a, static_cast<int>(best / d_b));
    const ComplexVector f = basis_vector(d_b, static_cast<int>(best % d_b));

    ComplexMatrix rows_a(2, 1), rows_b_out(2, 1);
    for (int r = 0; r < 2; ++r) {
        ComplexVector ka = q.col(r), kb = rows_b.row(r).transpose();
        for (int k = 1; k < n; ++k) {
            ka = kron(ka, e);
            kb = kron(kb, f);
        }
        if (r == 0) {
            rows_a.resize(2, ka.size());
            rows_b_out.resize(2, kb.size());
        }
        rows_a.row(r) = ka.transpose();
        rows_b_out.row(r) = kb.transpose();
    }
    return {rows_a, rows_b_out};
}

DistillVerdict run_search(const Objective &obj, const DistillOptions &opt, int copies) {
    DistillVerdict out;
    out.seed = opt.seed;
    out.copies = copies;
    const int da = obj.dim_a(), db = obj.dim_b();
    ComplexMatrix fixed_a = ComplexMatrix::Zero(2, da);
    if (!obj.project_a()) {
        fixed_a(0, 0) = 1.0;
        if (da > 1) fixed_a(1, 1) = 1.0;
    }

    double best = kInf;
    ComplexMatrix best_a = fixed_a, best_b;
    long long t = 0;
    for (t = 1; t <= opt.n_tests; ++t) {
        Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(t)));
        ComplexMatrix rows_a = obj.project_a() ? random_frame(da, rng) : fixed_a;
        ComplexMatrix rows_b = random_frame(db, rng);
        const double v = obj.value(rows_a, rows_b);
        if (v < best) {
            best = v;
            best_a = rows_a;
            best_b = rows_b;
        }
        if (best < -opt.precision) {
            out.detected = true;
            out.detection_index = t;
            break;
        }
    }
    out.tests_run = std::min(t, opt.n_tests);

    if (!out.detected && opt.opt_steps > 0 && best_b.size() > 0) {
        Rng rng(mix_seed(opt.seed ^ kOptSalt, static_cast<std::uint64_t>(copies)));
        ComplexMatrix cur_a = best_a, cur_b = best_b;
        double cur = best;
        // Certified value: recompute on the Gram-Schmidt frame spanning the
        // current rows, since the coordinate moves drift off orthonormality.
        auto certify = [&](long long index) {
            ComplexMatrix ga = cur_a, gb = cur_b;
            if ((obj.project_a() && !orthonormalize(ga)) || !orthonormalize(gb)) return;
            const double v = obj.value(ga, gb);
            if (v < best) {
                best = v;
                best_a = ga;
                best_b = gb;
            }
            if (best < -opt.precision) {
                out.detected = true;
                out.detection_index = index;
            }
        };
        auto sweep = [&](ComplexMatrix &rows, long long round) {
            for (int r = 0; r < 2 && !out.detected; ++r)
                for (Eigen::Index k = 0; k < rows.cols() && !out.detected; ++k) {
                    const Eigen::RowVectorXcd saved = rows.row(r);
                    rows(r, k) = rng.complex_normal();
                    rows.row(r).normalize();
                    const double v = obj.value(cur_a, cur_b);
                    if (v < cur) {
                        cur = v;
                        if (v < -opt.precision) certify(round);
                    } else {
                        rows.row(r) = saved;
                    }
                }
        };
        for (int round = 1; round <= opt.opt_steps && !out.detected; ++round) {
            if (obj.project_a()) sweep(cur_a, opt.n_tests + round);
            sweep(cur_b, opt.n_tests + round);
        }
        if (!out.detected) certify(opt.n_tests + opt.opt_steps);
    }
    out.min_value = best;
    out.best_rows = best_b;
    if (copies > 1) out.best_rows_a = best_a;
    return out;
}

}  // namespace

double rank2_projection_value(const ComplexMatrix &rho_tb, int d_a, int d_b, const ComplexMatrix &rows) {
    if (rho_tb.rows() != static_cast<Eigen::Index>(d_a) * d_b || rho_tb.cols() != rho_tb.rows())
        throw Error(ErrorCode::DimensionMismatch, "operator order is not d_a * d_b");
    if (rows.rows() != 2 || rows.cols() != d_b) throw Error(ErrorCode::DimensionMismatch, "rows must be 2 x d_b");
    if (!is_hermitian(rho_tb)) throw Error(ErrorCode::NotHermitian, "partial transpose must be Hermitian");
    if (!is_orthonormal(rows, 1e-8)) throw Error(ErrorCode::NotOrthonormal, "rows must be orthonormal");
    return projected_value(rho_tb, d_a, d_b, rows);
}

DistillVerdict distill_test_1copy(const QuantumState &s, const DistillOptions &opt) {
    if (!s.bipartite()) throw Error(ErrorCode::NotBipartite, "distillability test needs a bipartite state");
    if (s.dims()[1] < 2) throw Error(ErrorCode::DimensionMismatch, "B side must have dimension >= 2");
    SingleCopy obj(partial_transpose(s, 1), s.dims()[0], s.dims()[1]);
    return run_search(obj, opt, 1);
}

DistillVerdict distill_test_ncopy(const QuantumState &s, int n, const DistillOptions &opt) {
    if (!s.bipartite()) throw Error(ErrorCode::NotBipartite, "distillability test needs a bipartite state");
    if (n < 1) throw Error(ErrorCode::ParamOutOfRange, "copies must be >= 1");
    if (n == 1) return distill_test_1copy(s, opt);
    double size = 1.0;
    for (int c = 0; c < n; ++c) size *= static_cast<double>(s.dim());
    if (size > static_cast<double>(opt.size_cap))
        throw Error(ErrorCode::SizeCapExceeded, "tensor power exceeds the size cap");
    const ComplexMatrix x = partial_transpose(s, 1);
    MultiCopy obj(x, s.dims()[0], s.dims()[1], n);

    // A single-copy certificate lifts to n copies: tensor both planes with a
    // fixed product vector |e f> on the remaining copies. The projected block
    // becomes M (x) c^(n-1) with c = <e f|X|e f> > 0, so its sign survives.
    const DistillVerdict single = distill_test_1copy(s, opt);
    if (single.detected) {
        const auto [rows_a, rows_b] = lift_single_copy(x, s.dims()[0], s.dims()[1], single.best_rows, n);
        if (rows_a.size() > 0) {
            const double v = obj.value(rows_a, rows_b);
            if (v < -opt.precision) {
                DistillVerdict out = single;
                out.copies = n;
                out.min_value = v;
                out.best_rows = rows_b;
                out.best_rows_a = rows_a;
                out.lifted = true;
                return out;
            }
        }
    }
    return run_search(obj, opt, n);
}

bool reduction_check(const QuantumState &s) {
    if (!s.bipartite()) throw Error(ErrorCode::NotBipartite, "reduction check needs a bipartite state");
    const int da = s.dims()[0], db = s.dims()[1];
    const ComplexMatrix rho_a = partial_trace(s.matrix(), s.dims(), {0});
    const ComplexMatrix rho_b = partial_trace(s.matrix(), s.dims(), {1});
    const ComplexMatrix left = kron(ComplexMatrix::Identity(da, da), rho_b) - s.matrix();
    const ComplexMatrix right = kron(rho_a, ComplexMatrix::Identity(db, db)) - s.matrix();
    return min_eigenvalue(left) < -tol::psd || min_eigenvalue(right) < -tol::psd;
}

RobustnessDistill robustness_distill_check(const QuantumState &s) {
    if (!s.bipartite() || s.dims()[0] != s.dims()[1])
        throw Error(ErrorCode::DimensionMismatch, "needs a d x d bipartite state");
    const int d = s.dims()[0];
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(partial_transpose(s, 1));
    const double lambda = es.eigenvalues()(0);
    if (lambda >= -tol::psd) throw Error(ErrorCode::StateIsPPT, "state has a positive partial transpose");
    ComplexVector psi = es.eigenvectors().col(0).normalized();
    const SchmidtData sd = schmidt_decompose(PureStateVector(psi, d, d));
    const double bound = random_schmidt_upper(SchmidtSpectrum::from(sd, d), 2);
    return {lambda < -bound, lambda, psi, bound};
}

}  // namespace entglkit
