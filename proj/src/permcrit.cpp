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


#include "entglkit/permcrit.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_set>

namespace entglkit {

namespace {

bool valid_one_line(const std::vector<int> &sigma) {
    std::vector<int> s = sigma;
    std::sort(s.begin(), s.end());
    for (size_t k = 0; k < s.size(); ++k)
        if (s[k] != static_cast<int>(k) + 1) return false;
    return true;
}

std::uint64_t encode(const std::vector<int> &p) {
    std::uint64_t code = 0;
    for (int v : p) code = (code << 4) | static_cast<std::uint64_t>(v);
    return code;
}

// All index relabelings that keep every permutation criterion's trace norm:
// arbitrary reshuffles of the row slots, of the column slots, and the
// global row/column exchange. Size 2 (r!)^2.
std::vector<std::vector<int>> norm_preserving_group(int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(r), q(r);
    std::iota(p.begin(), p.end(), 0);
    const std::vector<int> tau = row_column_swap(r);
    do {
        std::iota(q.begin(), q.end(), 0);
        do {
            std::vector<int> t(2 * r);
            for (int k = 0; k < r; ++k) {
                t[2 * k] = 2 * p[k] + 1;
                t[2 * k + 1] = 2 * q[k] + 2;
            }
            out.push_back(compose(tau, t));
            out.push_back(std::move(t));
        } while (std::next_permutation(q.begin(), q.end()));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

PermutationCriterion::PermutationCriterion(std::vector<int> s, int r_, int d_) : sigma(std::move(s)), r(r_), d(d_) {
    if (r < 2 || d < 2) throw Error(ErrorCode::ParamOutOfRange, "need r >= 2 and d >= 2");
    if (static_cast<int>(sigma.size()) != 2 * r || !valid_one_line(sigma))
        throw Error(ErrorCode::ParamOutOfRange, "sigma is not a permutation of 1..2r");
}

std::vector<int> compose(const std::vector<int> &outer, const std::vector<int> &inner) {
    std::vector<int> out(inner.size());
    for (size_t k = 0; k < inner.size(); ++k) out[k] = outer[inner[k] - 1];
    return out;
}

std::vector<int> inverse(const std::vector<int> &sigma) {
    std::vector<int> out(sigma.size());
    for (size_t k = 0; k < sigma.size(); ++k) out[sigma[k] - 1] = static_cast<int>(k) + 1;
    return out;
}

std::vector<int> row_column_swap(int r) {
    std::vector<int> tau(2 * r);
    for (int k = 0; k < r; ++k) {
        tau[2 * k] = 2 * k + 2;
        tau[2 * k + 1] = 2 * k + 1;
    }
    return tau;
}

std::vector<int> adjoint_permutation(const std::vector<int> &sigma) {
    const std::vector<int> tau = row_column_swap(static_cast<int>(sigma.size()) / 2);
    return compose(tau, compose(inverse(sigma), tau));
}

ComplexMatrix apply_permutation(const ComplexMatrix &a, const std::vector<int> &sigma, int r, int d) {
    if (static_cast<int>(sigma.size()) != 2 * r || !valid_one_line(sigma))
        throw Error(ErrorCode::ParamOutOfRange, "sigma is not a permutation of 1..2r");
    long long n = 1;
    for (int k = 0; k < r; ++k) n *= d;
    if (a.rows() != n || a.cols() != n)
        throw Error(ErrorCode::DimensionMismatch, "operator order is not d^r");

    // Place values of the multi-index positions inside (row, col) flat indices.
    std::vector<long long> weight(2 * r);
    long long w = 1;
    for (int k = r - 1; k >= 0; --k) {
        weight[2 * k] = w;
        weight[2 * k + 1] = w;
        w *= d;
    }
    ComplexMatrix out(n, n);
    std::vector<int> idx(2 * r);
    for (long long row = 0; row < n; ++row) {
        long long rr = row;
        for (int k = r - 1; k >= 0; --k) {
            idx[2 * k] = static_cast<int>(rr % d);
            rr /= d;
        }
        for (long long col = 0; col < n; ++col) {
            long long cc = col;
            for (int k = r - 1; k >= 0; --k) {
                idx[2 * k + 1] = static_cast<int>(cc % d);
                cc /= d;
            }
            long long src_row = 0, src_col = 0;
            for (int k = 0; k < 2 * r; ++k) {
                long long v = idx[sigma[k] - 1] * weight[k];
                if (k % 2 == 0)
                    src_row += v;
                else
                    src_col += v;
            }
            out(row, col) = a(src_row, src_col);
        }
    }
    return out;
}

ComplexMatrix apply_permutation(const QuantumState &s, const PermutationCriterion &c) {
    if (s.parties() != c.r)
        throw Error(ErrorCode::DimensionMismatch, "state party count differs from criterion");
    for (int dk : s.dims())
        if (dk != c.d) throw Error(ErrorCode::DimensionMismatch, "all subsystems must have dimension d");
    return apply_permutation(s.matrix(), c.sigma, c.r, c.d);
}

double criterion_value(const QuantumState &s, const PermutationCriterion &c) {
    return trace_norm(apply_permutation(s, c));
}

ComplexMatrix permutation_witness(const QuantumState &s, const PermutationCriterion &c) {
    ComplexMatrix x = apply_permutation(s, c);
    Eigen::JacobiSVD<ComplexMatrix> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues().sum() <= 1.0)
        throw Error(ErrorCode::NotDetected, "criterion value does not exceed 1");
    ComplexMatrix vu = svd.matrixV() * svd.matrixU().adjoint();
    ComplexMatrix w = ComplexMatrix::Identity(x.rows(), x.cols()) -
                      apply_permutation(vu, adjoint_permutation(c.sigma), c.r, c.d);
    return (w + w.adjoint()) / 2.0;
}

std::vector<int> canonical_tag(const std::vector<int> &sigma) {
    const int r = static_cast<int>(sigma.size()) / 2;
    if (r > 6) throw Error(ErrorCode::PartyCountTooLarge, "canonical_tag supports r <= 6");
    if (static_cast<int>(sigma.size()) != 2 * r || r < 1 || !valid_one_line(sigma))
        throw Error(ErrorCode::ParamOutOfRange, "sigma is not a permutation of 1..2r");
    const std::vector<int> tau = row_column_swap(r);
    const std::vector<int> right[2] = {sigma, compose(sigma, tau)};
    std::vector<int> best;
    for (const auto &t : norm_preserving_group(r))
        for (const auto &s : right) {
            std::vector<int> cand = compose(t, s);
            if (best.empty() || cand < best) best = std::move(cand);
        }
    return best;
}

std::vector<int> canonical_tag(const PermutationCriterion &c) { return canonical_tag(c.sigma); }

CriterionClassification classify_independent(int r) {
    if (r < 2) throw Error(ErrorCode::ParamOutOfRange, "r must be at least 2");
    if (r > 4) throw Error(ErrorCode::PartyCountTooLarge, "classify_independent supports r <= 4");
    const auto group = norm_preserving_group(r);
    const std::vector<int> tau = row_column_swap(r);

    CriterionClassification out;
    out.r = r;
    std::unordered_set<std::uint64_t> seen;
    std::vector<int> sigma(2 * r);
    std::iota(sigma.begin(), sigma.end(), 1);
    // Lexicographic enumeration: the first unseen member of an orbit is its minimum.
    do {
        if (seen.count(encode(sigma))) continue;
        out.representatives.push_back(sigma);
        const std::vector<int> right[2] = {sigma, compose(sigma, tau)};
        for (const auto &t : group)
            for (const auto &s : right) seen.insert(encode(compose(t, s)));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    out.orbit_count = static_cast<int>(out.representatives.size());
    std::vector<int> id(2 * r);
    std::iota(id.begin(), id.end(), 1);
    out.includes_identity = std::find(out.representatives.begin(), out.representatives.end(), id) !=
                            out.representatives.end();
    return out;
}

long long predicted_orbit_count(int r) {
    auto binom = [](int n, int k) {
        long long b = 1;
        for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
        return b;
    };
    long long total = binom(2 * r, r) + (1LL << r);
    if (r % 2 == 0) total += binom(r, r / 2);
    return total / 4;
}

}  // namespace entglkit
