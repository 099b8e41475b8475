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


#include "entglkit/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace entglkit {

namespace {

constexpr double kSumTol = 1e-12;

void prepare(std::vector<double> &lambda) {
    if (lambda.empty()) throw Error(ErrorCode::ParamOutOfRange, "empty spectrum");
    for (double x : lambda)
        if (!(x >= 0.0)) throw Error(ErrorCode::ParamOutOfRange, "spectrum entries must be nonnegative");
    std::sort(lambda.begin(), lambda.end(), std::greater<double>());
}

void check_weights(const BellWeights &p) {
    double total = 0.0;
    for (double x : p) {
        if (!(x >= 0.0)) throw Error(ErrorCode::ParamOutOfRange, "weights must be nonnegative");
        total += x;
    }
    if (std::abs(total - 1.0) > kSumTol) throw Error(ErrorCode::ParamOutOfRange, "weights must sum to 1");
}

}  // namespace

std::vector<double> squared(const SchmidtSpectrum &sp) {
    std::vector<double> out;
    for (double a : sp.coeffs) out.push_back(a * a);
    return out;
}

bool nielsen_feasible(std::vector<double> source, std::vector<double> target) {
    prepare(source);
    prepare(target);
    const size_t n = std::max(source.size(), target.size());
    source.resize(n, 0.0);
    target.resize(n, 0.0);
    double ps = 0.0, pt = 0.0;
    for (size_t k = 0; k < n; ++k) {
        ps += source[k];
        pt += target[k];
        if (pt < ps - kSumTol) return false;
    }
    return true;
}

double max_conversion_prob(std::vector<double> source, std::vector<double> target) {
    prepare(source);
    prepare(target);
    const size_t n = std::max(source.size(), target.size());
    source.resize(n, 0.0);
    target.resize(n, 0.0);
    double best = 1.0;
    // E_k = sum_{i >= k} lambda_i with 1-based k; accumulate from the tail.
    double es = 0.0, et = 0.0;
    for (size_t k = n; k-- > 1;) {
        es += source[k];
        et += target[k];
        if (et > 0.0) best = std::min(best, es / et);
    }
    return std::clamp(best, 0.0, 1.0);
}

Concentration optimal_concentration(std::vector<double> lambda) {
    prepare(lambda);
    Concentration c;
    c.avg_entanglement = 0.0;
    for (size_t j = 1; j <= lambda.size(); ++j) {
        const double next = j < lambda.size() ? lambda[j] : 0.0;
        const double pj = j * (lambda[j - 1] - next);
        c.probs.push_back(pj);
        c.avg_entanglement += pj * std::log2(static_cast<double>(j));
    }
    return c;
}

double e_det(std::vector<double> lambda) {
    prepare(lambda);
    return -std::log2(lambda.front());
}

double shannon_entropy(const std::vector<double> &p) {
    double s = 0.0;
    for (double x : p)
        if (x > 0.0) s -= x * std::log2(x);
    return s;
}

double recurrence_step(double y) {
    if (!(y >= 0.0 && y <= 1.0)) throw Error(ErrorCode::ParamOutOfRange, "fidelity must lie in [0, 1]");
    const double z = 1.0 - y;
    return (9 * y * y + z * z) / (9 * y * y + 6 * y * z + 5 * z * z);
}

std::vector<double> recurrence_iterate(double y0, double tol, int max_iter) {
    if (!(y0 > 0.5 && y0 <= 1.0)) throw Error(ErrorCode::ParamOutOfRange, "need 1/2 < y0 <= 1");
    std::vector<double> traj{y0};
    while (1.0 - traj.back() >= tol && static_cast<int>(traj.size()) <= max_iter)
        traj.push_back(recurrence_step(traj.back()));
    return traj;
}

BellWeights qpa_step(const BellWeights &p) {
    check_weights(p);
    const double p00 = p[0], p01 = p[1], p10 = p[2], p11 = p[3];
    const double norm = (p00 + p11) * (p00 + p11) + (p01 + p10) * (p01 + p10);
    return {(p00 * p00 + p11 * p11) / norm, (p01 * p01 + p10 * p10) / norm, 2 * p01 * p10 / norm,
            2 * p00 * p11 / norm};
}

BellWeights qpa_round(const BellWeights &p) {
    BellWeights sorted = p;
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    return qpa_step(sorted);
}

std::vector<BellWeights> qpa_iterate(const BellWeights &p, int rounds) {
    check_weights(p);
    std::vector<BellWeights> traj{p};
    for (int k = 0; k < rounds; ++k) traj.push_back(qpa_round(traj.back()));
    return traj;
}

std::pair<BellIndex, BellIndex> bxor_bell(BellIndex s, BellIndex t) {
    return {{s.phase ^ t.phase, s.shift}, {t.phase, s.shift ^ t.shift}};
}

Yield breeding_yield(const BellWeights &p) {
    check_weights(p);
    const double raw = 1.0 - shannon_entropy({p.begin(), p.end()});
    return {raw, std::max(0.0, raw)};
}

}  // namespace entglkit
