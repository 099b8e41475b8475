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


#include "entglkit/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "entglkit/distill.hpp"

namespace entglkit {

ComplexMatrix haar_unitary(int d, Rng &rng) {
    if (d < 1) throw Error(ErrorCode::ParamOutOfRange, "dimension must be >= 1");
    ComplexMatrix g(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) g(i, j) = rng.complex_normal() / std::sqrt(2.0);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0) q.col(j) *= r(j, j) / mag;
    }
    return q;
}

RealVector simplex_eigenvalues(int n, Rng &rng) {
    if (n < 1) throw Error(ErrorCode::ParamOutOfRange, "simplex size must be >= 1");
    std::vector<double> cuts(n + 1);
    cuts[0] = 0.0;
    cuts[n] = 1.0;
    for (int i = 1; i < n; ++i) cuts[i] = rng.uniform();
    std::sort(cuts.begin() + 1, cuts.end() - 1);
    RealVector out(n);
    for (int i = 0; i < n; ++i) out(i) = cuts[i + 1] - cuts[i];
    return out / out.sum();
}

QuantumState random_density(const std::vector<int> &dims, Rng &rng) {
    int n = 1;
    for (int d : dims) {
        if (d < 1) throw Error(ErrorCode::ParamOutOfRange, "dimensions must be positive");
        n *= d;
    }
    if (n < 2) throw Error(ErrorCode::ParamOutOfRange, "total dimension must be >= 2");
    const RealVector lambda = simplex_eigenvalues(n, rng);
    const ComplexMatrix u = haar_unitary(n, rng);
    const ComplexMatrix rho = u * lambda.cast<cplx>().asDiagonal() * u.adjoint();
    return QuantumState(rho, dims);
}

namespace {

struct StateOutcome {
    bool ppt = false;
    long long detection_index = 0;  // 0: not detected
};

StateOutcome run_state(const VolumeOptions &opt, int opt_steps, long long index) {
    const std::uint64_t state_seed = mix_seed(opt.seed, static_cast<std::uint64_t>(index));
    Rng rng(state_seed);
    const QuantumState s = random_density({opt.d, opt.d}, rng);
    StateOutcome out;
    if (is_ppt(s)) {
        out.ppt = true;
        return out;
    }
    DistillOptions dopt;
    dopt.n_tests = opt.n_tests;
    dopt.opt_steps = opt_steps;
    dopt.seed = state_seed;
    const DistillVerdict v = distill_test_1copy(s, dopt);
    if (v.detected) out.detection_index = v.detection_index;
    return out;
}

}  // namespace

VolumeReport volume_experiment(const VolumeOptions &opt) {
    if (opt.d < 3 || opt.d > 7) throw Error(ErrorCode::ParamOutOfRange, "dimension must lie in [3, 7]");
    if (opt.n_states < 1 || opt.n_tests < 1) throw Error(ErrorCode::ParamOutOfRange, "need states and tests");
    const int opt_steps = opt.opt_steps < 0 ? 100 * opt.d : opt.opt_steps;
    const auto start = std::chrono::steady_clock::now();

    std::vector<StateOutcome> outcomes(static_cast<std::size_t>(opt.n_states));
    std::atomic<long long> next{0};
    std::atomic<long long> done{0};
    std::mutex progress_mutex;
    auto worker = [&]() {
        for (;;) {
            const long long i = next.fetch_add(1);
            if (i >= opt.n_states) return;
            outcomes[static_cast<std::size_t>(i)] = run_state(opt, opt_steps, i);
            const long long finished = done.fetch_add(1) + 1;
            if (opt.progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                opt.progress(finished);
            }
        }
    };
    const int threads = std::max(1, opt.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto &th : pool) th.join();
    }

    VolumeReport rep;
    rep.d = opt.d;
    rep.n_states = opt.n_states;
    rep.n_tests_per_state = opt.n_tests;
    rep.opt_steps = opt_steps;
    rep.seed = opt.seed;
    const long long last = opt.n_tests + opt_steps;
    std::vector<long long> hist(static_cast<std::size_t>(last + 1), 0);
    for (const auto &o : outcomes) {
        if (o.ppt) {
            ++rep.n_ppt;
            continue;
        }
        ++rep.n_npt;
        if (o.detection_index > 0) {
            ++rep.n_npt_detected;
            ++hist[static_cast<std::size_t>(o.detection_index)];
        }
    }
    rep.frac_ppt = static_cast<double>(rep.n_ppt) / static_cast<double>(rep.n_states);
    const double npt = static_cast<double>(std::max<long long>(rep.n_npt, 1));
    rep.frac_npt_undetected =
        rep.n_npt == 0 ? 0.0 : static_cast<double>(rep.n_npt - rep.n_npt_detected) / npt;

    long long cumulative = 0;
    for (long long t = 1; t <= opt.n_tests; ++t) {
        cumulative += hist[static_cast<std::size_t>(t)];
        rep.detection_curve.emplace_back(t, static_cast<double>(cumulative) / npt);
    }
    if (opt_steps > 0) {
        for (long long t = opt.n_tests + 1; t <= last; ++t) cumulative += hist[static_cast<std::size_t>(t)];
        rep.detection_curve.emplace_back(last, static_cast<double>(cumulative) / npt);
    }
    rep.first_test_fraction = rep.detection_curve.front().second;
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace entglkit
