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


#ifndef ENTGLKIT_MONTECARLO_HPP
#define ENTGLKIT_MONTECARLO_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "entglkit/qstate.hpp"
#include "entglkit/rng.hpp"

namespace entglkit {

// Haar unitary from the QR factorization of a Ginibre matrix, with the phases
// of diag(R) moved into Q.
ComplexMatrix haar_unitary(int d, Rng &rng);

// Uniform point on the probability simplex (sorted-uniform spacings).
RealVector simplex_eigenvalues(int n, Rng &rng);

// U diag(lambda) U^dagger with lambda uniform on the simplex and U Haar.
QuantumState random_density(const std::vector<int> &dims, Rng &rng);

struct VolumeOptions {
    int d = 3;
    long long n_states = 10000;
    long long n_tests = 1000;
    int opt_steps = -1;  // -1 selects 100 * d
    std::uint64_t seed = 0;
    int threads = 1;
    // Called with the number of finished states; may be empty.
    std::function<void(long long)> progress;
};

struct VolumeReport {
    int d = 0;
    long long n_states = 0;
    long long n_tests_per_state = 0;
    int opt_steps = 0;
    std::uint64_t seed = 0;
    long long n_ppt = 0;
    long long n_npt = 0;
    long long n_npt_detected = 0;
    double frac_ppt = 0.0;
    // Fractions below are relative to the NPT states.
    double frac_npt_undetected = 0.0;
    double first_test_fraction = 0.0;
    std::vector<std::pair<long long, double>> detection_curve;
    double wall_time = 0.0;
};

VolumeReport volume_experiment(const VolumeOptions &opt);

}  // namespace entglkit

#endif
