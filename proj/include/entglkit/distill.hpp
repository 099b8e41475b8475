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


#ifndef ENTGLKIT_DISTILL_HPP
#define ENTGLKIT_DISTILL_HPP

#include <cstdint>

#include "entglkit/qstate.hpp"

namespace entglkit {

struct DistillOptions {
    long long n_tests = 10000;
    int opt_steps = 0;
    std::uint64_t seed = 0;
    double precision = 1e-8;
    long long size_cap = 6561;
};

struct DistillVerdict {
    bool detected = false;
    double min_value = 0.0;     // smallest value over orthonormal 2-planes tried
    ComplexMatrix best_rows;    // 2 x d_B (rows a, b of P = |0><a| + |1><b|)
    ComplexMatrix best_rows_a;  // 2 x d_A^n, only for the multi-copy test
    long long tests_run = 0;
    // 1-based index of the random test that first crossed -precision;
    // n_tests + k when it happened in optimization round k; 0 if never.
    long long detection_index = 0;
    std::uint64_t seed = 0;
    int copies = 1;
    // Multi-copy only: detection came from a lifted single-copy plane, and
    // tests_run / detection_index refer to that single-copy search.
    bool lifted = false;
};

// Min eigenvalue of (1 (x) P) X (1 (x) P)^dagger with P = |0><a| + |1><b|.
double rank2_projection_value(const ComplexMatrix &rho_tb, int d_a, int d_b, const ComplexMatrix &rows);

DistillVerdict distill_test_1copy(const QuantumState &s, const DistillOptions &opt);
DistillVerdict distill_test_ncopy(const QuantumState &s, int n, const DistillOptions &opt);

bool reduction_check(const QuantumState &s);

struct RobustnessDistill {
    bool distillable;
    double lambda;       // min eigenvalue of the partial transpose
    ComplexVector psi;   // its eigenvector
    double bound;        // upper bound on the random Schmidt-2 robustness of psi
};
RobustnessDistill robustness_distill_check(const QuantumState &s);

}  // namespace entglkit

#endif
