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


#include <gtest/gtest.h>

#include <cmath>

#include "entglkit/distill.hpp"
#include "entglkit/robustness.hpp"
#include "entglkit/zoo.hpp"
#include "support.hpp"

using namespace entglkit;
using namespace entglkit::testing;

namespace {

ComplexMatrix singlet() {
    ComplexVector v = ComplexVector::Zero(4);
    v(1) = 1.0 / std::sqrt(2.0);
    v(2) = -1.0 / std::sqrt(2.0);
    return projector(v);
}

ComplexMatrix frame(int d, Rng &rng) {
    ComplexMatrix rows(2, d);
    const ComplexVector a = random_ket(d, rng);
    ComplexVector b = random_ket(d, rng);
    b -= a.dot(b) * a;
    b.normalize();
    rows.row(0) = a.transpose();
    rows.row(1) = b.transpose();
    return rows;
}

// Independent route: explicit isometry V = 1 (x) P^dagger, then V^dagger X V.
double oracle_value(const ComplexMatrix &x, int d_a, int d_b, const ComplexMatrix &rows) {
    const ComplexMatrix p = rows.conjugate();
    const ComplexMatrix v = kron(ComplexMatrix::Identity(d_a, d_a), ComplexMatrix(p.adjoint()));
    return min_eigenvalue(v.adjoint() * x * v);
}

DistillOptions opts(long long tests, std::uint64_t seed, int opt_steps = 0) {
    DistillOptions o;
    o.n_tests = tests;
    o.seed = seed;
    o.opt_steps = opt_steps;
    return o;
}

}  // namespace

TEST(Rank2Projection, SingletOnStandardPlane) {
    const QuantumState s(singlet(), {2, 2});
    ComplexMatrix rows = ComplexMatrix::Identity(2, 2);
    EXPECT_NEAR(rank2_projection_value(partial_transpose(s, 1), 2, 2, rows), -0.5, 1e-14);
}

TEST(Rank2Projection, MatchesIsometryOracle) {
    Rng rng(21);
    for (int t = 0; t < 50; ++t) {
        const int d_a = 2 + t % 2, d_b = 2 + (t / 2) % 3;
        const QuantumState s = random_density({d_a, d_b}, rng);
        const ComplexMatrix x = partial_transpose(s, 1);
        const ComplexMatrix rows = frame(d_b, rng);
        EXPECT_NEAR(rank2_projection_value(x, d_a, d_b, rows), oracle_value(x, d_a, d_b, rows), 1e-12);
    }
}

// Sampling Schmidt-rank-2 vectors inside the plane never undercuts the value.
TEST(Rank2Projection, IsMinimumOverVectorsInThePlane) {
    Rng rng(22);
    for (int d : {2, 3}) {
        const QuantumState s = random_density({d, d}, rng);
        const ComplexMatrix x = partial_transpose(s, 1);
        const ComplexMatrix rows = frame(d, rng);
        const double value = rank2_projection_value(x, d, d, rows);
        double best = 1e9;
        for (int k = 0; k < 4000; ++k) {
            const ComplexVector c = random_ket(2 * d, rng);
            ComplexVector psi = ComplexVector::Zero(d * d);
            for (int i = 0; i < d; ++i)
                psi.segment(i * d, d) = c(2 * i) * rows.row(0).transpose() + c(2 * i + 1) * rows.row(1).transpose();
            best = std::min(best, (psi.adjoint() * x * psi)(0, 0).real());
        }
        EXPECT_GE(best, value - 1e-12);
        EXPECT_LT(best - value, 0.05);
    }
}

TEST(Rank2Projection, PptStatesStayNonNegative) {
    Rng rng(23);
    const QuantumState s = chessboard().state;
    const ComplexMatrix x = partial_transpose(s, 1);
    for (int t = 0; t < 500; ++t) EXPECT_GE(rank2_projection_value(x, 3, 3, frame(3, rng)), -1e-9);
}

TEST(Rank2Projection, RejectsNonOrthonormalRows) {
    const ComplexMatrix x = partial_transpose(QuantumState(singlet(), {2, 2}), 1);
    ComplexMatrix rows = ComplexMatrix::Ones(2, 2);
    try {
        rank2_projection_value(x, 2, 2, rows);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotOrthonormal);
    }
}

TEST(Distill1Copy, WernerExamples) {
    const DistillVerdict yes = distill_test_1copy(werner(3, -0.6).state, opts(10000, 5));
    EXPECT_TRUE(yes.detected);
    EXPECT_LT(yes.min_value, -1e-8);
    EXPECT_TRUE((yes.best_rows * yes.best_rows.adjoint()).isApprox(ComplexMatrix::Identity(2, 2), 1e-8));
    const DistillVerdict no = distill_test_1copy(werner(3, -0.4).state, opts(10000, 5));
    EXPECT_FALSE(no.detected);
    EXPECT_EQ(no.tests_run, 10000);
    EXPECT_EQ(no.detection_index, 0);
}

TEST(Distill1Copy, WernerPlaneValueIsAnalytic) {
    // Any orthonormal plane of a Werner state gives (1 + 2 beta) / (d^2 + beta d).
    Rng rng(24);
    for (double beta : {-0.9, -0.6, -0.3}) {
        const ComplexMatrix x = partial_transpose(werner(3, beta).state, 1);
        for (int t = 0; t < 20; ++t)
            EXPECT_NEAR(rank2_projection_value(x, 3, 3, frame(3, rng)), (1 + 2 * beta) / (9 + 3 * beta), 1e-12);
    }
}

TEST(Distill1Copy, PptZooNeverDetected) {
    for (const auto &p : {chessboard(), edge55(), edge66(), tiles_upb().point, stormer(2.5), rainbow(3, 4, 0.01, 0.5)}) {
        const DistillVerdict v = distill_test_1copy(p.state, opts(1000, 7, 30));
        EXPECT_FALSE(v.detected) << family_name(p.family);
        EXPECT_GE(v.min_value, -1e-9);
    }
}

TEST(Distill1Copy, DeterministicForFixedSeed) {
    Rng rng(25);
    const QuantumState s = random_density({3, 3}, rng);
    const DistillVerdict a = distill_test_1copy(s, opts(300, 99, 20));
    const DistillVerdict b = distill_test_1copy(s, opts(300, 99, 20));
    EXPECT_EQ(a.detected, b.detected);
    EXPECT_EQ(a.min_value, b.min_value);
    EXPECT_EQ(a.tests_run, b.tests_run);
    EXPECT_EQ(a.detection_index, b.detection_index);
    EXPECT_TRUE(a.best_rows == b.best_rows);
}

TEST(Distill1Copy, MonotoneInTestBudget) {
    Rng rng(26);
    for (int k = 0; k < 30; ++k) {
        const QuantumState s = random_density({3, 3}, rng);
        if (is_ppt(s)) continue;
        const std::uint64_t seed = 1000 + k;
        const DistillVerdict small = distill_test_1copy(s, opts(5, seed));
        const DistillVerdict large = distill_test_1copy(s, opts(200, seed));
        if (small.detected) {
            EXPECT_TRUE(large.detected);
            EXPECT_EQ(large.detection_index, small.detection_index);
        }
        EXPECT_LE(large.min_value, small.min_value);
    }
}

TEST(Distill1Copy, RejectsMultipartite) {
    Rng rng(27);
    const QuantumState s = random_density({2, 2, 2}, rng);
    try {
        distill_test_1copy(s, opts(10, 1));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotBipartite);
    }
}

TEST(DistillNCopy, OneCopyReducesToSingleCopyTest) {
    Rng rng(28);
    for (int k = 0; k < 5; ++k) {
        const QuantumState s = random_density({3, 3}, rng);
        const DistillVerdict a = distill_test_1copy(s, opts(200, 50 + k, 10));
        const DistillVerdict b = distill_test_ncopy(s, 1, opts(200, 50 + k, 10));
        EXPECT_EQ(a.detected, b.detected);
        EXPECT_EQ(a.min_value, b.min_value);
    }
}

TEST(DistillNCopy, WatrousTwoCopiesDetected) {
    const QuantumState s = watrous(3, -0.2).state;
    const DistillVerdict v = distill_test_ncopy(s, 2, opts(2000, 11));
    EXPECT_TRUE(v.detected);
    EXPECT_TRUE(v.lifted);
    // The lifted block is the single-copy block times the largest diagonal entry.
    const DistillVerdict one = distill_test_1copy(s, opts(2000, 11));
    const double c = partial_transpose(s, 1).diagonal().real().maxCoeff();
    EXPECT_NEAR(v.min_value, one.min_value * c, 1e-12);
    EXPECT_EQ(v.copies, 2);
    EXPECT_EQ(v.best_rows_a.rows(), 2);
    EXPECT_EQ(v.best_rows_a.cols(), 81);
}

TEST(DistillNCopy, WernerBelowTwoCopyBoundaryNotDetected) {
    const DistillVerdict v = distill_test_ncopy(werner(3, -0.45).state, 2, opts(10000, 12));
    EXPECT_FALSE(v.detected);
    EXPECT_GE(v.min_value, -1e-8);
}

TEST(DistillNCopy, TwoCopiesOfWernerDetectedAboveBoundary) {
    const DistillVerdict v = distill_test_ncopy(werner(3, -0.8).state, 2, opts(2000, 13));
    EXPECT_TRUE(v.detected);
}

TEST(DistillNCopy, SizeCap) {
    try {
        distill_test_ncopy(watrous(3, -0.2).state, 3, opts(10, 1));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeCapExceeded);
    }
    EXPECT_THROW(distill_test_ncopy(werner(3, -0.8).state, 0, opts(10, 1)), Error);
}

TEST(Reduction, Examples) {
    EXPECT_TRUE(reduction_check(QuantumState(max_entangled_projector(3), {3, 3})));
    EXPECT_FALSE(reduction_check(werner(3, -1.0).state));
    EXPECT_TRUE(reduction_check(werner(2, -1.0).state));
    Rng rng(29);
    for (int t = 0; t < 100; ++t) {
        const ComplexMatrix rho = random_product_state(3, 3, rng);
        EXPECT_FALSE(reduction_check(QuantumState(rho, {3, 3})));
    }
}

TEST(RobustnessDistill, DisplayedExample) {
    const RobustnessDistill r = robustness_distill_check(QuantumState(robustness_example_state(), {3, 3}));
    EXPECT_NEAR(r.lambda, -0.125, 1e-12);
    EXPECT_NEAR(r.bound, 1.0 / 15, 1e-12);
    EXPECT_TRUE(r.distillable);
    ComplexVector expected = ComplexVector::Zero(9);
    expected(0) = expected(4) = 1.0 / std::sqrt(3.0);
    expected(8) = -1.0 / std::sqrt(3.0);
    EXPECT_NEAR(std::abs(expected.dot(r.psi)), 1.0, 1e-10);
}

TEST(RobustnessDistill, SingletAndErrors) {
    const RobustnessDistill r = robustness_distill_check(QuantumState(singlet(), {2, 2}));
    EXPECT_NEAR(r.lambda, -0.5, 1e-12);
    EXPECT_NEAR(r.bound, 0.0, 1e-15);
    EXPECT_TRUE(r.distillable);
    try {
        robustness_distill_check(chessboard().state);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::StateIsPPT);
    }
    Rng rng(30);
    EXPECT_THROW(robustness_distill_check(random_density({2, 3}, rng)), Error);
}
