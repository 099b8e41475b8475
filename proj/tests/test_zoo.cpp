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

#include "entglkit/montecarlo.hpp"
#include "entglkit/witness.hpp"
#include "entglkit/zoo.hpp"
#include "support.hpp"

using namespace entglkit;
using namespace entglkit::testing;

namespace {

ComplexMatrix id(int n) { return ComplexMatrix::Identity(n, n); }

}  // namespace

TEST(Werner, Examples) {
    const FamilyPoint w2 = werner(2, -1.0);
    EXPECT_NEAR((w2.state.matrix() * swap_operator(2)).trace().real(), -1.0, 1e-14);
    const FamilyPoint w3 = werner(3, -0.4);
    EXPECT_TRUE(w3.flags.at("entangled"));
    EXPECT_FALSE(w3.flags.at("one_distillable"));
    EXPECT_TRUE(werner(3, 0.0).state.matrix().isApprox(id(9) / 9.0));
    EXPECT_FALSE(werner(3, 0.0).flags.at("entangled"));
    EXPECT_THROW(werner(3, -1.5), Error);
    EXPECT_THROW(werner(1, 0.0), Error);
}

TEST(Werner, PartialTransposeIsIsotropicOperator) {
    for (double beta : {-1.0, -0.6, 0.3}) {
        const int d = 3;
        const ComplexMatrix pt = partial_transpose(werner(d, beta).state, 1) * (d * d + beta * d);
        EXPECT_TRUE(pt.isApprox(id(d * d) + beta * d * max_entangled_projector(d), 1e-12));
    }
}

TEST(Twirl, WernerAndIsotropicInvariance) {
    Rng rng(1);
    const ComplexMatrix w = werner(3, -0.7).state.matrix();
    const ComplexMatrix iso = isotropic(3, 5.0).state.matrix();
    for (int t = 0; t < 100; ++t) {
        const ComplexMatrix u = haar_unitary(3, rng);
        const ComplexMatrix uu = kron(u, u), uc = kron(u, ComplexMatrix(u.conjugate()));
        EXPECT_LT((uu * w * uu.adjoint() - w).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_LT((uc * iso * uc.adjoint() - iso).cwiseAbs().maxCoeff(), 1e-9);
    }
}

TEST(Isotropic, SchmidtNumberThresholds) {
    EXPECT_EQ(isotropic(3, 15.0).params.at("schmidt_number"), 2);
    EXPECT_EQ(isotropic(3, 15.0 + 1e-6).params.at("schmidt_number"), 3);
    EXPECT_EQ(isotropic(3, 0.0).params.at("schmidt_number"), 1);
    EXPECT_TRUE(isotropic(3, 0.0).state.matrix().isApprox(id(9) / 9.0));
    EXPECT_THROW(isotropic(3, -2.0), Error);
}

// Tr(W_{n+1} rho) < 0 exactly when the Schmidt number exceeds n.
TEST(Isotropic, MetadataAgreesWithSchmidtWitnesses) {
    for (int d : {3, 4}) {
        for (int k = 0; k <= 400; ++k) {
            const double beta = -1.0 + 0.25 * k;
            const FamilyPoint p = isotropic(d, beta);
            const int sn = static_cast<int>(p.params.at("schmidt_number"));
            for (int n = 1; n < d; ++n) {
                const double v = evaluate_trace(schmidt_witness(d, n + 1).matrix, p.state.matrix());
                EXPECT_EQ(v < -1e-12, sn > n) << "d=" << d << " beta=" << beta << " n=" << n;
            }
        }
    }
}

TEST(Stormer, Regions) {
    EXPECT_TRUE(is_ppt(stormer(2.5).state));
    EXPECT_FALSE(is_ppt(stormer(0.5).state));
    EXPECT_TRUE(stormer(2.5).flags.at("separable"));
    EXPECT_FALSE(stormer(3.5).flags.at("separable"));
    EXPECT_THROW(stormer(5.5), Error);
}

TEST(Chessboard, Basics) {
    const QuantumState s = chessboard().state;
    EXPECT_TRUE(is_ppt(s));
    EXPECT_NEAR(s.matrix().trace().real(), 1.0, 1e-15);
    EXPECT_NEAR(trace_norm(realign(s)), 7.0 / 6, 1e-12);
}

TEST(Tiles, UnextendibleProductBasis) {
    const TilesUpb t = tiles_upb();
    ASSERT_EQ(t.vectors.size(), 5u);
    ComplexMatrix gram(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) gram(i, j) = t.vectors[i].amplitudes().dot(t.vectors[j].amplitudes());
    EXPECT_TRUE(gram.isApprox(id(5), 1e-14));
    EXPECT_EQ(numerical_rank(t.point.state.matrix()), 4);
    EXPECT_TRUE(is_ppt(t.point.state));
    for (const auto &v : t.vectors) {
        EXPECT_EQ(schmidt_decompose(v).rank, 1);
        EXPECT_NEAR(evaluate_trace(v.projector(), t.point.state.matrix()), 0.0, 1e-14);
    }
    EXPECT_GT(trace_norm(realign(t.point.state)), 1.0);
}

TEST(EdgeStates, RanksAndRealignment) {
    const FamilyPoint e5 = edge55(), e6 = edge66();
    EXPECT_EQ(numerical_rank(e5.state.matrix()), 5);
    EXPECT_EQ(numerical_rank(partial_transpose(e5.state, 1)), 5);
    EXPECT_EQ(numerical_rank(e6.state.matrix()), 6);
    EXPECT_EQ(numerical_rank(partial_transpose(e6.state, 1)), 6);
    EXPECT_TRUE(is_ppt(e5.state));
    EXPECT_TRUE(is_ppt(e6.state));
    EXPECT_GT(trace_norm(realign(e5.state)), 1.0);
    EXPECT_GT(trace_norm(realign(e6.state)), 1.0);
}

TEST(Uuvvf, WernerSquareIsAFamilyMember) {
    const int d = 3;
    for (double beta : {-0.8, -0.3, 0.4}) {
        const double eps = (beta * d + 1) / d;
        const double delta = (beta * beta * d * d - 1 + 2 * eps * d) / (d * d);
        const ComplexMatrix w = werner(d, beta).state.matrix();
        const ComplexMatrix sq = permute_subsystems(kron(w, w), {d, d, d, d}, {0, 2, 1, 3});
        EXPECT_TRUE(uuvvf(d, eps, delta).state.matrix().isApprox(sq, 1e-12));
    }
}

TEST(Uuvvf, FlagsAndValidity) {
    const FamilyPoint p = uuvvf(3, -0.2, 0.1);
    EXPECT_TRUE(p.flags.at("entangled"));
    EXPECT_TRUE(p.flags.at("psi_b"));
    EXPECT_TRUE(p.flags.at("one_distillable"));
    EXPECT_TRUE(uuvvf(3, 0.1, 0.1).flags.at("separable"));
    EXPECT_FALSE(uuvvf(3, 0.0, 0.2).flags.at("entangled"));
    EXPECT_THROW(uuvvf(3, -0.2, 0.9), Error);
    EXPECT_EQ(uuvvf(3, 0.1, 0.1).state.dims(), (std::vector<int>{9, 9}));
}

TEST(Uuvvf, TwoCopyRecursion) {
    const int d = 3;
    // Watrous slice closed form.
    for (double eps : {-0.5, -0.3, -0.1, 0.2}) {
        const auto [e2, d2] = uuvvf_two_copy_recursion(eps, watrous_delta(d, eps), d);
        EXPECT_NEAR(e2, eps * 2 * (eps * d + d * d - 1) / (d * d * eps * eps + d * d - 1), 1e-14);
        EXPECT_NEAR(d2, watrous_delta(d, e2), 1e-12);
    }
    const auto [e0, d0] = uuvvf_two_copy_recursion(0.0, 0.3, d);
    EXPECT_EQ(e0, 0.0);
    EXPECT_NEAR(d0, 9 * 0.09 / 8, 1e-15);
    double eps = -0.1;
    for (int k = 0; k < 5; ++k) {
        const double next = uuvvf_two_copy_recursion(eps, watrous_delta(d, eps), d).first;
        EXPECT_LT(next, eps);
        eps = next;
    }
}

TEST(Uuvvf, RecursionMatchesExplicitProjection) {
    const int d = 3;
    for (double eps : {-0.3, -0.15}) {
        for (double delta : {0.2, 0.5}) {
            const ComplexMatrix rho = uuvvf_pairwise_operator(d, eps, delta);
            const auto c = fit_pair_basis(two_copy_projection(rho / rho.trace(), d), d);
            const double e_num = (c[1] / c[0] * d + 1) / d;
            const double d_num = (c[2] / c[0] * d * d - 1 + 2 * e_num * d) / (d * d);
            const auto [e_rec, d_rec] = uuvvf_two_copy_recursion(eps, delta, d);
            EXPECT_NEAR(e_num, e_rec, 1e-12);
            EXPECT_NEAR(d_num, d_rec, 1e-12);
        }
    }
}

TEST(Watrous, Flags) {
    const FamilyPoint w = watrous(3, -0.2);
    EXPECT_TRUE(w.flags.at("entangled"));
    EXPECT_TRUE(w.flags.at("one_distillable"));
    EXPECT_FALSE(watrous(3, -0.1).flags.at("one_distillable"));
    EXPECT_TRUE(watrous(3, 0.0).flags.at("separable"));
    EXPECT_THROW(watrous(3, -0.7), Error);
}

TEST(Rainbow, AdmissibilityAndFlags) {
    const FamilyPoint zero = rainbow(3, 4, 0.0, 0.0);
    EXPECT_TRUE(is_ppt(zero.state));
    EXPECT_FALSE(zero.flags.at("ppt_entangled"));
    EXPECT_TRUE(rainbow_ppt_entangled_predicate(3, 4, 0.01, 1.0));
    // That point violates the (+,-) sector inequality, so no state exists there.
    EXPECT_FALSE(rainbow_admissible(3, 4, 0.01, 1.0));
    EXPECT_THROW(rainbow(3, 4, 0.01, 1.0), Error);
    const FamilyPoint pe = rainbow(3, 4, 0.01, 0.5);
    EXPECT_TRUE(pe.flags.at("ppt_entangled"));
    EXPECT_TRUE(is_ppt(pe.state));
    EXPECT_THROW(rainbow(4, 4, 0.0, 0.0), Error);
}

TEST(Rainbow, NptExactlyWhenAParameterIsNegative) {
    for (double eps : {-0.3, -0.05, 0.0, 0.05, 0.3})
        for (double delta : {-0.3, -0.05, 0.0, 0.05, 0.3}) {
            if (!rainbow_admissible(3, 5, eps, delta)) continue;
            const FamilyPoint p = rainbow(3, 5, eps, delta);
            EXPECT_EQ(!is_ppt(p.state), eps < 0 || delta < 0) << eps << " " << delta;
            EXPECT_EQ(p.flags.at("npt"), eps < 0 || delta < 0);
        }
}

TEST(BellDiagonal, Examples) {
    EXPECT_TRUE(bell_diagonal({1, 0, 0, 0}).state.matrix().isApprox(max_entangled_projector(2), 1e-15));
    EXPECT_TRUE(bell_diagonal({0.25, 0.25, 0.25, 0.25}).state.matrix().isApprox(id(4) / 4.0, 1e-15));
    const FamilyPoint p = bell_diagonal({0.4, 0.3, 0.2, 0.1});
    EXPECT_NEAR(max_entangled_fidelity(p.state), 0.4, 1e-14);
    EXPECT_THROW(bell_diagonal({0.5, 0.5, 0.5, -0.5}), Error);
}

TEST(Families, EveryConstructorYieldsAValidState) {
    std::vector<FamilyPoint> pts = {werner(4, -0.9), isotropic(4, 7.0), stormer(0.0), chessboard(), edge55(),
                                    edge66(),        tiles_upb().point, uuvvf(2, -0.2, 0.3), watrous(4, -0.3),
                                    rainbow(3, 5, 0.02, 0.3), bell_diagonal({0.7, 0.1, 0.1, 0.1})};
    for (const auto &p : pts) {
        EXPECT_NEAR(p.state.matrix().trace().real(), 1.0, 1e-12) << family_name(p.family);
        EXPECT_GE(min_eigenvalue(p.state.matrix()), -1e-9) << family_name(p.family);
        EXPECT_TRUE(is_hermitian(p.state.matrix())) << family_name(p.family);
    }
}
