// Copyright 2026 The Bellkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bellkit/inequalities.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "bellkit/sweep.h"
#include "test_util.h"

using namespace bellkit;
using bellkit::testing::error_code_of;

namespace {

CorrelationRecord rec(double v) {
    return CorrelationRecord{"test", {"x", "y"}, false, v};
}

CorrelationRecord spin_corr(const DensityOperator &rho, double t1, double t2, bool sym = false) {
    return correlation(rho, spin_observable(t1), spin_observable(t2), sym);
}

DensityOperator pure(std::vector<Complex> v) {
    return make_density(ComplexMatrix::projector(v));
}

}  // namespace

TEST(inequalities, report_invariants) {
    const auto r = make_report("x", 1.5, 1.0, 1e-9, {});
    EXPECT_EQ(r.slack, r.rhs - r.lhs);
    EXPECT_TRUE(r.violated);
    const auto edge = make_report("x", 1.0 + 5e-10, 1.0, 1e-9, {});
    EXPECT_FALSE(edge.violated);
}

TEST(inequalities, scalar_bound_examples) {
    EXPECT_EQ(scalar_bound(1, -1), 2.0);
    EXPECT_NEAR(scalar_bound(0.3, 0.3), 1 - 0.09, 1e-15);
    EXPECT_EQ(error_code_of([] { scalar_bound(1.1, 0); }), ErrorCode::OutOfRange);
}

TEST(inequalities, scalar_bound_random_pairs) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int failures = 0;
    for (int i = 0; i < 1000000; ++i) {
        const double x = u(rng), y = u(rng);
        if (std::abs(x - y) > scalar_bound(x, y) + 1e-15) ++failures;
    }
    EXPECT_EQ(failures, 0);
}

TEST(inequalities, bell_original_violation_on_rho_zero) {
    const DensityOperator rho = rho_zero();
    const double a = 0, b = M_PI / 6, c = M_PI / 3;
    const auto r = bell_original(spin_corr(rho, a, b), spin_corr(rho, a, c), spin_corr(rho, b, c, true), 1, 1);
    EXPECT_NEAR(r.lhs, 1.0, 1e-12);
    EXPECT_NEAR(r.rhs, 0.75, 1e-12);
    EXPECT_TRUE(r.violated);
    EXPECT_EQ(r.inputs.size(), 3u);
}

TEST(inequalities, bell_original_extreme_settings) {
    const DensityOperator rho = rho_zero();
    const auto r = bell_original(spin_corr(rho, 0, 0), spin_corr(rho, 0, M_PI / 2), spin_corr(rho, 0, M_PI / 2), 1, 1);
    EXPECT_NEAR(r.lhs, 2.0, 1e-12);
    EXPECT_NEAR(r.rhs, 0.0, 1e-12);
    EXPECT_NEAR(r.slack, -2.0, 1e-12);
    EXPECT_TRUE(r.violated);
}

TEST(inequalities, bell_original_degenerate_settings_hold) {
    for (double e : {-1.0, -0.3, 0.0, 0.8, 1.0}) {
        const auto r = bell_original(rec(0.4), rec(0.4), rec(e), 1, 1);
        EXPECT_EQ(r.lhs, 0.0);
        EXPECT_FALSE(r.violated);
    }
    EXPECT_EQ(error_code_of([] { bell_original(rec(0), rec(0), rec(0), 0, 1); }), ErrorCode::NonpositiveBound);
}

TEST(inequalities, chsh_examples) {
    const DensityOperator rho = rho_zero();
    const double a = 0, b = M_PI / 6, c = M_PI / 3, d = M_PI / 2;
    const auto r = chsh_report(spin_corr(rho, a, b), spin_corr(rho, c, b), spin_corr(rho, c, d), spin_corr(rho, a, d));
    // E(a,b)=-1/2, E(c,b)=1/4, E(c,d)=-1/2, E(a,d)=1
    EXPECT_NEAR(r.lhs, 1.75, 1e-12);
    EXPECT_NEAR(r.rhs, 2.0, 0.0);
    EXPECT_FALSE(r.violated);

    const auto one = chsh_report(rec(1), rec(1), rec(1), rec(-1));
    EXPECT_EQ(one.lhs, 4.0);
    const auto all_one = chsh_report(rec(1), rec(1), rec(1), rec(1));
    EXPECT_EQ(all_one.lhs, 2.0);
    EXPECT_FALSE(all_one.violated);
    EXPECT_EQ(chsh_report(rec(0), rec(0), rec(0), rec(0), 1e-9, 2.0, 1.5).rhs, 6.0);
}

TEST(inequalities, chsh_grid_maximum_on_rho_zero) {
    constexpr int res = 20;
    std::vector<double> cs(res);
    for (int k = 0; k < res; ++k) cs[k] = std::cos(2 * k * M_PI / res);
    double best = 0;
    for (int a = 0; a < res; ++a)
        for (int b = 0; b < res; ++b)
            for (int c = 0; c < res; ++c)
                for (int d = 0; d < res; ++d) {
                    const double v = std::abs(-cs[a] * cs[b] - cs[c] * cs[b] - cs[c] * cs[d] + cs[a] * cs[d]);
                    best = std::max(best, v);
                }
    EXPECT_NEAR(best, 2.0, 1e-9);
}

TEST(inequalities, separable_bound_symmetric_example) {
    const auto r = separable_bound(rho_zero_representation(true), spin_observable(0), spin_observable(M_PI / 6),
                                   spin_observable(M_PI / 3));
    EXPECT_EQ(r.name, "separable_bound_symmetric");
    EXPECT_NEAR(r.lhs, 1.0, 1e-12);
    EXPECT_NEAR(r.rhs, 1.25, 1e-12);
    EXPECT_FALSE(r.violated);
}

TEST(inequalities, separable_bound_single_term) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const DensityOperator rho = random_pure_state(rng, 2);
        const DensityOperator tau = random_pure_state(rng, 3);
        const auto rep = SeparableRepresentation::make({{1.0, rho, tau}}, false);
        const auto a = random_povm(rng, 2, 1.4, false, "a");
        const auto b1 = random_povm(rng, 3, 0.6, true, "b1");
        const auto b2 = random_povm(rng, 3, 0.6, false, "b2");
        const auto r = separable_bound(rep, a, b1, b2);
        const double wa = trace_of_product(rho.matrix(), effect_operator(a)).real();
        const double w1 = trace_of_product(tau.matrix(), effect_operator(b1)).real();
        const double w2 = trace_of_product(tau.matrix(), effect_operator(b2)).real();
        EXPECT_NEAR(r.lhs, std::abs(wa) * std::abs(w1 - w2), 1e-12);
        EXPECT_NEAR(r.rhs, 1.4 * 0.6 - (1.4 / 0.6) * w1 * w2, 1e-12);
        EXPECT_FALSE(r.violated);
    }
}

TEST(inequalities, separable_bound_equal_bob_settings) {
    const auto b = spin_observable(0.7);
    const auto r = separable_bound(rho_zero_representation(false), spin_observable(0.1), b, b);
    EXPECT_EQ(r.lhs, 0.0);
    EXPECT_GE(r.rhs, 0.0);
}

TEST(inequalities, separable_bound_inf_examples) {
    const auto a = spin_observable(0.2), b1 = spin_observable(0.5), b2 = spin_observable(1.4);
    const auto rep = rho_zero_representation(false);
    const auto single = separable_bound_inf({rep}, a, b1, b2);
    const auto direct = separable_bound(rep, a, b1, b2);
    EXPECT_EQ(single.lhs, direct.lhs);
    EXPECT_NEAR(single.rhs, direct.rhs, 1e-15);
    EXPECT_FALSE(single.notes.empty());

    const DensityOperator up = pure({1, 0}), down = pure({0, 1});
    const DensityOperator plus = pure({M_SQRT1_2, M_SQRT1_2}), minus = pure({M_SQRT1_2, -M_SQRT1_2});
    const auto z = SeparableRepresentation::make(
        {{0.25, up, up}, {0.25, up, down}, {0.25, down, up}, {0.25, down, down}}, false);
    const auto x = SeparableRepresentation::make(
        {{0.25, plus, plus}, {0.25, plus, minus}, {0.25, minus, plus}, {0.25, minus, minus}}, false);
    const auto bz = spin_observable(0), bz2 = spin_observable(0.1);
    const double rz = separable_bound(z, a, bz, bz2).rhs;
    const double rx = separable_bound(x, a, bz, bz2).rhs;
    ASSERT_GT(std::abs(rz - rx), 0.1);
    const auto both = separable_bound_inf({z, x}, a, bz, bz2);
    EXPECT_NEAR(both.rhs, std::min(rz, rx), 1e-12);
    EXPECT_EQ(error_code_of([&] { separable_bound_inf({z, rep}, a, bz, bz2); }), ErrorCode::DifferentStates);
}

TEST(inequalities, two_term_examples) {
    const auto rep = rho_zero_representation(false);
    const auto a = spin_observable(0), b1 = spin_observable(M_PI / 6), b2 = spin_observable(M_PI / 3);
    const auto reduced = two_term_linear_bound(1, -1, rep, a, b1, b2);
    const auto direct = separable_bound(rep, a, b1, b2);
    EXPECT_NEAR(reduced.lhs, direct.lhs, 1e-15);
    EXPECT_NEAR(reduced.rhs, direct.rhs, 1e-15);

    const auto sum = two_term_linear_bound(1, 1, rep, a, b1, b2);
    const double e1 = correlation(assemble(rep), a, b1, false).value;
    const double e2 = correlation(assemble(rep), a, b2, false).value;
    const double bb = bob_bob_correlation(rep, b1, b2).value;
    EXPECT_NEAR(sum.lhs, std::abs(e1 + e2), 1e-15);
    EXPECT_NEAR(sum.rhs, 1 + bb, 1e-15);
    EXPECT_FALSE(sum.violated);

    const auto single = two_term_linear_bound(-3, 0, rep, a, b1, b2);
    EXPECT_NEAR(single.lhs, 3 * std::abs(e1), 1e-15);
    EXPECT_NEAR(single.rhs, 3.0, 1e-15);
    EXPECT_EQ(error_code_of([&] { two_term_linear_bound(0, 0, rep, a, b1, b2); }), ErrorCode::ZeroGammas);
}

TEST(inequalities, quantum_analogue_examples) {
    const auto rep = rho_zero_representation(true);
    const auto r = quantum_bell_analogue(rep, spin_observable(0), spin_observable(M_PI / 6), spin_observable(M_PI / 3));
    EXPECT_NEAR(r.lhs, 1.0, 1e-12);
    EXPECT_NEAR(r.rhs, 1.25, 1e-12);
    EXPECT_FALSE(r.violated);

    const auto b = spin_observable(0.3);
    const auto same = quantum_bell_analogue(rep, spin_observable(1.0), b, b);
    EXPECT_EQ(same.lhs, 0.0);
    EXPECT_LE(same.rhs, 1.0 + 1e-12);

    EXPECT_EQ(error_code_of([&] { quantum_bell_analogue(rho_zero_representation(false), b, b, b); }),
              ErrorCode::InvalidRepresentation);
    std::mt19937_64 rng(4);
    const auto wide = random_povm(rng, 2, 2.0, false, "w");
    EXPECT_EQ(error_code_of([&] { quantum_bell_analogue(rep, wide, b, b); }), ErrorCode::BoundMismatch);
}

TEST(inequalities, quantum_analogue_warns_on_dissimilar_devices) {
    const auto rep = rho_zero_representation(true);
    const auto b1 = spin_observable(0.3);
    const auto alice_same = spin_observable(0.3);
    const auto alice_other = spin_observable(0.9);
    EXPECT_TRUE(quantum_bell_analogue(rep, spin_observable(0), b1, b1, 1e-9, &alice_same).notes.empty());
    EXPECT_FALSE(quantum_bell_analogue(rep, spin_observable(0), b1, b1, 1e-9, &alice_other).notes.empty());
}

TEST(inequalities, quantum_analogue_special_form_reduces_to_bell) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<ProductTerm> terms;
        for (int m = 0; m < 3; ++m) {
            const DensityOperator r = random_pure_state(rng, 2);
            terms.push_back({1.0 / 3, r, r});
        }
        const auto rep = SeparableRepresentation::make(std::move(terms), true);
        const DensityOperator rho = assemble(rep);
        const auto a = random_povm(rng, 2, 1, false, "a");
        const auto b1 = random_povm(rng, 2, 1, true, "b1");
        const auto b2 = random_povm(rng, 2, 1, false, "b2");
        const auto q = quantum_bell_analogue(rep, a, b1, b2);
        const auto bell = bell_original(correlation(rho, a, b1, true), correlation(rho, a, b2, true),
                                        correlation(rho, b1, b2, true), 1, 1);
        EXPECT_NEAR(q.lhs, bell.lhs, 1e-12);
        EXPECT_NEAR(q.rhs, bell.rhs, 1e-12);
        EXPECT_FALSE(bell.violated);
    }
}

TEST(inequalities, condition_vbi_examples) {
    const auto rep = rho_zero_representation(true);
    for (double b : {0.0, 0.3, 1.0}) {
        for (double c : {0.2, 0.8}) {
            const auto v = condition_vbi(rep, spin_observable(b), spin_observable(c), rho_zero());
            EXPECT_EQ(v.sign, SignCondition::MinusSign);
            EXPECT_NEAR(v.sigma_value, -v.state_value, 1e-12);
        }
    }
    const DensityOperator p = pure({0.6, 0.8});
    const auto special = SeparableRepresentation::make({{0.5, p, p}, {0.5, pure({1, 0}), pure({1, 0})}}, true);
    EXPECT_EQ(condition_vbi(special, spin_observable(0.4), spin_observable(1.2), assemble(special)).sign,
              SignCondition::PlusSign);
}

TEST(inequalities, condition_vbi_detects_generic_failure) {
    std::mt19937_64 rng(51);
    int detected = 0;
    for (int trial = 0; trial < 200 && detected < 5; ++trial) {
        const auto rep = random_product_representation(rng, 2, 2, 3, true);
        const DensityOperator rho = assemble(rep);
        const auto b1 = random_povm(rng, 2, 1, false, "b1");
        const auto b2 = random_povm(rng, 2, 1, false, "b2");
        const double s = correlation(sigma_sym_of(rep), b1, b2, true).value;
        const double e = correlation(rho, b1, b2, true).value;
        if (std::abs(s - e) > 1e-3 && std::abs(s + e) > 1e-3) {
            EXPECT_EQ(condition_vbi(rep, b1, b2, rho).sign, SignCondition::NotSatisfied);
            ++detected;
        }
    }
    EXPECT_EQ(detected, 5);
}

TEST(inequalities, condition_sor_examples) {
    const DensityOperator up = pure({1, 0}), down = pure({0, 1});
    const DensityOperator p = pure({0.6, 0.8});
    EXPECT_EQ(condition_sor(SeparableRepresentation::make({{1.0, p, p}}, true), spin_observable(0.3)),
              SignCondition::PlusSign);
    EXPECT_EQ(condition_sor(rho_zero_representation(true), spin_observable(0.3)), SignCondition::MinusSign);
    const auto mixed = SeparableRepresentation::make({{0.5, up, up}, {0.5, up, down}}, true);
    EXPECT_EQ(condition_sor(mixed, spin_observable(0)), SignCondition::NotSatisfied);
}

TEST(inequalities, bell_restriction_examples) {
    const auto s0 = spin_observable(0);
    EXPECT_EQ(bell_restriction(rho_zero(), s0), Restriction::Minus);
    EXPECT_EQ(bell_restriction(maximally_mixed(2, 2), s0), Restriction::Neither);
    EXPECT_EQ(bell_restriction(make_density(ComplexMatrix::diagonal({0.5, 0, 0, 0.5}), FactorDims{2, 2}), s0),
              Restriction::Plus);
    std::mt19937_64 rng(6);
    EXPECT_EQ(error_code_of([&] { bell_restriction(rho_zero(), random_povm(rng, 2, 2.0, false, "w")); }),
              ErrorCode::BoundNotUnit);
}

TEST(inequalities, gamma_vector) {
    EXPECT_EQ(error_code_of([] { GammaVector::make({0, 0, 0, 0}); }), ErrorCode::ZeroGammas);
    const auto g = GammaVector::make({2, 1, -2, 1});
    EXPECT_EQ(g.max_abs(), 2.0);
    EXPECT_EQ(g.branch(), GammaBranch::AliceGrouped);
    EXPECT_EQ(GammaVector::make({2, 1, 1, -2}).branch(), GammaBranch::BobGrouped);
    EXPECT_EQ(GammaVector::make({1, 1, 1, 1}).branch(), GammaBranch::None);
}

TEST(inequalities, extended_chsh_examples) {
    const auto g = GammaVector::make({1, 1, 1, -1});
    const auto r = extended_chsh(g, rec(0.5), rec(0.25), rec(-0.5), rec(0.1), 1, 1);
    EXPECT_EQ(r.rhs, 2.0);
    const auto c = chsh_report(rec(0.5), rec(0.25), rec(-0.5), rec(0.1));
    EXPECT_EQ(r.lhs, c.lhs);

    const auto r2 = extended_chsh(GammaVector::make({2, 1, -2, 1}), rec(0), rec(0), rec(0), rec(0), 1.5, 0.5);
    EXPECT_EQ(r2.rhs, 4 * 1.5 * 0.5);

    try {
        extended_chsh(GammaVector::make({1, 1, 1, 1}), rec(0), rec(0), rec(0), rec(0), 1, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidGammaConstraint);
        EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
    }
}

TEST(inequalities, extended_chsh_matches_chsh_bitwise) {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(-1, 1);
    const auto g = GammaVector::make({1, 1, 1, -1});
    for (int i = 0; i < 10000; ++i) {
        const auto ab = rec(u(rng)), cb = rec(u(rng)), cd = rec(u(rng)), ad = rec(u(rng));
        const auto e = extended_chsh(g, ab, cb, cd, ad, 1, 1);
        const auto c = chsh_report(ab, cb, cd, ad);
        ASSERT_EQ(e.lhs, c.lhs);
        ASSERT_EQ(e.rhs, c.rhs);
        ASSERT_EQ(e.slack, c.slack);
        ASSERT_EQ(e.violated, c.violated);
    }
}

TEST(inequalities, separable_soundness_random) {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> bound(0.5, 2.0);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 2 + trial % 2;
        const bool sym = trial % 2 == 0;
        const auto rep = random_product_representation(rng, d, d, 5, sym);
        const DensityOperator rho = assemble(rep);
        const double c1 = bound(rng);
        const double c2 = sym && trial % 4 == 0 ? c1 : bound(rng);
        const auto a = random_povm(rng, d, c1, trial % 3 == 0, "a");
        const auto cc = random_povm(rng, d, c1, false, "c");
        const auto b1 = random_povm(rng, d, c2, trial % 5 == 0, "b");
        const auto b2 = random_povm(rng, d, c2, false, "d");
        EXPECT_FALSE(separable_bound(rep, a, b1, b2).violated) << trial;
        EXPECT_FALSE(two_term_linear_bound(bound(rng) - 1.2, bound(rng) - 1.2, rep, a, b1, b2).violated) << trial;
        if (sym && c1 == c2) EXPECT_FALSE(quantum_bell_analogue(rep, a, b1, b2).violated) << trial;
        const auto g = random_valid_gamma(rng);
        const auto r = extended_chsh(g, correlation(rho, a, b1, sym), correlation(rho, cc, b1, sym),
                                     correlation(rho, cc, b2, sym), correlation(rho, a, b2, sym), c1, c2);
        EXPECT_FALSE(r.violated) << trial;
    }
}
