#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "eckart_nu/nu_parametric.hpp"
#include "eckart_nu/spectrum.hpp"

using namespace enu;
using namespace enu::nu;

namespace {

const NUCoefficients kExample1{1.0, 1.0, 1.0, 2.0, 1.0, 0.5};

// Frozen from tests/oracles/reference_values.py (mpmath, 40 digits).
constexpr double kK = 1.8708286933869707;

}  // namespace

TEST(DeriveConstants, HandExample) {
    const NUDerived d = derive_constants(kExample1);
    EXPECT_DOUBLE_EQ(d.c4, 0.0);
    EXPECT_DOUBLE_EQ(d.c5, -0.5);
    EXPECT_DOUBLE_EQ(d.c6, 2.25);
    EXPECT_DOUBLE_EQ(d.c7, -1.0);
    EXPECT_DOUBLE_EQ(d.c8, 0.5);
    EXPECT_DOUBLE_EQ(d.c9, 1.75);
}

TEST(DeriveConstants, ZeroCase) {
    const NUDerived d = derive_constants({1.0, 2.0, 1.0, 0.0, 0.0, 0.0});
    for (double c : {d.c4, d.c5, d.c6, d.c7, d.c8, d.c9}) EXPECT_EQ(c, 0.0);
}

TEST(DeriveConstants, ReducedEquationMapping) {
    // c1 = c2 = c3 = 1 with the reduced-equation xi's: c9 must be phi + 1/4.
    ProblemSpec spec;
    spec.potential = {1.0, 0.01, 0.5, 2.0, 50.0, 1.0};
    spec.approx = {1.6, 3.2};
    for (int D : {3, 4, 5}) {
        const ReducedCoefficients rc = reduce(spec, 1, 0, D);
        const NUDerived d = derive_constants(nu_instance(rc));
        EXPECT_NEAR(d.c6, rc.eps_sq + rc.A + 0.25, 1e-14);
        EXPECT_NEAR(d.c7, -rc.B - 2.0 * rc.eps_sq, 1e-14);
        EXPECT_NEAR(d.c8, rc.eps_sq + rc.C, 1e-14);
        EXPECT_NEAR(d.c9, rc.phi + 0.25, 1e-14);
    }
}

TEST(DeriveConstants, Rederivable) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        const NUCoefficients c{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        const NUDerived d = derive_constants(c);
        EXPECT_EQ(d.c4, 0.5 * (1.0 - c.c1));
        EXPECT_EQ(d.c5, 0.5 * (c.c2 - 2.0 * c.c3));
        EXPECT_EQ(d.c6, d.c5 * d.c5 + c.xi1);
        EXPECT_EQ(d.c7, 2.0 * d.c4 * d.c5 - c.xi2);
        EXPECT_EQ(d.c8, d.c4 * d.c4 + c.xi3);
        EXPECT_EQ(d.c9, c.c3 * d.c7 + c.c3 * c.c3 * d.c8 + d.c6);
    }
}

TEST(KBranches, Example) {
    const NUDerived d = derive_constants(kExample1);
    const KBranches k = k_branches(kExample1, d);
    EXPECT_NEAR(k.k_plus, kK, 1e-12);
    EXPECT_NEAR(k.k_minus, -kK, 1e-12);
    EXPECT_GE(k.k_plus, k.k_minus);
}

TEST(KBranches, ZeroAndDoubleRoot) {
    const KBranches zero = k_branches({}, NUDerived{});
    EXPECT_EQ(zero.k_plus, 0.0);
    EXPECT_EQ(zero.k_minus, 0.0);

    const NUDerived d{0.0, 0.0, 1.0, 3.0, 0.0, 7.0};
    const KBranches k = k_branches({1.0, 1.0, 1.0, 0.0, 0.0, 0.0}, d);
    EXPECT_EQ(k.k_plus, -3.0);
    EXPECT_EQ(k.k_minus, -3.0);
}

TEST(KBranches, NegativeRadicand) {
    const NUDerived d{0.0, 0.0, 0.0, 0.0, 1.0, -1.0};
    try {
        k_branches({}, d);
        FAIL() << "expected NegativeRadicand";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NegativeRadicand);
    }
}

TEST(RadicalPolynomial, Examples) {
    const NUDerived d = derive_constants(kExample1);
    const RadicalPolynomial minus = radical_polynomial(kExample1, d, -kK);
    EXPECT_NEAR(minus.q2, 4.1208286933869707, 1e-12);
    EXPECT_NEAR(minus.q1, -2.8708286933869707, 1e-12);
    EXPECT_EQ(minus.q0, 0.5);
    EXPECT_NEAR(minus.discriminant(), 0.0, 1e-9);

    const RadicalPolynomial plus = radical_polynomial(kExample1, d, kK);
    EXPECT_NEAR(plus.q2, 0.37917130661302931, 1e-12);
    EXPECT_NEAR(plus.q1, 0.87082869338697069, 1e-12);
    EXPECT_NEAR(plus.discriminant(), 0.0, 1e-9);

    const RadicalPolynomial zero = radical_polynomial({}, NUDerived{}, 0.0);
    EXPECT_EQ(zero.q2, 0.0);
    EXPECT_EQ(zero.q1, 0.0);
    EXPECT_EQ(zero.q0, 0.0);
}

TEST(RadicalPolynomial, DiscriminantVanishesForBothBranches) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    int checked = 0;
    while (checked < 500) {
        const NUCoefficients c{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        const NUDerived d = derive_constants(c);
        if (d.c8 * d.c9 < 0.0) continue;
        const KBranches k = k_branches(c, d);
        for (double kv : {k.k_plus, k.k_minus}) {
            const RadicalPolynomial q = radical_polynomial(c, d, kv);
            const double scale = std::max({1.0, q.q1 * q.q1, std::abs(q.q2 * q.q0)});
            EXPECT_LE(std::abs(q.discriminant()), 1e-9 * scale);
        }
        ++checked;
    }
}

TEST(EnergyCondition, ZeroCoefficients) {
    EXPECT_EQ(energy_condition_lhs(0, {}, NUDerived{}, 0.0), 0.0);
}

TEST(EnergyCondition, EckartInstanceBranches) {
    ProblemSpec spec;
    spec.potential = {0.0, 4.0, 0.5, 2.0, 50.0, 0.5};
    spec.approx = {0.0, 0.0};
    const ReducedCoefficients rc = reduce(spec, 0, 0, 3);
    EXPECT_NEAR(rc.gamma, 0.0, 0.0);
    EXPECT_NEAR(rc.theta, 8.0, 1e-14);
    EXPECT_NEAR(rc.phi, 1.0, 1e-14);
    const NUCoefficients c = nu_instance(rc);
    const NUDerived d = derive_constants(c);
    EXPECT_NEAR(energy_condition_lhs(0, c, d, 1.6631189606246320), 0.0, 1e-9);
    // Wrong branch: off by 2 (n + sigma) * 2 mu_bar.
    const double wrong = energy_condition_lhs(0, c, d, -1.6631189606246320);
    EXPECT_NEAR(wrong, -10.763932022500210, 1e-9);
}

TEST(EnergyCondition, AffineInSignedRoot) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const NUCoefficients c{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        const NUDerived d = derive_constants(c);
        if (d.c9 < 0.0) continue;
        const int n = trial % 6;
        const double f0 = energy_condition_lhs(n, c, d, -1.0);
        const double f1 = energy_condition_lhs(n, c, d, 0.5);
        const double f2 = energy_condition_lhs(n, c, d, 2.0);
        EXPECT_NEAR(f2 - f1, f1 - f0, 1e-10 * std::max(1.0, std::abs(f1)));
    }
}

TEST(EnergyCondition, NegativeC9) {
    const NUDerived d{0.0, 0.0, 0.0, 0.0, 0.0, -0.1};
    EXPECT_THROW(energy_condition_lhs(0, {}, d, 0.0), Error);
}

TEST(WaveFactors, Example) {
    const WaveFactors w = wave_factors(kExample1, derive_constants(kExample1));
    EXPECT_NEAR(w.c10, 2.4142135623730950, 1e-12);
    EXPECT_NEAR(w.c11, 2.6457513110645906, 1e-12);
    EXPECT_NEAR(w.c12, 0.70710678118654752, 1e-12);
    EXPECT_NEAR(w.c13, 1.8228756555322953, 1e-12);
}

TEST(WaveFactors, ZeroRadical) {
    const double c3 = 2.0;
    const NUCoefficients c{1.0, 3.0, c3, 0.0, 0.0, 0.0};
    NUDerived d = derive_constants(c);
    d.c8 = 0.0;
    d.c9 = c3 * c3;
    const WaveFactors w = wave_factors(c, d);
    EXPECT_DOUBLE_EQ(w.c10, 1.0);
    EXPECT_DOUBLE_EQ(w.c11, 2.0);
    EXPECT_DOUBLE_EQ(w.c12, 0.0);
    EXPECT_DOUBLE_EQ(w.c13, 1.0 - d.c5 / c3);
}

TEST(WaveFactors, ReducedEquationMapping) {
    ProblemSpec spec;
    spec.potential = {1.0, 0.01, 0.5, 2.0, 50.0, 1.0};
    spec.approx = {1.6, 3.2};
    const ReducedCoefficients rc = reduce(spec, 2, 1, 4);
    const WaveFactors w = wave_factors(nu_instance(rc), derive_constants(nu_instance(rc)));
    EXPECT_NEAR(w.c10, 1.0 + 2.0 * std::sqrt(rc.eps_sq + rc.gamma * 2.0), 1e-12);
    EXPECT_NEAR(w.c12, std::sqrt(rc.eps_sq + rc.gamma * 2.0), 1e-12);
    // c11 follows the general formula: +sqrt(1 + 4 phi) here.
    EXPECT_NEAR(w.c11, rc.v, 1e-12);
    EXPECT_NEAR(w.c13, 0.5 * (1.0 + rc.v), 1e-12);
}

TEST(WaveFactors, Errors) {
    try {
        wave_factors({1.0, 1.0, 0.0, 0.0, 0.0, 0.0}, NUDerived{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateC3);
    }
    try {
        wave_factors(kExample1, NUDerived{0.0, 0.0, 0.0, 0.0, -1.0, 1.0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NegativeRadicand);
    }
}

TEST(TauDerivative, NegativeForConstructedInstances) {
    ProblemSpec spec;
    spec.potential = {1.0, 0.01, 0.5, 2.0, 50.0, 1.0};
    spec.approx = {1.6, 3.2};
    for (int n = 0; n <= 5; ++n)
        for (int l = 0; l <= 4; ++l)
            for (int D = 2; D <= 6; ++D) {
                const ReducedCoefficients rc = reduce(spec, n, l, D);
                const NUCoefficients c = nu_instance(rc);
                const NUDerived d = derive_constants(c);
                if (d.c8 > 0.0 && d.c9 > 0.0) {
                    EXPECT_LT(tau_derivative(c, d), 0.0);
                }
            }
}
