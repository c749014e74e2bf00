#include <random>

#include <gtest/gtest.h>

#include "abcore/generating_functions.hpp"
#include "abcore/series.hpp"
#include "oracle.hpp"

using abcore::rational;
using abcore::series;

namespace {

series random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    series s(order);
    for (int k = 0; k <= order; ++k) s.at(k) = rational(num(rng), den(rng));
    return s;
}

// [x^n] A^k = k / ((m+1)n + k) * binom((m+1)n + k, n), by Lagrange inversion.
rational power_coeff(int m, int k, int n) {
    const int top = (m + 1) * n + k;
    return rational(oracle::binom(top, n) * k, top);
}

}  // namespace

TEST(Series, GeometricInverse) {
    const series one_minus_x = series::one(8) - series::monomial(1, 8);
    const series g = series::one(8) / one_minus_x;
    for (int k = 0; k <= 8; ++k) EXPECT_EQ(g[k], 1);
    EXPECT_EQ(g[9], 0);
    EXPECT_EQ(g.order(), 8);
}

TEST(Series, OrderTracking) {
    const series s = series::one(6);
    EXPECT_EQ(s.derivative().order(), 5);
    EXPECT_EQ(abcore::times_x(s, 2).order(), 8);
    EXPECT_EQ((s.derivative() + s).order(), 5);
    EXPECT_EQ((s * s.truncated(3)).order(), 3);
}

TEST(Series, DerivativeAndPow) {
    series s(4);
    s.at(0) = 1;
    s.at(1) = 2;
    s.at(3) = rational(1, 3);
    const series d = s.derivative();
    EXPECT_EQ(d[0], 2);
    EXPECT_EQ(d[1], 0);
    EXPECT_EQ(d[2], 1);
    EXPECT_EQ(s.pow(0), series::one(4));
    EXPECT_EQ(s.pow(3), s * s * s);
}

TEST(Series, DivisionByNonUnit) {
    const series x = series::monomial(1, 5);
    EXPECT_THROW(series::one(5) / x, abcore::division_by_non_unit);
}

TEST(Series, ProductRuleOnRandomInputs) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const series f = random_series(rng, 10), g = random_series(rng, 10);
        const series lhs = (f * g).derivative();
        const series rhs = f.derivative() * g + f * g.derivative();
        ASSERT_EQ(lhs, rhs);
    }
}

TEST(Series, DivisionInvertsMultiplication) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        series f = random_series(rng, 9), g = random_series(rng, 9);
        if (g[0] == 0) g.at(0) = 1;
        ASSERT_EQ((f * g) / g, f);
    }
}

TEST(SolveA, KnownCoefficients) {
    const std::vector<int> catalan{1, 1, 2, 5, 14, 42, 132};
    const std::vector<int> ternary{1, 1, 3, 12, 55, 273, 1428};
    const series a1 = abcore::solve_A(1, 6), a2 = abcore::solve_A(2, 6);
    for (int k = 0; k <= 6; ++k) {
        EXPECT_EQ(a1[k], catalan[k]);
        EXPECT_EQ(a2[k], ternary[k]);
    }
}

TEST(SolveA, PowersMatchLagrange) {
    for (int m = 1; m <= 5; ++m) {
        const series A = abcore::solve_A(m, 10);
        for (int k = 1; k <= m + 1; ++k) {
            const series Ak = A.pow(static_cast<unsigned>(k));
            for (int n = 0; n <= 10; ++n) ASSERT_EQ(Ak[n], power_coeff(m, k, n)) << m << "," << k;
        }
    }
}

TEST(SolveA, TruncationIsConsistent) {
    for (int m = 1; m <= 4; ++m)
        EXPECT_EQ(abcore::solve_A(m, 16).truncated(9), abcore::solve_A(m, 9));
}

TEST(SolveA, FunctionalEquationResidualVanishes) {
    for (int m = 1; m <= 6; ++m)
        for (int N : {1, 5, 12, 20}) {
            const series A = abcore::solve_A(m, N);
            const series r = abcore::times_x(A.pow(static_cast<unsigned>(m + 1))) - A + 1;
            for (int k = 0; k <= N; ++k) ASSERT_EQ(r[k], 0) << m << "," << N << "," << k;
        }
}

TEST(StatSeries, LeadingCoefficients) {
    const auto b = abcore::stat_series(2, 8);
    EXPECT_EQ(b.T[0][0], 0);
    EXPECT_EQ(b.T[0][1], 0);
    EXPECT_EQ(b.T[0][2], 3);
    EXPECT_EQ(b.T[0][3], 33);
    const std::vector<int> g0{0, 0, 4, 66, 770};
    for (int k = 0; k < 5; ++k) EXPECT_EQ(b.G[0][k], g0[k]);
    EXPECT_EQ(b.G[1][2], 65);
}

TEST(StatSeries, CoefficientsAreIntegral) {
    for (int m = 1; m <= 5; ++m) EXPECT_NO_THROW(abcore::stat_series(m, 14)) << m;
}

TEST(Identities, AllHoldForSmallM) {
    for (int m = 1; m <= 4; ++m) {
        const auto report = abcore::check_identities(m, 12);
        for (const auto& e : report) {
            EXPECT_TRUE(e.pass) << "m=" << m << " " << e.name << " first nonzero x^" << e.first_nonzero;
            EXPECT_EQ(e.effective_order, 12) << e.name;
        }
    }
}

TEST(Identities, MainIdentityPresent) {
    const auto report = abcore::check_identities(3, 10);
    const auto it = std::find_if(report.begin(), report.end(),
                                 [](const auto& e) { return e.name == "main_identity"; });
    ASSERT_NE(it, report.end());
    EXPECT_TRUE(it->pass);
}

TEST(Identities, DetectsNonzeroResidual) {
    series r(5);
    r.at(3) = rational(-2, 7);
    const auto c = abcore::make_identity_check("probe", 1, r, 5);
    EXPECT_FALSE(c.pass);
    EXPECT_EQ(c.first_nonzero, 3);
    EXPECT_EQ(c.residual_max_abs, rational(2, 7));
}

TEST(CrossCheck, SeriesMatchEnumeration) {
    for (int m = 1; m <= 3; ++m) {
        const auto report = abcore::cross_check(m, 5);
        EXPECT_EQ(report.size(), static_cast<std::size_t>(m * 6 * 4));
        for (const auto& e : report)
            EXPECT_TRUE(e.pass) << m << "," << e.j << "," << e.n << " " << e.statistic;
    }
}
