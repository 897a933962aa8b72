#include <cmath>
#include <numeric>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "vpst/cyclotomic.hpp"

using namespace vpst;

TEST(Cyclotomic, KnownPolynomials) {
    EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), (IntPoly{1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), (IntPoly{1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(8), (IntPoly{1, 0, 0, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (IntPoly{1, -1, 1}));
    EXPECT_THROW(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST(Cyclotomic, PolynomialDegreeIsTotient) {
    for (int m = 1; m <= 64; ++m) {
        int phi = 0;
        for (int k = 1; k <= m; ++k) phi += std::gcd(k, m) == 1 ? 1 : 0;
        EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(m).size()) - 1, phi) << m;
    }
}

TEST(Cyclotomic, NonUniqueRepresentationsCompareEqual) {
    const int N = 12;
    Cyclotomic sum(N);
    for (int e = 0; e < N; ++e) sum += Cyclotomic::root(N, e);
    EXPECT_TRUE(sum.is_zero());
    EXPECT_EQ(Cyclotomic::root(N, 6), Cyclotomic::integer(N, -1));
    EXPECT_EQ(Cyclotomic::root(N, 3) * Cyclotomic::root(N, 3), Cyclotomic::integer(N, -1));
    // omega + omega^-1 for omega = zeta^2 a primitive 6th root: 2 cos(pi/3) = 1
    EXPECT_EQ(Cyclotomic::root(N, 2) + Cyclotomic::root(N, -2), Cyclotomic::integer(N, 1));
    EXPECT_EQ((Cyclotomic::root(N, 2) + Cyclotomic::root(N, -2)).as_integer(), 1);
    EXPECT_FALSE((Cyclotomic::root(N, 1) + Cyclotomic::root(N, -1)).as_integer().has_value());  // sqrt(3)
}

TEST(Cyclotomic, ArithmeticMatchesComplexValues) {
    std::mt19937 rng(3);
    for (int N : {4, 8, 12, 20, 24, 32}) {
        for (int trial = 0; trial < 50; ++trial) {
            Cyclotomic x(N);
            Cyclotomic y(N);
            for (int k = 0; k < 4; ++k) {
                x += Cyclotomic::monomial(N, static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % N));
                y += Cyclotomic::monomial(N, static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % N));
            }
            EXPECT_LT(std::abs((x * y).value() - x.value() * y.value()), 1e-9);
            EXPECT_LT(std::abs((x + y).value() - (x.value() + y.value())), 1e-12);
            EXPECT_LT(std::abs(x.conj().value() - std::conj(x.value())), 1e-12);
            EXPECT_EQ(x == y, std::abs(x.value() - y.value()) < 1e-9);
            EXPECT_TRUE((x - x).is_zero());
        }
    }
}

TEST(Cyclotomic, OrdersMustMatch) {
    EXPECT_THROW(Cyclotomic::root(4, 1) + Cyclotomic::root(8, 1), std::invalid_argument);
    EXPECT_FALSE(Cyclotomic::integer(4, 1) == Cyclotomic::integer(8, 1));
}
