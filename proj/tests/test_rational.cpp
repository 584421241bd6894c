#include <random>

#include <gtest/gtest.h>

#include <hankel/combinatorics.hpp>
#include <hankel/rational.hpp>

#include "test_helpers.hpp"

using hankel::Rational;

TEST(Rational, CanonicalForm) {
    Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(0, 7).den(), 1);
    EXPECT_EQ(Rational(0, -7).num(), 0);
    EXPECT_EQ((Rational(1, 6) + Rational(1, 3)).str(), "1/2");
}

TEST(Rational, TextForm) {
    EXPECT_EQ(Rational(-3, 2).str(), "-3/2");
    EXPECT_EQ(Rational(10, 5).str(), "2");
    EXPECT_EQ(Rational::parse("4/-6"), Rational(-2, 3));
    EXPECT_EQ(Rational::parse("-12"), Rational(-12));
    EXPECT_EQ(Rational::parse("+7/14"), Rational(1, 2));
    EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("/3"), std::invalid_argument);
}

TEST(Rational, DivisionByZeroThrows) {
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, Pow) {
    EXPECT_EQ(hankel::pow(Rational(-2, 3), 3), Rational(-8, 27));
    EXPECT_EQ(hankel::pow(Rational(2, 3), -2), Rational(9, 4));
    EXPECT_EQ(hankel::pow(Rational(5), 0), Rational(1));
}

TEST(Rational, ExactArithmeticProperties) {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 500; ++iter) {
        const Rational a = hankel::testing::random_rational(rng, 50);
        const Rational b = hankel::testing::random_rational(rng, 50);
        EXPECT_EQ((a + b) - b, a);
        if (!b.is_zero()) {
            EXPECT_EQ((a * b) / b, a);
        }
        EXPECT_GT(a.den(), 0);
        EXPECT_EQ(Rational::parse(a.str()), a);
    }
}

TEST(Combinatorics, BinomialGeneral) {
    EXPECT_EQ(hankel::binomial_general(4, 2), Rational(6));
    EXPECT_EQ(hankel::binomial_general(Rational(7, 3), 0), Rational(1));
    EXPECT_EQ(hankel::binomial_general(Rational(3, 2), 1), Rational(3, 2));
    EXPECT_EQ(hankel::binomial_general(3, 5), Rational(0));
    // (-1/2 choose 2) = (-1/2)(-3/2)/2
    EXPECT_EQ(hankel::binomial_general(Rational(-1, 2), 2), Rational(3, 8));
}

TEST(Combinatorics, BinomialGeneralMatchesPascal) {
    // Pascal triangle built additively, independent of the product formula.
    std::vector<std::vector<Rational>> pascal(31);
    for (int n = 0; n <= 30; ++n) {
        pascal[n].assign(n + 1, Rational(1));
        for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    for (int n = 0; n <= 30; ++n)
        for (int k = 0; k <= n; ++k) {
            EXPECT_EQ(hankel::binomial_general(n, k), pascal[n][k]) << n << " " << k;
            EXPECT_EQ(hankel::binomial(n, k), pascal[n][k]);
            // multiplicative recurrence C(n,k) = C(n,k-1) (n-k+1)/k
            if (k > 0) {
                EXPECT_EQ(hankel::binomial_general(n, k),
                          hankel::binomial_general(n, k - 1) * Rational(n - k + 1, k));
            }
        }
}

TEST(Combinatorics, RisingFactorial) {
    EXPECT_EQ(hankel::rising_factorial(1, 4), Rational(24));
    EXPECT_EQ(hankel::rising_factorial(Rational(5, 2), 0), Rational(1));
    EXPECT_EQ(hankel::rising_factorial(Rational(1, 2), 2), Rational(3, 4));
}

TEST(Combinatorics, RisingFactorialSplits) {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        const Rational x = hankel::testing::random_rational(rng);
        const unsigned i = rng() % 6, j = rng() % 6;
        EXPECT_EQ(hankel::rising_factorial(x, i + j),
                  hankel::rising_factorial(x, i) * hankel::rising_factorial(x + Rational(i), j));
    }
}

TEST(Combinatorics, Factorials) {
    EXPECT_EQ(hankel::factorial(0), Rational(1));
    EXPECT_EQ(hankel::factorial(6), Rational(720));
    EXPECT_EQ(hankel::double_factorial(7), Rational(105));
    EXPECT_EQ(hankel::double_factorial(-1), Rational(1));
    EXPECT_FALSE(hankel::admissible_shape(0));
    EXPECT_FALSE(hankel::admissible_shape(-3));
    EXPECT_TRUE(hankel::admissible_shape(Rational(-3, 2)));
}
