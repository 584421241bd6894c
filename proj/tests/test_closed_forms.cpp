#include <gtest/gtest.h>

#include <hankel/closed_forms.hpp>
#include <hankel/elimination.hpp>
#include <hankel/stieltjes.hpp>

using namespace hankel;

TEST(HilbertDet, Examples) {
    EXPECT_EQ(hilbert_det_closed(0, 7), Rational(1));
    EXPECT_EQ(hilbert_det_closed(1, 1), Rational(1, 12));
    EXPECT_EQ(hilbert_det_closed(2, 1), Rational(1, 2160));
    EXPECT_EQ(hilbert_det_closed(1, 2), Rational(1, 3));
}

TEST(HilbertDet, MatchesOracleAndProduct) {
    for (const Rational& t : {Rational(1), Rational(2), Rational(1, 3)})
        for (unsigned n = 0; n <= 10; ++n) {
            const Rational want = det_oracle(hankel_matrix(MomentKind::hilbert(t), n));
            EXPECT_EQ(hilbert_det_closed(n, t), want);
            EXPECT_EQ(hankel_det(MomentKind::hilbert(t), n), want);
        }
}

TEST(GeneralizedDet, Examples) {
    EXPECT_EQ(generalized_det_closed(0, 1, Rational(5, 2)), Rational(1));
    EXPECT_EQ(generalized_det_closed(1, 1, 2), Rational(1, 18));
    EXPECT_EQ(det_oracle(Mat{{1, Rational(2, 3)}, {Rational(2, 3), Rational(1, 2)}}), Rational(1, 18));
    EXPECT_EQ(generalized_det_closed(1, 1, 1), Rational(1, 12));
}

TEST(GeneralizedDet, MatchesOracle) {
    for (const Rational& s : {Rational(1), Rational(2), Rational(1, 2), Rational(7, 3)})
        for (unsigned n = 0; n <= 8; ++n)
            EXPECT_EQ(generalized_det_closed(n, 1, s), det_oracle(hankel_matrix(MomentKind::generalized(1, s), n)));
    for (unsigned n = 0; n <= 6; ++n)
        EXPECT_EQ(generalized_det_closed(n, Rational(-2, 3), Rational(5, 2)),
                  det_oracle(hankel_matrix(MomentKind::generalized(Rational(-2, 3), Rational(5, 2)), n)));
}

TEST(GeneralizedDet, PrintedFormIsWrong) {
    EXPECT_EQ(generalized_det_printed(0, 1, 1), Rational(1));
    EXPECT_EQ(generalized_det_printed(1, 1, 1), Rational(1, 6));
    EXPECT_NE(generalized_det_printed(1, 1, 1), det_oracle(hankel_matrix(MomentKind::hilbert(1), 1)));
}

TEST(NormSquaredClosed, MatchesProduct) {
    for (const Rational& s : {Rational(1), Rational(2), Rational(1, 2), Rational(7, 3)})
        for (unsigned n = 0; n <= 10; ++n) {
            EXPECT_EQ(norm_squared_closed(n, 3, s), norm_squared(MomentKind::generalized(3, s), n));
            if (n >= 1) {
                EXPECT_NE(norm_squared_printed(n, 3, s), norm_squared_closed(n, 3, s));
            }
        }
}

TEST(ShiftedLegendre, Examples) {
    EXPECT_EQ(shifted_legendre(2, 1), Poly({1, -6, 6}));
    EXPECT_EQ(shifted_legendre(0, 5), Poly({1}));
    EXPECT_EQ(shifted_legendre(4, 1), Poly({1, -20, 90, -140, 70}));
    EXPECT_EQ(shifted_legendre(1, 3), Poly({-3, 2}));
}

TEST(ShiftedLegendre, ThreeTermRecurrence) {
    for (const Rational& t : {Rational(1), Rational(2), Rational(-1, 3)}) {
        const Poly two_x_minus_t({-t, 2});
        for (unsigned n = 0; n <= 15; ++n) {
            const Poly lhs = Rational(n + 2) * shifted_legendre(n + 2, t) -
                             Rational(2 * n + 3) * two_x_minus_t * shifted_legendre(n + 1, t) +
                             t * t * Rational(n + 1) * shifted_legendre(n, t);
            EXPECT_TRUE(lhs.is_zero()) << n;
        }
    }
}

TEST(ShiftedLegendre, SpecialValues) {
    for (unsigned n = 0; n <= 20; ++n) EXPECT_EQ(shifted_legendre(n, 1).eval(1), Rational(1));
    for (const Rational& t : {Rational(1), Rational(2), Rational(5, 7)})
        for (unsigned n = 0; n <= 12; ++n) {
            EXPECT_EQ(shifted_legendre(n, t).eval(0), pow(-t, n));
            EXPECT_EQ(orthogonal_poly(MomentKind::hilbert(t), n).eval(0), pow(-t, n) / binomial(2L * n, n));
            EXPECT_EQ(binomial(2L * n, n) * orthogonal_poly(MomentKind::hilbert(t), n), shifted_legendre(n, t));
        }
    for (const Rational& t : {Rational(1), Rational(2)})
        for (unsigned n = 1; n <= 12; ++n)
            EXPECT_EQ(apply_functional(MomentKind::hilbert(t), shifted_legendre(n, t)), Rational(0));
}

TEST(InverseHilbert, Examples) {
    EXPECT_EQ(inverse_hilbert_entry(1, 0, 0), Rational(4));
    EXPECT_EQ(inverse_hilbert_entry(1, 0, 1), Rational(-6));
    EXPECT_EQ(inverse_hilbert_entry(2, 1, 1), Rational(192));
    EXPECT_THROW(inverse_hilbert_entry(2, 3, 0), DomainError);
}

TEST(InverseHilbert, IntegerInverse) {
    for (unsigned n = 0; n <= 10; ++n) {
        const Mat inv = inverse_hilbert(n);
        EXPECT_TRUE(inv.is_integer_valued());
        EXPECT_EQ(hankel_matrix(MomentKind::hilbert(1), n) * inv, Mat::identity(n + 1));
        if (n <= 8) {
            EXPECT_EQ(inv, kernel_inverse(MomentKind::hilbert(1), n));
        }
    }
}

TEST(InverseGeneralized, Examples) {
    EXPECT_EQ(inverse_generalized_entry(1, 0, 0, 1), Rational(4));
    // inverse of [[1, 2/3], [2/3, 1/2]] has (0,0) entry (1/2) / (1/18)
    EXPECT_EQ(inverse_generalized_entry(1, 0, 0, 2), Rational(9));
    EXPECT_EQ(invert_oracle(Mat{{1, Rational(2, 3)}, {Rational(2, 3), Rational(1, 2)}})(0, 0), Rational(9));
    EXPECT_EQ(inverse_generalized_entry(0, 0, 0, 2), Rational(1));
    EXPECT_THROW(inverse_generalized_entry(1, 2, 0, 2), DomainError);
}

TEST(InverseGeneralized, BothFormsMatchOracle) {
    for (const Rational& s : {Rational(1), Rational(2), Rational(1, 2), Rational(7, 3), Rational(-3, 2)})
        for (unsigned n = 0; n <= 6; ++n) {
            const Mat inv = inverse_generalized(n, s);
            EXPECT_EQ(inv, invert_oracle(hankel_matrix(MomentKind::generalized(1, s), n))) << s << " " << n;
            if (s == Rational(1)) {
                EXPECT_EQ(inv, inverse_hilbert(n));
            }
        }
}

TEST(InverseGeneralized, PrintedRisingFormFailsFromOrderTwo) {
    EXPECT_EQ(inverse_generalized_entry_rising_printed(1, 0, 0, 2), Rational(9));
    EXPECT_EQ(inverse_generalized_entry_rising_printed(2, 1, 1, 1), Rational(384));
    EXPECT_EQ(inverse_generalized_entry_rising(2, 1, 1, 1), Rational(192));
}

TEST(SumIdentity, Examples) {
    EXPECT_EQ(s_identity_sides(1, 0, 0), std::pair(Rational(4), Rational(4)));
    for (unsigned n = 0; n <= 6; ++n) {
        const auto [lhs, rhs] = s_identity_sides(n, n, n);
        EXPECT_EQ(lhs, Rational(2 * n + 1) * pow(binomial(2L * n, n), 2));
        EXPECT_EQ(lhs, rhs);
    }
    // direct sum for n=2, i=1, j=0: k=1 term 1*1*2*1*3 = 6, k=2 term 2*1*3*1*5 = 30
    EXPECT_EQ(s_identity_sides(2, 1, 0), std::pair(Rational(36), Rational(36)));
    EXPECT_THROW(s_identity_sides(2, 3, 0), DomainError);
}

TEST(SumIdentity, ExhaustiveAndMatchesKernel) {
    for (unsigned n = 0; n <= 12; ++n) {
        const Mat kernel = n <= 8 ? kernel_inverse(MomentKind::hilbert(1), n) : Mat();
        for (unsigned i = 0; i <= n; ++i)
            for (unsigned j = 0; j <= n; ++j) {
                const auto [lhs, rhs] = s_identity_sides(n, i, j);
                EXPECT_EQ(lhs, rhs);
                if (n <= 8) {
                    EXPECT_EQ(sign_power(i + j) * rhs, kernel(i, j));
                }
            }
    }
}
