#pragma once

/*
 * Hankel determinants of generalized harmonic numbers
 *
 *     H_n(t, s) = sum_{k=1}^n s t^k / (k + s - 1).
 *
 * Since H_0 = 0 the orthogonal-polynomial machinery does not apply directly.
 * Bordering reduces det (H_{i+j}(t,s))_{i,j=0}^n to
 *
 *     (-t)^n / C(2n+s-1, n) * det(s t^{i+j}/(i+j+s))_{i,j=0}^{n-1} * r(n, t, s)
 *
 * with the alternating binomial transform
 *
 *     r(n, t, s) = sum_j (-t)^{n-j} C(n, j) C(n+j+s-1, n) H_j(t, s).
 *
 * The finite sum is the definition; the three-term recurrences for r are
 * accelerators and are always checked against it.
 */

#include <optional>
#include <vector>

#include "closed_forms.hpp"
#include "combinatorics.hpp"
#include "elimination.hpp"
#include "errors.hpp"
#include "moments.hpp"
#include "stieltjes.hpp"

namespace hankel {

enum class RRoute { DirectSum, Recurrence };

struct RValue {
    unsigned n;
    Rational t;
    Rational s;
    Rational value;
    RRoute route;
};

namespace detail {
inline void require_shape(const Rational& s) {
    if (!admissible_shape(s))
        throw DomainError("s must not be zero or a negative integer (got " + s.str() + ")");
}
}  // namespace detail

inline Rational r_direct(unsigned n, const Rational& t, const Rational& s = 1) {
    detail::require_shape(s);
    Rational sum = 0, h = 0, tk = 1;
    for (unsigned j = 0; j <= n; ++j) {
        if (j > 0) {
            tk *= t;
            h += s * tk / (Rational(j) + s - Rational(1));
        }
        if (h.is_zero()) continue;
        sum += pow(-t, static_cast<long>(n - j)) * binomial(n, j) *
               binomial_general(Rational(n + j) + s - Rational(1), n) * h;
    }
    return sum;
}

inline RValue r_value(unsigned n, const Rational& t, const Rational& s = 1) {
    return {n, t, s, r_direct(n, t, s), RRoute::DirectSum};
}

/// r(0..nmax) advanced by
///   (n+2)(n+1+s)(2n+1+s) r(n+2)
///     = (2n+2+s)((2n+1)(2n+3) + 4s(n+1) + s^2 - 2(n+1)^2 t - s t (2n+1+s)) r(n+1)
///       - (n+1)(n+s)(2n+3+s) t^2 r(n)
/// from r(0) = 0, r(1) = (1+s) t.
inline std::vector<Rational> r_recurrence(unsigned nmax, const Rational& t, const Rational& s = 1) {
    detail::require_shape(s);
    std::vector<Rational> r{Rational(0)};
    if (nmax >= 1) r.push_back(r_direct(1, t, s));
    const Rational t2 = t * t;
    for (unsigned k = 0; k + 2 <= nmax; ++k) {
        const Rational n(k);
        const Rational one(1), two(2);
        const Rational c0 = (n + one) * (n + s) * (two * n + Rational(3) + s) * t2;
        const Rational c1 =
            (two * n + two + s) *
            ((two * n + one) * (two * n + Rational(3)) + Rational(4) * s * (n + one) + s * s -
             two * (n + one) * (n + one) * t - s * t * (two * n + one + s));
        const Rational c2 = (n + two) * (n + one + s) * (two * n + one + s);
        r.push_back((c1 * r[k + 1] - c0 * r[k]) / c2);
    }
    return r;
}

/// The s = 1 recurrence n r(n) + (t-2)(2n-1) r(n-1) + t^2 (n-1) r(n-2) = 0, r(0)=0, r(1)=2t.
inline std::vector<Rational> r_recurrence_unit_shape(unsigned nmax, const Rational& t) {
    std::vector<Rational> r{Rational(0)};
    if (nmax >= 1) r.push_back(Rational(2) * t);
    for (unsigned n = 2; n <= nmax; ++n)
        r.push_back(-((t - Rational(2)) * Rational(2 * n - 1) * r[n - 1] +
                      t * t * Rational(n - 1) * r[n - 2]) /
                    Rational(n));
    return r;
}

/// r(n, 2) in closed form: 0 for even n, (-1)^m m! 2^{3m+2} / (2m+1)!! for n = 2m+1.
inline Rational r_t2_closed(unsigned n) {
    if (n % 2 == 0) return 0;
    const unsigned m = (n - 1) / 2;
    return sign_power(m) * factorial(m) * pow(Rational(2), 3L * m + 2) / double_factorial(2L * m + 1);
}

/// det (H_{i+j}(t,s))_{i,j=0}^n through the bordering reduction; 0 for n = 0.
inline Rational harmonic_hankel_det(unsigned n, const Rational& t, const Rational& s = 1) {
    detail::require_shape(s);
    if (n == 0) return 0;
    return pow(-t, n) / binomial_general(Rational(2 * n) + s - Rational(1), n) *
           generalized_det_closed(n - 1, t, s) * r_direct(n, t, s);
}

/// (-1)^n 2 H_n / (C(2n,n) prod_{j=1}^{n-1} (2j+1) C(2j,j)^2)
inline Rational harmonic_det_closed_t1(unsigned n) {
    Rational den = binomial(2L * n, n);
    for (long j = 1; j + 1 <= static_cast<long>(n); ++j) {
        const Rational c = binomial(2 * j, j);
        den *= Rational(2 * j + 1) * c * c;
    }
    return sign_power(n) * Rational(2) * harmonic_number(n) / den;
}

/// t = 1, general s:
/// (-1)^n s^{n-1} (s H_n + H_n(1,s)) / (C(2n+s-1,n) prod_{j=1}^{n-1} (2j+s) C(2j+s-1,j)^2)
inline Rational harmonic_det_closed_unit_t(unsigned n, const Rational& s) {
    detail::require_shape(s);
    if (n == 0) return 0;
    Rational den = binomial_general(Rational(2 * n) + s - Rational(1), n);
    for (unsigned j = 1; j + 1 <= n; ++j) {
        const Rational c = binomial_general(Rational(2 * j) + s - Rational(1), j);
        den *= (Rational(2 * j) + s) * c * c;
    }
    const Rational r = s * harmonic_number(n) + harmonic_number(n, 1, s);
    return sign_power(n) * pow(s, static_cast<long>(n) - 1) * r / den;
}

/// t = 2, s = 1. Even order vanishes; order 2m+1 is
///   (-1)^{m+1} 2^{4m^2+7m+3} m! / ((2m+1)! (2m+1)!! prod_{j=1}^{2m+1} C(2j,j) C(2j-1,j))
inline Rational harmonic_det_closed_t2(unsigned n) {
    if (n % 2 == 0) return 0;
    const long m = (n - 1) / 2;
    Rational den = factorial(static_cast<unsigned>(2 * m + 1)) * double_factorial(2 * m + 1);
    for (long j = 1; j <= 2 * m + 1; ++j) den *= binomial(2 * j, j) * binomial(2 * j - 1, j);
    return sign_power(m + 1) * pow(Rational(2), 4 * m * m + 7 * m + 3) *
           factorial(static_cast<unsigned>(m)) / den;
}

/// Checks det(H_{i+j}(t)) = (-t)^n det(B), where B keeps the first n columns
/// of (t^{i+j}/(i+j+1)) and replaces the last with (0, H_1(t), ..., H_n(t)).
/// Both sides via det_oracle.
inline bool bordered_reduction_check(unsigned n, const Rational& t) {
    if (n == 0) throw DomainError("bordered reduction needs n >= 1");
    const auto kind = MomentKind::harmonic(t, 1);
    const Mat lhs = hankel_matrix(kind, n);
    const Mat hil = hankel_matrix(MomentKind::hilbert(t), n);
    const Mat bordered = Mat::generate(n + 1, n + 1, [&](std::size_t i, std::size_t j) {
        return j < n ? hil(i, j) : harmonic_number(static_cast<unsigned>(i), t);
    });
    return det_oracle(lhs) == pow(-t, n) * det_oracle(bordered);
}

struct Witness {
    std::size_t i;
    std::size_t j;
    Rational entry;
};

struct ConjectureReport {
    unsigned n;
    mpz_class numerator;  // U_n with 2 H_n = U_n / V_n in lowest terms
    bool holds;
    std::optional<Witness> witness;
};

/// Is U_n times the inverse of (H_{i+j})_{i,j=0}^n integer-valued?
inline ConjectureReport conjecture_check(unsigned n) {
    if (n == 0) throw DomainError("harmonic Hankel matrix of order 0 is [0], singular");
    const Mat inv = invert_oracle(hankel_matrix(MomentKind::harmonic(1, 1), n));
    const Rational two_h = Rational(2) * harmonic_number(n);
    ConjectureReport rep{n, two_h.num(), true, std::nullopt};
    const Rational u(rep.numerator);
    for (std::size_t i = 0; i < inv.rows() && rep.holds; ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) {
            Rational e = u * inv(i, j);
            if (!e.is_integer()) {
                rep.holds = false;
                rep.witness = Witness{i, j, std::move(e)};
                break;
            }
        }
    return rep;
}

inline std::vector<ConjectureReport> conjecture_scan(unsigned nmax) {
    if (nmax < 1) throw DomainError("conjecture scan needs nmax >= 1");
    std::vector<ConjectureReport> out;
    out.reserve(nmax);
    for (unsigned n = 1; n <= nmax; ++n) out.push_back(conjecture_check(n));
    return out;
}

}  // namespace hankel
