#pragma once

/*
 * Closed forms for Hilbert-type Hankel matrices: determinants, shifted
 * Legendre polynomials, and the explicit inverses.
 *
 * A few formulas also come in a "printed" variant that reproduces a known
 * typographical slip (missing square, missing factorial). Those exist only so
 * the verification suite can show the slip is real; nothing else calls them.
 */

#include <stdexcept>
#include <utility>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace hankel {

/// det (t^{i+j} / (i+j+1))_{i,j=0}^n = t^{n^2+n} / prod_{j=1}^n (2j+1) C(2j,j)^2
inline Rational hilbert_det_closed(unsigned n, const Rational& t) {
    Rational den = 1;
    for (long j = 1; j <= static_cast<long>(n); ++j) {
        const Rational c = binomial(2 * j, j);
        den *= Rational(2 * j + 1) * c * c;
    }
    return pow(t, static_cast<long>(n) * n + n) / den;
}

/// det (s t^{i+j} / (i+j+s))_{i,j=0}^n = s^n t^{n^2+n} / prod_{j=1}^n (2j+s) C(2j+s-1, j)^2
inline Rational generalized_det_closed(unsigned n, const Rational& t, const Rational& s) {
    Rational den = 1;
    for (unsigned j = 1; j <= n; ++j) {
        const Rational c = binomial_general(Rational(2 * j) + s - Rational(1), j);
        den *= (Rational(2 * j) + s) * c * c;
    }
    return pow(s, n) * pow(t, static_cast<long>(n) * n + n) / den;
}

/// As printed, without the square on the binomial. Wrong for n >= 1.
inline Rational generalized_det_printed(unsigned n, const Rational& t, const Rational& s) {
    Rational den = 1;
    for (unsigned j = 1; j <= n; ++j)
        den *= (Rational(2 * j) + s) * binomial_general(Rational(2 * j) + s - Rational(1), j);
    return pow(s, n) * pow(t, static_cast<long>(n) * n + n) / den;
}

/// F(p_n^2) for the generalized family: s t^{2n} / ((2n+s) C(2n+s-1, n)^2).
inline Rational norm_squared_closed(unsigned n, const Rational& t, const Rational& s) {
    const Rational c = binomial_general(Rational(2 * n) + s - Rational(1), n);
    return s * pow(t, 2L * n) / ((Rational(2 * n) + s) * c * c);
}

/// As printed, binomial not squared. Wrong for n >= 1.
inline Rational norm_squared_printed(unsigned n, const Rational& t, const Rational& s) {
    return s * pow(t, 2L * n) /
           ((Rational(2 * n) + s) * binomial_general(Rational(2 * n) + s - Rational(1), n));
}

/// P_n(x, t) = sum_j (-t)^{n-j} C(n,j) C(n+j,j) x^j
inline Poly shifted_legendre(unsigned n, const Rational& t) {
    std::vector<Rational> c(n + 1);
    for (long j = 0; j <= static_cast<long>(n); ++j)
        c[j] = pow(-t, static_cast<long>(n) - j) * binomial(n, j) * binomial(n + j, j);
    return Poly(std::move(c));
}

/// P_n scaled down to the monic Hilbert-family orthogonal polynomial.
inline Poly monic_shifted_legendre(unsigned n, const Rational& t) {
    return (Rational(1) / binomial(2L * n, n)) * shifted_legendre(n, t);
}

namespace detail {
inline void check_indices(unsigned n, unsigned i, unsigned j) {
    if (i > n || j > n)
        throw DomainError("index (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") outside 0.." + std::to_string(n));
}
}  // namespace detail

/// Entry (i, j) of the inverse (n+1) x (n+1) Hilbert matrix:
/// (-1)^{i+j} (i+j+1) C(n+i+1, n-j) C(n+j+1, n-i) C(i+j, i)^2
inline Rational inverse_hilbert_entry(unsigned n, unsigned i, unsigned j) {
    detail::check_indices(n, i, j);
    const long N = n, I = i, J = j;
    const Rational c = binomial(I + J, I);
    return sign_power(I + J) * Rational(I + J + 1) * binomial(N + I + 1, N - J) *
           binomial(N + J + 1, N - I) * c * c;
}

inline Mat inverse_hilbert(unsigned n) {
    return Mat::generate(n + 1, n + 1, [n](std::size_t i, std::size_t j) {
        return inverse_hilbert_entry(n, static_cast<unsigned>(i), static_cast<unsigned>(j));
    });
}

/// Binomial form of the inverse of (s / (i+j+s)):
/// (-1)^{i+j} (i+j+s)/s C(n+i+s, n-j) C(n+j+s, n-i) C(i+j+s-1, i) C(i+j+s-1, j)
inline Rational inverse_generalized_entry_binomial(unsigned n, unsigned i, unsigned j,
                                                   const Rational& s) {
    detail::check_indices(n, i, j);
    const Rational ij(i + j);
    return sign_power(i + j) * (ij + s) / s *
           binomial_general(Rational(n + i) + s, n - j) *
           binomial_general(Rational(n + j) + s, n - i) *
           binomial_general(ij + s - Rational(1), i) *
           binomial_general(ij + s - Rational(1), j);
}

/// Rising-factorial form: (-1)^{i+j} / (s (s+i+j)) C(n,i) C(n,j) (s+i)^(n+1) (s+j)^(n+1) / (n!)^2
inline Rational inverse_generalized_entry_rising(unsigned n, unsigned i, unsigned j,
                                                 const Rational& s) {
    detail::check_indices(n, i, j);
    const Rational nf = factorial(n);
    return sign_power(i + j) / (s * (s + Rational(i + j))) * binomial(n, i) * binomial(n, j) *
           rising_factorial(s + Rational(i), n + 1) * rising_factorial(s + Rational(j), n + 1) /
           (nf * nf);
}

/// As printed, with a single 1/n!. Wrong for n >= 2.
inline Rational inverse_generalized_entry_rising_printed(unsigned n, unsigned i, unsigned j,
                                                         const Rational& s) {
    return inverse_generalized_entry_rising(n, i, j, s) * factorial(n);
}

/// Evaluates both forms; a disagreement is an internal error.
inline Rational inverse_generalized_entry(unsigned n, unsigned i, unsigned j, const Rational& s) {
    Rational a = inverse_generalized_entry_binomial(n, i, j, s);
    if (a != inverse_generalized_entry_rising(n, i, j, s))
        throw std::logic_error("inverse entry forms disagree at n=" + std::to_string(n) +
                               " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                               " s=" + s.str());
    return a;
}

/// Inverse of (s / (i+j+s))_{i,j=0}^n.
inline Mat inverse_generalized(unsigned n, const Rational& s) {
    return Mat::generate(n + 1, n + 1, [&](std::size_t i, std::size_t j) {
        return inverse_generalized_entry(n, static_cast<unsigned>(i), static_cast<unsigned>(j), s);
    });
}

/// Both sides of
///   sum_{k=max(i,j)}^n C(k,i) C(k,j) C(k+i,i) C(k+j,j) (2k+1)
///     = (i+j+1) C(n+i+1, n-j) C(n+j+1, n-i) C(i+j, i)^2
inline std::pair<Rational, Rational> s_identity_sides(unsigned n, unsigned i, unsigned j) {
    detail::check_indices(n, i, j);
    Rational lhs = 0;
    for (long k = std::max(i, j); k <= static_cast<long>(n); ++k)
        lhs += binomial(k, i) * binomial(k, j) * binomial(k + i, i) * binomial(k + j, j) *
               Rational(2 * k + 1);
    const long N = n, I = i, J = j;
    const Rational c = binomial(I + J, I);
    Rational rhs = Rational(I + J + 1) * binomial(N + I + 1, N - J) * binomial(N + J + 1, N - I) * c * c;
    return {std::move(lhs), std::move(rhs)};
}

}  // namespace hankel

namespace hankel {

/// a(n, k) = C(n, k) prod_{j=0}^k (s+k+j)/(s+n+j) t^{n-k}; zero above the diagonal.
inline Rational triangle_entry_closed(unsigned n, unsigned k, const Rational& t, const Rational& s) {
    if (k > n) return 0;
    Rational r = binomial(n, k) * pow(t, static_cast<long>(n - k));
    for (unsigned j = 0; j <= k; ++j) r *= (s + Rational(k + j)) / (s + Rational(n + j));
    return r;
}

/// Hilbert special case: C(n,k) (2k+1)!/k! n!/(n+k+1)! t^{n-k}
inline Rational hilbert_triangle_entry_closed(unsigned n, unsigned k, const Rational& t) {
    if (k > n) return 0;
    return binomial(n, k) * factorial(2 * k + 1) / factorial(k) * factorial(n) /
           factorial(n + k + 1) * pow(t, static_cast<long>(n - k));
}

/// Monic orthogonal polynomial of the generalized family:
/// C(2n+s-1, n)^{-1} sum_j (-t)^{n-j} C(n,j) C(n+j+s-1, n) x^j
inline Poly orthogonal_poly_closed(unsigned n, const Rational& t, const Rational& s) {
    std::vector<Rational> c(n + 1);
    const Rational norm = binomial_general(Rational(2 * n) + s - Rational(1), n);
    for (unsigned j = 0; j <= n; ++j)
        c[j] = pow(-t, static_cast<long>(n - j)) * binomial(n, j) *
               binomial_general(Rational(n + j) + s - Rational(1), n) / norm;
    return Poly(std::move(c));
}

}  // namespace hankel
