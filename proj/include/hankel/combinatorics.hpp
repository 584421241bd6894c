#pragma once

#include <cstdint>

#include "rational.hpp"

namespace hankel {

/// x(x-1)...(x-k+1) / k!, defined for any rational upper index.
inline Rational binomial_general(const Rational& x, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= x - Rational(i);
        r /= Rational(i + 1);
    }
    return r;
}

/// Ordinary binomial coefficient; zero when k < 0 or k > n.
inline Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

/// x(x+1)...(x+j-1)
inline Rational rising_factorial(const Rational& x, unsigned j) {
    Rational r = 1;
    for (unsigned i = 0; i < j; ++i) r *= x + Rational(i);
    return r;
}

inline Rational factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

/// n!! = n(n-2)(n-4)...; 0!! = (-1)!! = 1.
inline Rational double_factorial(long n) {
    if (n <= 0) return 1;
    mpz_class r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

/// s is a pole of the moment families when it is 0 or a negative integer.
inline bool admissible_shape(const Rational& s) {
    return !(s.is_integer() && s.sign() <= 0);
}

}  // namespace hankel
