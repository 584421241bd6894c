#pragma once

/*
 * Elimination oracles.
 *
 * det_oracle clears denominators row by row and runs one-step Bareiss
 * elimination over the integers: every division in the update
 *
 *     m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous_pivot
 *
 * is exact, so intermediates stay integral and bounded by minors of the
 * input. invert_oracle is plain Gauss-Jordan over canonical rationals.
 *
 * Neither routine knows anything about moment sequences or recurrences.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace hankel {

inline Rational det_oracle(const Mat& m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    // Row i scaled by the lcm of its denominators.
    std::vector<mpz_class> a(n * n);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class d = m(i, j).den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            const auto& q = m(i, j).raw();
            a[i * n + j] = q.get_num() * (l / q.get_den());
        }
        scale *= l;
    }

    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    mpz_class det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return Rational(det, scale);
}

/// Throws SingularMatrixError carrying the column whose pivot search failed.
inline Mat invert_oracle(const Mat& m) {
    if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const std::size_t w = 2 * n;
    std::vector<Rational> a(n * w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * w + j] = m(i, j);
        a[i * w + n + i] = 1;
    }
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * w + j]; };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && at(p, k).is_zero()) ++p;
        if (p == n) throw SingularMatrixError(k);
        if (p != k)
            for (std::size_t j = 0; j < w; ++j) std::swap(at(k, j), at(p, j));

        const Rational inv = Rational(1) / at(k, k);
        for (std::size_t j = k; j < w; ++j) at(k, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || at(i, k).is_zero()) continue;
            const Rational f = at(i, k);
            for (std::size_t j = k; j < w; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return Mat::generate(n, n, [&](std::size_t i, std::size_t j) { return at(i, n + j); });
}

}  // namespace hankel
