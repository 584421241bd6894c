#pragma once

/*
 * Orthogonal-polynomial route to Hankel determinants and inverses.
 *
 * For a moment sequence a(n) with a(0) = 1 the monic orthogonal polynomials
 * obey
 *
 *     p(n, x) = (x - shift(n-1)) p(n-1, x) - weight(n-2) p(n-2, x)
 *
 * and the triangle
 *
 *     a(0, j) = [j = 0]
 *     a(n, j) = a(n-1, j-1) + shift(j) a(n-1, j) + weight(j) a(n-1, j+1)
 *
 * satisfies a(n, 0) = a(n). With A = (a(i,j)) and D = diag(prod_{j<k} weight(j))
 * the Hankel matrix is A D A^T, so its determinant is the product of D.
 *
 * The Hilbert and Generalized families have closed-form recurrence
 * coefficients; only those two are supported here.
 */

#include <cstddef>
#include <vector>

#include "elimination.hpp"
#include "matrix.hpp"
#include "moments.hpp"
#include "poly.hpp"

namespace hankel {

/// Three-term recurrence coefficients of a moment family.
class JacobiCoeffs {
public:
    explicit JacobiCoeffs(MomentKind kind) : kind_(std::move(kind)) {
        require_functional(kind_, "recurrence coefficients");
    }

    const MomentKind& kind() const { return kind_; }

    /// (2n^2 + (2n-1)s + s^2) t / ((s+2n-1)(s+2n+1))
    ///
    /// At n = 0 the numerator is s(s-1) and the factor (s-1) cancels, leaving
    /// s t / (s+1); evaluated in reduced form so s = 1 is not 0/0.
    Rational shift(unsigned n) const {
        const Rational& s = kind_.s();
        if (n == 0) return s * kind_.t() / (s + Rational(1));
        const Rational m(n);
        return (Rational(2) * m * m + (Rational(2) * m - Rational(1)) * s + s * s) * kind_.t() /
               ((s + Rational(2) * m - Rational(1)) * (s + Rational(2) * m + Rational(1)));
    }

    /// (n+1)^2 (n+s)^2 t^2 / ((s+2n)(s+2n+1)^2(s+2n+2))
    Rational weight(unsigned n) const {
        const Rational& s = kind_.s();
        const Rational m(n);
        const Rational q = s + Rational(2) * m;
        return (m + Rational(1)) * (m + Rational(1)) * (m + s) * (m + s) * kind_.t() * kind_.t() /
               (q * (q + Rational(1)) * (q + Rational(1)) * (q + Rational(2)));
    }

private:
    MomentKind kind_;
};

inline JacobiCoeffs jacobi(const MomentKind& kind) { return JacobiCoeffs(kind); }

struct Factorization {
    Mat lower;     // unit lower-triangular a(i, j)
    Mat diagonal;  // prod_{j<k} weight(j) on the diagonal

    std::size_t order() const { return lower.rows() - 1; }
    Mat product() const { return lower * diagonal * lower.transpose(); }
};

/// (n+1) x (n+1) matrix with entries moment(i + j). Works for every family.
inline Mat hankel_matrix(const MomentKind& kind, unsigned n) {
    std::vector<Rational> a(2 * n + 1);
    for (unsigned k = 0; k <= 2 * n; ++k) a[k] = moment(kind, k);
    return Mat::generate(n + 1, n + 1, [&](std::size_t i, std::size_t j) { return a[i + j]; });
}

/// Lower-triangular a(n, k) for 0 <= k <= n <= nmax, built row by row from the recurrence.
inline Mat triangle(const MomentKind& kind, unsigned nmax) {
    const JacobiCoeffs jc(kind);
    const std::size_t w = nmax + 1;
    std::vector<Rational> shift(w), weight(w);
    for (unsigned j = 0; j < w; ++j) {
        shift[j] = jc.shift(j);
        weight[j] = jc.weight(j);
    }
    std::vector<Rational> a(w * w);
    a[0] = 1;
    for (std::size_t n = 1; n < w; ++n) {
        for (std::size_t j = 0; j <= n; ++j) {
            Rational v = shift[j] * a[(n - 1) * w + j];
            if (j > 0) v += a[(n - 1) * w + j - 1];
            if (j + 1 < w) v += weight[j] * a[(n - 1) * w + j + 1];
            a[n * w + j] = std::move(v);
        }
    }
    return Mat(w, w, std::move(a));
}

/// prod_{j=0}^{n-1} weight(j), i.e. F(p_n^2).
inline Rational norm_squared(const MomentKind& kind, unsigned n) {
    const JacobiCoeffs jc(kind);
    Rational r = 1;
    for (unsigned j = 0; j < n; ++j) r *= jc.weight(j);
    return r;
}

inline Factorization factorize(const MomentKind& kind, unsigned n) {
    const JacobiCoeffs jc(kind);
    std::vector<Rational> d(n + 1);
    d[0] = 1;
    for (unsigned k = 1; k <= n; ++k) d[k] = d[k - 1] * jc.weight(k - 1);
    return {triangle(kind, n), Mat::diagonal(d)};
}

/// prod_{i=1}^n prod_{j=0}^{i-1} weight(j)
inline Rational hankel_det(const MomentKind& kind, unsigned n) {
    const JacobiCoeffs jc(kind);
    Rational det = 1, partial = 1;
    for (unsigned i = 1; i <= n; ++i) {
        partial *= jc.weight(i - 1);
        det *= partial;
    }
    return det;
}

/// p_0 .. p_nmax from the three-term recurrence.
inline std::vector<Poly> orthogonal_polys(const MomentKind& kind, unsigned nmax) {
    const JacobiCoeffs jc(kind);
    std::vector<Poly> p;
    p.reserve(nmax + 1);
    p.push_back(Poly::constant(1));
    if (nmax >= 1) p.push_back(Poly::linear(jc.shift(0)));
    for (unsigned n = 2; n <= nmax; ++n)
        p.push_back(Poly::linear(jc.shift(n - 1)) * p[n - 1] - jc.weight(n - 2) * p[n - 2]);
    return p;
}

inline Poly orthogonal_poly(const MomentKind& kind, unsigned n) {
    return orthogonal_polys(kind, n).back();
}

/// Monic orthogonal polynomial from its bordered-determinant definition: the
/// n x n leading Hankel block bordered by the column (1, x, ..., x^n),
/// expanded along that column and divided by the block determinant.
inline Poly orthopoly_det_oracle(const MomentKind& kind, unsigned n) {
    require_functional(kind, "bordered determinant polynomial");
    if (n == 0) return Poly::constant(1);
    const Mat h = hankel_matrix(kind, n);  // (n+1) x (n+1); drop last column below
    const Rational lead = det_oracle(hankel_matrix(kind, n - 1));
    if (lead.is_zero()) throw SingularMatrixError(n - 1);

    const Mat bordered = Mat::generate(n + 1, n + 1, [&](std::size_t i, std::size_t j) {
        return j < n ? h(i, j) : Rational(0);
    });
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Rational cof = det_oracle(bordered.minor(i, n));
        c[i] = ((i + n) % 2 == 0 ? cof : -cof) / lead;
    }
    return Poly(std::move(c));
}

/// Hankel inverse from the kernel polynomial sum_k p_k(x) p_k(y) / F(p_k^2):
/// entry (i, j) is the coefficient of x^i y^j.
inline Mat kernel_inverse(const MomentKind& kind, unsigned n) {
    const auto p = orthogonal_polys(kind, n);
    const std::size_t w = n + 1;
    std::vector<Rational> b(w * w);
    Rational norm = 1;
    const JacobiCoeffs jc(kind);
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) norm *= jc.weight(k - 1);
        const Rational scale = Rational(1) / norm;
        const auto& c = p[k].coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Rational ci = scale * c[i];
            for (std::size_t j = 0; j < c.size(); ++j) b[i * w + j] += ci * c[j];
        }
    }
    return Mat(w, w, std::move(b));
}

}  // namespace hankel
