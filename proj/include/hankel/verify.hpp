#pragma once

/*
 * Named verification suites. Each one sweeps an identity over a parameter
 * grid, comparing two independently computed sides, and reports the number
 * of cases together with the first counterexample.
 */

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "closed_forms.hpp"
#include "elimination.hpp"
#include "harmonic_hankel.hpp"
#include "moments.hpp"
#include "stieltjes.hpp"

namespace hankel::verify {

struct SuiteResult {
    explicit SuiteResult(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::optional<std::string> counterexample;

    bool passed() const { return failures == 0; }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++cases;
        if (ok) return;
        ++failures;
        if (!counterexample) counterexample = describe();
    }
    template <class A, class B>
    void expect_eq(const A& got, const B& want, std::string where) {
        check(got == want, [&] { return where + ": got " + got.str() + ", expected " + want.str(); });
    }
};

/// A printed formula that disagrees with the oracle, paired with the corrected
/// form that agrees. `confirmed()` means both halves of that claim held.
struct TranscriptionFinding {
    std::string formula;
    std::string correction;
    std::optional<std::string> printed_witness;  // first case where the printed form fails
    SuiteResult corrected;

    bool confirmed() const { return printed_witness.has_value() && corrected.passed(); }
};

struct Options {
    std::optional<unsigned> nmax;
};

inline unsigned nmax_or(const Options& o, unsigned dflt) { return o.nmax.value_or(dflt); }

inline std::vector<MomentKind> functional_grid() {
    return {MomentKind::hilbert(1), MomentKind::hilbert(2), MomentKind::generalized(1, Rational(3, 2))};
}

inline std::vector<std::pair<Rational, Rational>> harmonic_grid() {
    return {{1, 1}, {2, 1}, {1, 2}, {Rational(1, 2), Rational(3, 2)}, {3, Rational(7, 3)}};
}

inline std::string at(std::string_view what, std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::string out(what);
    out += " [";
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) out += ", ";
        first = false;
        out += std::string(k) + "=" + v;
    }
    return out + "]";
}

inline std::string num(unsigned v) { return std::to_string(v); }

// sum_k a(n,k) a(m,k) prod_{j<k} weight(j) = a(m+n)
inline SuiteResult moment_sum(const Options& o) {
    SuiteResult r("moment-sum");
    const unsigned N = nmax_or(o, 10);
    for (const auto& kind : functional_grid()) {
        const Mat a = triangle(kind, N);
        const Factorization f = factorize(kind, N);
        for (unsigned n = 0; n <= N; ++n)
            for (unsigned m = 0; m <= N; ++m) {
                Rational sum = 0;
                for (unsigned k = 0; k <= std::min(n, m); ++k) sum += a(n, k) * a(m, k) * f.diagonal(k, k);
                r.expect_eq(sum, moment(kind, n + m),
                            at("moment sum", {{"kind", kind.str()}, {"n", num(n)}, {"m", num(m)}}));
            }
    }
    return r;
}

// sum_k a(n,k) p_k(x) = x^n
inline SuiteResult basis_inversion(const Options& o) {
    SuiteResult r("basis-inversion");
    const unsigned N = nmax_or(o, 10);
    for (const auto& kind : functional_grid()) {
        const Mat a = triangle(kind, N);
        const auto p = orthogonal_polys(kind, N);
        for (unsigned n = 0; n <= N; ++n) {
            Poly sum;
            for (unsigned k = 0; k <= n; ++k) sum = sum + a(n, k) * p[k];
            r.check(sum == Poly::monomial(1, n), [&] {
                return at("basis inversion", {{"kind", kind.str()}, {"n", num(n)}}) + ": got " + sum.str();
            });
        }
    }
    return r;
}

inline SuiteResult orthogonality(const Options& o) {
    SuiteResult r("orthogonality");
    const unsigned N = nmax_or(o, 8);
    for (const auto& kind : functional_grid()) {
        const auto p = orthogonal_polys(kind, N);
        for (unsigned n = 0; n <= N; ++n) {
            const auto where = [&](std::string_view w) { return at(w, {{"kind", kind.str()}, {"n", num(n)}}); };
            r.check(p[n].is_monic() && p[n].degree() == static_cast<long>(n),
                    [&] { return where("monic degree") + ": " + p[n].str(); });
            for (unsigned k = 0; k < n; ++k)
                r.expect_eq(apply_functional(kind, p[n] * Poly::monomial(1, k)), Rational(0),
                            where("F(p_n x^" + num(k) + ")"));
            r.expect_eq(apply_functional(kind, p[n] * p[n]), norm_squared(kind, n), where("norm squared"));
            const Poly closed = orthogonal_poly_closed(n, kind.t(), kind.s());
            r.check(p[n] == closed, [&] { return where("closed form") + ": " + p[n].str() + " vs " + closed.str(); });
            if (n <= 6) {
                const Poly bordered = orthopoly_det_oracle(kind, n);
                r.check(p[n] == bordered,
                        [&] { return where("bordered determinant") + ": " + p[n].str() + " vs " + bordered.str(); });
            }
        }
    }
    return r;
}

inline SuiteResult legendre(const Options& o) {
    SuiteResult r("legendre");
    const unsigned N = nmax_or(o, 15);
    for (const Rational& t : {Rational(1), Rational(2), Rational(1, 3)}) {
        const Poly two_x_minus_t({-t, Rational(2)});
        for (unsigned n = 0; n + 2 <= N; ++n) {
            const Poly lhs = Rational(n + 2) * shifted_legendre(n + 2, t) -
                             Rational(2 * n + 3) * two_x_minus_t * shifted_legendre(n + 1, t) +
                             t * t * Rational(n + 1) * shifted_legendre(n, t);
            r.check(lhs.is_zero(), [&] { return at("three-term recurrence", {{"t", t.str()}, {"n", num(n)}}); });
        }
        for (unsigned n = 0; n <= std::min(N, 12u); ++n) {
            r.expect_eq(shifted_legendre(n, t).eval(0), pow(-t, n), at("P_n(0,t)", {{"t", t.str()}, {"n", num(n)}}));
            const Poly monic = orthogonal_poly(MomentKind::hilbert(t), n);
            r.check(binomial(2L * n, n) * monic == shifted_legendre(n, t),
                    [&] { return at("C(2n,n) p_n = P_n", {{"t", t.str()}, {"n", num(n)}}); });
        }
    }
    for (unsigned n = 0; n <= std::max(N, 20u); ++n)
        r.expect_eq(shifted_legendre(n, 1).eval(1), Rational(1), at("P_n(1,1)", {{"n", num(n)}}));
    return r;
}

// F(P_n(., t)) = 0 for n >= 1
inline SuiteResult legendre_functional(const Options& o) {
    SuiteResult r("legendre-functional");
    const unsigned N = nmax_or(o, 12);
    for (const Rational& t : {Rational(1), Rational(2)})
        for (unsigned n = 1; n <= N; ++n)
            r.expect_eq(apply_functional(MomentKind::hilbert(t), shifted_legendre(n, t)), Rational(0),
                        at("F(P_n)", {{"t", t.str()}, {"n", num(n)}}));
    return r;
}

inline SuiteResult sum_identity(const Options& o) {
    SuiteResult r("sum-identity");
    const unsigned N = nmax_or(o, 5);
    for (unsigned n = 0; n <= N; ++n)
        for (unsigned i = 0; i <= n; ++i)
            for (unsigned j = 0; j <= n; ++j) {
                const auto [lhs, rhs] = s_identity_sides(n, i, j);
                r.expect_eq(lhs, rhs, at("sum identity", {{"n", num(n)}, {"i", num(i)}, {"j", num(j)}}));
            }
    return r;
}

inline SuiteResult determinants(const Options& o) {
    SuiteResult r("determinants");
    const unsigned N = nmax_or(o, 10);
    for (const Rational& t : {Rational(1), Rational(2), Rational(1, 3)}) {
        const auto kind = MomentKind::hilbert(t);
        for (unsigned n = 0; n <= N; ++n) {
            const Rational oracle = det_oracle(hankel_matrix(kind, n));
            const auto where = at("hilbert determinant", {{"t", t.str()}, {"n", num(n)}});
            r.expect_eq(hilbert_det_closed(n, t), oracle, where + " closed");
            r.expect_eq(hankel_det(kind, n), oracle, where + " product");
        }
    }
    for (const Rational& s : {Rational(1), Rational(2), Rational(1, 2), Rational(7, 3)}) {
        const auto kind = MomentKind::generalized(1, s);
        for (unsigned n = 0; n <= std::min(N, 8u); ++n) {
            const Rational oracle = det_oracle(hankel_matrix(kind, n));
            const auto where = at("generalized determinant", {{"s", s.str()}, {"n", num(n)}});
            r.expect_eq(generalized_det_closed(n, 1, s), oracle, where + " closed");
            r.expect_eq(hankel_det(kind, n), oracle, where + " product");
        }
    }
    return r;
}

inline SuiteResult factorization(const Options& o) {
    SuiteResult r("factorization");
    const unsigned N = nmax_or(o, 12);
    std::vector<MomentKind> kinds = functional_grid();
    kinds.push_back(MomentKind::hilbert(Rational(1, 3)));
    for (const Rational& s : {Rational(2), Rational(1, 2), Rational(7, 3)}) kinds.push_back(MomentKind::generalized(1, s));
    for (const auto& kind : kinds) {
        const Factorization f = factorize(kind, N);
        r.check(f.product() == hankel_matrix(kind, N),
                [&] { return at("A D A^T", {{"kind", kind.str()}, {"n", num(N)}}); });
        for (unsigned n = 0; n <= N; ++n) {
            r.expect_eq(f.lower(n, n), Rational(1), at("unit diagonal", {{"kind", kind.str()}, {"n", num(n)}}));
            r.expect_eq(f.lower(n, 0), moment(kind, n), at("column zero", {{"kind", kind.str()}, {"n", num(n)}}));
            for (unsigned k = 0; k <= n; ++k)
                r.expect_eq(f.lower(n, k), triangle_entry_closed(n, k, kind.t(), kind.s()),
                            at("closed triangle", {{"kind", kind.str()}, {"n", num(n)}, {"k", num(k)}}));
        }
    }
    return r;
}

inline SuiteResult inverses(const Options& o) {
    SuiteResult r("inverses");
    const unsigned N = nmax_or(o, 10);
    for (unsigned n = 0; n <= N; ++n) {
        const Mat inv = inverse_hilbert(n);
        const Mat h = hankel_matrix(MomentKind::hilbert(1), n);
        r.check(inv.is_integer_valued(), [&] { return at("integer inverse", {{"n", num(n)}}); });
        r.check(h * inv == Mat::identity(n + 1), [&] { return at("M M^-1 = I", {{"n", num(n)}}); });
    }
    for (const auto& kind : functional_grid())
        for (unsigned n = 0; n <= std::min(N, 8u); ++n) {
            const Mat k = kernel_inverse(kind, n);
            r.check(k == invert_oracle(hankel_matrix(kind, n)) && k.is_symmetric(),
                    [&] { return at("kernel inverse", {{"kind", kind.str()}, {"n", num(n)}}); });
        }
    for (unsigned n = 0; n <= std::min(N, 8u); ++n)
        r.check(kernel_inverse(MomentKind::hilbert(1), n) == inverse_hilbert(n),
                [&] { return at("kernel vs explicit inverse", {{"n", num(n)}}); });
    for (const Rational& s : {Rational(1), Rational(2), Rational(1, 2), Rational(7, 3)})
        for (unsigned n = 0; n <= std::min(N, 6u); ++n)
            r.check(inverse_generalized(n, s) == invert_oracle(hankel_matrix(MomentKind::generalized(1, s), n)),
                    [&] { return at("generalized inverse", {{"s", s.str()}, {"n", num(n)}}); });
    return r;
}

inline SuiteResult harmonic_recurrence(const Options& o) {
    SuiteResult r("harmonic-recurrence");
    const unsigned N = nmax_or(o, 25);
    for (const auto& [t, s] : harmonic_grid()) {
        const auto seq = r_recurrence(N, t, s);
        for (unsigned n = 0; n <= N; ++n)
            r.expect_eq(seq[n], r_direct(n, t, s), at("r recurrence", {{"t", t.str()}, {"s", s.str()}, {"n", num(n)}}));
    }
    return r;
}

// r(n, 1) = 2 H_n
inline SuiteResult harmonic_r_t1(const Options& o) {
    SuiteResult r("harmonic-r-t1");
    const unsigned N = nmax_or(o, 40);
    for (unsigned n = 0; n <= N; ++n)
        r.expect_eq(r_direct(n, 1), Rational(2) * harmonic_number(n), at("r(n,1)", {{"n", num(n)}}));
    return r;
}

// r(n, 1, s) = s H_n + H_n(1, s)
inline SuiteResult harmonic_r_s(const Options& o) {
    SuiteResult r("harmonic-r-s");
    const unsigned N = nmax_or(o, 20);
    for (const Rational& s : {Rational(2), Rational(1, 2), Rational(7, 3)})
        for (unsigned n = 0; n <= N; ++n)
            r.expect_eq(r_direct(n, 1, s), s * harmonic_number(n) + harmonic_number(n, 1, s),
                        at("r(n,1,s)", {{"s", s.str()}, {"n", num(n)}}));
    return r;
}

inline SuiteResult harmonic_determinants(const Options& o) {
    SuiteResult r("harmonic-determinants");
    const unsigned N = nmax_or(o, 8);
    for (const auto& [t, s] : harmonic_grid())
        for (unsigned n = 0; n <= N; ++n)
            r.expect_eq(harmonic_hankel_det(n, t, s), det_oracle(hankel_matrix(MomentKind::harmonic(t, s), n)),
                        at("harmonic determinant", {{"t", t.str()}, {"s", s.str()}, {"n", num(n)}}));
    for (unsigned n = 0; n <= N; ++n) {
        r.expect_eq(harmonic_det_closed_t1(n), harmonic_hankel_det(n, 1), at("t=1 closed form", {{"n", num(n)}}));
        for (const Rational& s : {Rational(2), Rational(1, 2), Rational(7, 3)})
            r.expect_eq(harmonic_det_closed_unit_t(n, s), harmonic_hankel_det(n, 1, s),
                        at("t=1 closed form", {{"s", s.str()}, {"n", num(n)}}));
    }
    const unsigned order_max = std::max(19u, N);
    for (unsigned n = 0; n <= order_max; ++n) {
        const auto where = at("t=2 closed form", {{"n", num(n)}});
        const Rational oracle = det_oracle(hankel_matrix(MomentKind::harmonic(2, 1), n));
        r.expect_eq(harmonic_det_closed_t2(n), oracle, where + " vs oracle");
        r.expect_eq(harmonic_hankel_det(n, 2), oracle, where + " reduction vs oracle");
        r.expect_eq(r_t2_closed(n), r_direct(n, 2), at("r(n,2) closed form", {{"n", num(n)}}));
    }
    return r;
}

inline SuiteResult reductions(const Options& o) {
    SuiteResult r("reductions");
    const unsigned N = nmax_or(o, 8);
    for (const Rational& t : {Rational(1), Rational(2), Rational(1, 2)}) {
        for (unsigned n = 1; n <= N; ++n)
            r.check(bordered_reduction_check(n, t), [&] { return at("bordered reduction", {{"t", t.str()}, {"n", num(n)}}); });
        const auto general = r_recurrence(25, t, 1);
        const auto unit = r_recurrence_unit_shape(25, t);
        for (unsigned n = 0; n <= 25; ++n)
            r.expect_eq(general[n], unit[n], at("s=1 recurrence", {{"t", t.str()}, {"n", num(n)}}));
        for (unsigned n = 0; n <= 40; ++n)
            r.expect_eq(moment(MomentKind::generalized(t, 1), n), moment(MomentKind::hilbert(t), n),
                        at("generalized s=1 moment", {{"t", t.str()}, {"n", num(n)}}));
    }
    for (unsigned n = 0; n <= N; ++n) {
        r.expect_eq(generalized_det_closed(n, 2, 1), hilbert_det_closed(n, 2), at("s=1 determinant", {{"n", num(n)}}));
        for (unsigned i = 0; i <= n; ++i)
            for (unsigned j = 0; j <= n; ++j)
                r.expect_eq(inverse_generalized_entry(n, i, j, 1), inverse_hilbert_entry(n, i, j),
                            at("s=1 inverse", {{"n", num(n)}, {"i", num(i)}, {"j", num(j)}}));
    }
    const JacobiCoeffs jc(MomentKind::hilbert(3));
    for (unsigned n = 0; n <= 20; ++n) {
        r.expect_eq(jc.shift(n), Rational(3, 2), at("s=1 shift", {{"n", num(n)}}));
        r.expect_eq(jc.weight(n), Rational((n + 1) * (n + 1) * 9, 4 * (2 * n + 1) * (2 * n + 3)),
                    at("s=1 weight", {{"n", num(n)}}));
    }
    return r;
}

inline SuiteResult conjecture(const Options& o) {
    SuiteResult r("conjecture");
    for (const auto& rep : conjecture_scan(nmax_or(o, 12)))
        r.check(rep.holds, [&] {
            return at("U_n (H_{i+j})^-1 integral", {{"n", num(rep.n)}}) + ": entry (" + std::to_string(rep.witness->i) +
                   "," + std::to_string(rep.witness->j) + ") = " + rep.witness->entry.str();
        });
    return r;
}

inline std::vector<TranscriptionFinding> transcription_findings(unsigned nmax = 8) {
    std::vector<TranscriptionFinding> out;
    const std::vector<Rational> shapes{Rational(1), Rational(2), Rational(1, 2), Rational(7, 3)};

    {
        TranscriptionFinding f{"determinant of (s t^{i+j}/(i+j+s))",
                               "binomial C(2j+s-1, j) in the denominator product must be squared",
                               std::nullopt, SuiteResult{"generalized-determinant"}};
        for (const auto& s : shapes)
            for (unsigned n = 0; n <= nmax; ++n) {
                const Rational oracle = det_oracle(hankel_matrix(MomentKind::generalized(1, s), n));
                if (!f.printed_witness && generalized_det_printed(n, 1, s) != oracle)
                    f.printed_witness = at("printed", {{"s", s.str()}, {"n", num(n)}}) + ": " +
                                        generalized_det_printed(n, 1, s).str() + " vs oracle " + oracle.str();
                f.corrected.expect_eq(generalized_det_closed(n, 1, s), oracle, at("corrected", {{"s", s.str()}, {"n", num(n)}}));
            }
        out.push_back(std::move(f));
    }
    {
        TranscriptionFinding f{"squared norm F(p_n^2) of the generalized family",
                               "binomial C(2n+s-1, n) in the denominator must be squared",
                               std::nullopt, SuiteResult{"generalized-norm"}};
        for (const auto& s : shapes)
            for (unsigned n = 0; n <= nmax; ++n) {
                const Rational product = norm_squared(MomentKind::generalized(1, s), n);
                if (!f.printed_witness && norm_squared_printed(n, 1, s) != product)
                    f.printed_witness = at("printed", {{"s", s.str()}, {"n", num(n)}}) + ": " +
                                        norm_squared_printed(n, 1, s).str() + " vs product " + product.str();
                f.corrected.expect_eq(norm_squared_closed(n, 1, s), product, at("corrected", {{"s", s.str()}, {"n", num(n)}}));
            }
        out.push_back(std::move(f));
    }
    {
        TranscriptionFinding f{"rising-factorial form of the inverse of (s/(i+j+s))",
                               "prefactor is 1/(n!)^2, not 1/n!", std::nullopt,
                               SuiteResult{"generalized-inverse-rising"}};
        for (const auto& s : shapes)
            for (unsigned n = 0; n <= std::min(nmax, 6u); ++n) {
                const Mat oracle = invert_oracle(hankel_matrix(MomentKind::generalized(1, s), n));
                for (unsigned i = 0; i <= n; ++i)
                    for (unsigned j = 0; j <= n; ++j) {
                        const auto where = at("", {{"s", s.str()}, {"n", num(n)}, {"i", num(i)}, {"j", num(j)}});
                        const Rational printed = inverse_generalized_entry_rising_printed(n, i, j, s);
                        if (!f.printed_witness && printed != oracle(i, j))
                            f.printed_witness = "printed" + where + ": " + printed.str() + " vs oracle " + oracle(i, j).str();
                        f.corrected.expect_eq(inverse_generalized_entry_rising(n, i, j, s), oracle(i, j), "corrected" + where);
                    }
            }
        out.push_back(std::move(f));
    }
    return out;
}

inline SuiteResult transcription(const Options& o) {
    SuiteResult r("transcription");
    for (const auto& f : transcription_findings(nmax_or(o, 8)))
        r.check(f.confirmed(), [&] {
            return f.formula + ": " + (f.printed_witness ? "corrected form failed: " + f.corrected.counterexample.value_or("")
                                                         : std::string("printed form unexpectedly holds"));
        });
    return r;
}

struct Suite {
    std::string name;
    std::vector<std::string> aliases;
    std::string description;
    std::function<SuiteResult(const Options&)> run;
};

inline const std::vector<Suite>& suites() {
    static const std::vector<Suite> all{
        {"moment-sum", {"eq1.7"}, "sum_k a(n,k) a(m,k) prod t(j) = a(n+m)", moment_sum},
        {"basis-inversion", {"eq1.9"}, "sum_k a(n,k) p_k(x) = x^n", basis_inversion},
        {"orthogonality", {}, "monic orthogonal polynomials, norms, bordered determinants", orthogonality},
        {"legendre", {}, "shifted Legendre recurrence, P_n(0,t), P_n(1,1)", legendre},
        {"legendre-functional", {"eq2.12"}, "F(P_n) = 0 for n >= 1", legendre_functional},
        {"sum-identity", {"eq2.14"}, "binomial sum identity behind the integer inverse", sum_identity},
        {"determinants", {}, "closed form = product route = elimination", determinants},
        {"factorization", {}, "A D A^T reconstruction and closed-form triangle", factorization},
        {"inverses", {}, "explicit, kernel and elimination inverses", inverses},
        {"harmonic-recurrence", {}, "r by direct sum = r by recurrence", harmonic_recurrence},
        {"harmonic-r-t1", {"eq4.1"}, "r(n,1) = 2 H_n", harmonic_r_t1},
        {"harmonic-r-s", {"eq5.12"}, "r(n,1,s) = s H_n + H_n(1,s)", harmonic_r_s},
        {"harmonic-determinants", {}, "harmonic Hankel determinants vs elimination", harmonic_determinants},
        {"reductions", {}, "bordering and s = 1 reductions", reductions},
        {"transcription", {}, "printed formulas that fail, with validated corrections", transcription},
        {"conjecture", {}, "U_n times the harmonic Hankel inverse is integral", conjecture},
    };
    return all;
}

inline const Suite* find_suite(std::string_view name) {
    for (const auto& s : suites()) {
        if (s.name == name) return &s;
        if (std::find(s.aliases.begin(), s.aliases.end(), name) != s.aliases.end()) return &s;
    }
    return nullptr;
}

}  // namespace hankel::verify
