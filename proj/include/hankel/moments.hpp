#pragma once

#include <string>
#include <string_view>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace hankel {

enum class Family { Hilbert, Generalized, Harmonic };

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::Hilbert: return "hilbert";
        case Family::Generalized: return "generalized";
        case Family::Harmonic: return "harmonic";
    }
    return "?";
}

inline Family parse_family(std::string_view name) {
    if (name == "hilbert") return Family::Hilbert;
    if (name == "generalized") return Family::Generalized;
    if (name == "harmonic") return Family::Harmonic;
    throw std::invalid_argument("unknown moment family '" + std::string(name) + "'");
}

/// Selects a moment sequence:
///   Hilbert      t^n / (n+1)
///   Generalized  s t^n / (n+s)
///   Harmonic     H_n(t,s) = sum_{k=1}^n s t^k / (k+s-1)
/// t must be nonzero and s must avoid 0, -1, -2, ... (Hilbert pins s = 1).
class MomentKind {
public:
    static MomentKind hilbert(const Rational& t) { return {Family::Hilbert, t, 1}; }
    static MomentKind generalized(const Rational& t, const Rational& s) {
        return {Family::Generalized, t, s};
    }
    static MomentKind harmonic(const Rational& t, const Rational& s = 1) {
        return {Family::Harmonic, t, s};
    }
    static MomentKind make(Family f, const Rational& t, const Rational& s) {
        return f == Family::Hilbert ? hilbert(t) : MomentKind(f, t, s);
    }

    Family family() const { return family_; }
    const Rational& t() const { return t_; }
    const Rational& s() const { return s_; }

    /// Hilbert and Generalized moments start at a(0) = 1 and define a functional.
    bool has_functional() const { return family_ != Family::Harmonic; }

    friend bool operator==(const MomentKind&, const MomentKind&) = default;

    std::string str() const {
        return std::string(family_name(family_)) + "(t=" + t_.str() + ", s=" + s_.str() + ")";
    }

private:
    MomentKind(Family f, Rational t, Rational s) : family_(f), t_(std::move(t)), s_(std::move(s)) {
        if (t_.is_zero()) throw DomainError("moment parameter t must be nonzero");
        if (!admissible_shape(s_))
            throw DomainError("moment parameter s must not be zero or a negative integer (got " +
                              s_.str() + ")");
    }

    Family family_;
    Rational t_;
    Rational s_;
};

/// H_n(t,s); H_0 = 0.
inline Rational harmonic_number(unsigned n, const Rational& t = 1, const Rational& s = 1) {
    Rational h = 0;
    Rational tk = 1;
    for (unsigned k = 1; k <= n; ++k) {
        tk *= t;
        h += s * tk / (Rational(k) + s - Rational(1));
    }
    return h;
}

inline Rational moment(const MomentKind& kind, unsigned n) {
    switch (kind.family()) {
        case Family::Hilbert: return pow(kind.t(), n) / Rational(n + 1);
        case Family::Generalized: return kind.s() * pow(kind.t(), n) / (Rational(n) + kind.s());
        case Family::Harmonic: return harmonic_number(n, kind.t(), kind.s());
    }
    return 0;
}

inline void require_functional(const MomentKind& kind, std::string_view what) {
    if (!kind.has_functional())
        throw UnsupportedFamilyError(std::string(what) +
                                     " is not defined for the harmonic family (H_0 = 0)");
}

/// F(p) = sum_k p_k a(k).
inline Rational apply_functional(const MomentKind& kind, const Poly& p) {
    require_functional(kind, "linear functional");
    Rational acc = 0;
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) acc += c[k] * moment(kind, static_cast<unsigned>(k));
    return acc;
}

}  // namespace hankel
