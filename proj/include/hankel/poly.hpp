#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "rational.hpp"

namespace hankel {

/// Dense univariate polynomial, coeffs()[i] multiplies x^i.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<Rational> cs) : c_(std::move(cs)) { trim(); }

    static Poly constant(const Rational& c) { return Poly({c}); }
    static Poly monomial(const Rational& c, std::size_t degree) {
        std::vector<Rational> cs(degree + 1);
        cs[degree] = c;
        return Poly(std::move(cs));
    }
    /// x - root
    static Poly linear(const Rational& root) { return Poly({-root, Rational(1)}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator-() const {
        auto cs = c_;
        for (auto& c : cs) c = -c;
        return Poly(std::move(cs));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> cs(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(cs));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> cs(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) cs[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(cs));
    }
    friend Poly operator*(const Rational& k, const Poly& p) {
        auto cs = p.c_;
        for (auto& c : cs) c *= k;
        return Poly(std::move(cs));
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// "[c0, c1, ...]" low to high degree.
    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ", ";
            out += c_[i].str();
        }
        if (c_.empty()) out += "0";
        return out + "]";
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Rational poly_eval(const Poly& p, const Rational& x) { return p.eval(x); }

}  // namespace hankel
