#pragma once

/*
 * Exact rational scalar.
 *
 * Thin value wrapper over GMP's mpq_class. Every constructor and operator
 * leaves the value canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
 *
 * Text form is "p/q" with the sign on p, or bare "p" when q = 1.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace hankel {

class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I v) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<I>) v_ = static_cast<long>(v);
        else v_ = static_cast<unsigned long>(v);
    }
    explicit Rational(const mpz_class& v) : v_(v) {}
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    template <std::integral I, std::integral J>
    Rational(I num, J den) : Rational(Rational(num).num(), Rational(den).num()) {}

    /// Parses "p", "-p", "p/q". Whitespace and decimals are rejected.
    static Rational parse(std::string_view text) {
        auto is_int = [](std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        auto to_mpz = [](std::string_view s) {
            if (!s.empty() && s.front() == '+') s.remove_prefix(1);
            return mpz_class(std::string(s), 10);
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            if (!is_int(text)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
            return Rational(to_mpz(text));
        }
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den))
            throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        mpz_class d = to_mpz(den);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        return Rational(to_mpz(num), d);
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_{0};
};

/// Integer power; negative exponents invert (zero base rejected).
inline Rational pow(const Rational& base, long e) {
    if (e < 0) return Rational(1) / pow(base, -e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

inline Rational sign_power(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace hankel
