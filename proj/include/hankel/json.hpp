#pragma once

// nlohmann::json bindings. Rationals always travel as "p/q" strings.

#include <json.hpp>

#include "harmonic_hankel.hpp"
#include "matrix.hpp"
#include "moments.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "stieltjes.hpp"

namespace hankel {

inline void to_json(nlohmann::json& j, const Rational& r) { j = r.str(); }
inline void from_json(const nlohmann::json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

inline void to_json(nlohmann::json& j, const Poly& p) {
    j = nlohmann::json::array();
    for (const auto& c : p.coeffs()) j.push_back(c);
    if (p.is_zero()) j.push_back(Rational(0));
}
inline void from_json(const nlohmann::json& j, Poly& p) { p = Poly(j.get<std::vector<Rational>>()); }

inline void to_json(nlohmann::json& j, const Mat& m) {
    j = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        j.push_back(std::move(row));
    }
}
inline void from_json(const nlohmann::json& j, Mat& m) {
    const auto rows = j.get<std::vector<std::vector<Rational>>>();
    std::vector<Rational> e;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionError("ragged matrix in JSON");
        e.insert(e.end(), r.begin(), r.end());
    }
    m = Mat(rows.size(), cols, std::move(e));
}

inline void to_json(nlohmann::json& j, const MomentKind& k) {
    j = {{"family", family_name(k.family())}, {"t", k.t()}, {"s", k.s()}};
}
inline MomentKind moment_kind_from_json(const nlohmann::json& j) {
    const Family f = parse_family(j.at("family").get<std::string>());
    const Rational s = j.contains("s") ? j.at("s").get<Rational>() : Rational(1);
    return MomentKind::make(f, j.at("t").get<Rational>(), s);
}

inline void to_json(nlohmann::json& j, const Factorization& f) {
    std::vector<Rational> d;
    for (std::size_t k = 0; k < f.diagonal.rows(); ++k) d.push_back(f.diagonal(k, k));
    j = {{"A", f.lower}, {"D", d}};
}
inline Factorization factorization_from_json(const nlohmann::json& j) {
    const auto d = j.at("D").get<std::vector<Rational>>();
    return {j.at("A").get<Mat>(), Mat::diagonal(d)};
}

inline void to_json(nlohmann::json& j, const ConjectureReport& r) {
    j = {{"n", r.n}, {"U_n", r.numerator.get_str()}, {"holds", r.holds}, {"witness", nullptr}};
    if (r.witness) j["witness"] = {{"i", r.witness->i}, {"j", r.witness->j}, {"entry", r.witness->entry}};
}
inline ConjectureReport conjecture_report_from_json(const nlohmann::json& j) {
    ConjectureReport r{j.at("n").get<unsigned>(), mpz_class(j.at("U_n").get<std::string>(), 10),
                       j.at("holds").get<bool>(), std::nullopt};
    if (const auto& w = j.at("witness"); !w.is_null())
        r.witness = Witness{w.at("i").get<std::size_t>(), w.at("j").get<std::size_t>(),
                            w.at("entry").get<Rational>()};
    return r;
}

}  // namespace hankel
