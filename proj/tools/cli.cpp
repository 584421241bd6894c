#include "cli.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <hankel/hankel.hpp>
#include <hankel/json.hpp>
#include <hankel/verify.hpp>

namespace hankel::cli {
namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Format { Text, Json, Csv };

struct Common {
    std::string family = "hilbert";
    std::string t = "1";
    std::string s = "1";
    std::string format = "text";
    bool decimal = false;

    Format fmt() const {
        if (format == "json") return Format::Json;
        if (format == "csv") return Format::Csv;
        return Format::Text;
    }
    MomentKind kind() const {
        return MomentKind::make(parse_family(family), Rational::parse(t), Rational::parse(s));
    }
};

struct Range {
    unsigned lo = 0;
    unsigned hi = 0;
};

/// "a..b" inclusive, or a single "a".
Range parse_range(const std::string& text) {
    auto to_uint = [&](const std::string& v) {
        if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw UsageError("bad range '" + text + "'");
        return static_cast<unsigned>(std::stoul(v));
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const unsigned v = to_uint(text);
        return {v, v};
    }
    Range r{to_uint(text.substr(0, dots)), to_uint(text.substr(dots + 2))};
    if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
    return r;
}

std::string approx(const Rational& r) {
    std::ostringstream os;
    os << std::setprecision(17) << r.to_double();
    return os.str();
}

/// Rows of optional cells; text is column-aligned, csv comma-separated,
/// json an array of objects keyed by header (missing cells become null).
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::optional<std::string>>> rows;
    std::vector<bool> raw;  // json: emit cell unquoted (numbers, booleans)

    void print(std::ostream& out, Format f) const {
        if (f == Format::Json) {
            json arr = json::array();
            for (const auto& row : rows) {
                json obj = json::object();
                for (std::size_t c = 0; c < header.size(); ++c) {
                    if (!row[c]) obj[header[c]] = nullptr;
                    else if (c < raw.size() && raw[c]) obj[header[c]] = json::parse(*row[c]);
                    else obj[header[c]] = *row[c];
                }
                arr.push_back(std::move(obj));
            }
            out << arr.dump(2) << '\n';
            return;
        }
        auto cell = [](const std::optional<std::string>& v) { return v.value_or("n/a"); };
        if (f == Format::Csv) {
            for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
            out << '\n';
            for (const auto& row : rows) {
                for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell(row[c]);
                out << '\n';
            }
            return;
        }
        std::vector<std::size_t> w(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
        for (const auto& row : rows)
            for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], cell(row[c]).size());
        auto line = [&](auto&& get) {
            for (std::size_t c = 0; c < header.size(); ++c) {
                out << (c ? "  " : "") << std::setw(static_cast<int>(w[c]));
                out << get(c);
            }
            out << '\n';
        };
        line([&](std::size_t c) { return header[c]; });
        for (const auto& row : rows) line([&](std::size_t c) { return cell(row[c]); });
    }
};

void print_matrix(std::ostream& out, Format f, const Mat& m, const json& meta) {
    if (f == Format::Json) {
        json j = meta;
        j["matrix"] = m;
        out << j.dump(2) << '\n';
        return;
    }
    Table t;
    for (std::size_t c = 0; c < m.cols(); ++c) t.header.push_back(std::to_string(c));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::optional<std::string>> row;
        for (std::size_t c = 0; c < m.cols(); ++c) row.emplace_back(m(r, c).str());
        t.rows.push_back(std::move(row));
    }
    if (f == Format::Csv) {
        for (const auto& row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << *row[c];
            out << '\n';
        }
        return;
    }
    t.print(out, f);
}

// det -----------------------------------------------------------------------

struct DetRoutes {
    std::optional<Rational> closed, factor, oracle;
};

DetRoutes det_routes(const MomentKind& kind, unsigned n, bool closed, bool factor, bool oracle) {
    DetRoutes r;
    const Rational& t = kind.t();
    const Rational& s = kind.s();
    switch (kind.family()) {
        case Family::Hilbert:
            if (closed) r.closed = hilbert_det_closed(n, t);
            if (factor) r.factor = hankel_det(kind, n);
            break;
        case Family::Generalized:
            if (closed) r.closed = generalized_det_closed(n, t, s);
            if (factor) r.factor = hankel_det(kind, n);
            break;
        case Family::Harmonic:
            if (closed) {
                if (t == Rational(1)) r.closed = s == Rational(1) ? harmonic_det_closed_t1(n) : harmonic_det_closed_unit_t(n, s);
                else if (t == Rational(2) && s == Rational(1)) r.closed = harmonic_det_closed_t2(n);
                else r.closed = harmonic_hankel_det(n, t, s);
            }
            if (factor) r.factor = harmonic_hankel_det(n, t, s);
            break;
    }
    if (oracle) r.oracle = det_oracle(hankel_matrix(kind, n));
    return r;
}

int cmd_det(const Common& c, const std::string& nrange, bool closed, bool factor, bool oracle, bool all,
            std::ostream& out, std::ostream& err) {
    if (all || !(closed || factor || oracle)) all = closed = factor = oracle = true;
    const MomentKind kind = c.kind();
    const Range range = parse_range(nrange);

    // Independent n evaluate concurrently; rows are collected in n order.
    std::vector<std::future<DetRoutes>> jobs;
    for (unsigned n = range.lo; n <= range.hi; ++n)
        jobs.push_back(std::async(std::launch::async, det_routes, kind, n, closed, factor, oracle));

    Table table;
    table.header = {"n"};
    table.raw = {true};
    if (closed) table.header.push_back("closed"), table.raw.push_back(false);
    if (factor) table.header.push_back("factor"), table.raw.push_back(false);
    if (oracle) table.header.push_back("oracle"), table.raw.push_back(false);
    if (c.decimal) table.header.push_back("approx"), table.raw.push_back(false);
    if (all) table.header.push_back("agree"), table.raw.push_back(true);

    bool ok = true;
    unsigned n = range.lo;
    for (auto& job : jobs) {
        const DetRoutes r = job.get();
        std::vector<std::optional<std::string>> row{std::to_string(n)};
        auto add = [&](bool want, const std::optional<Rational>& v) {
            if (want) row.push_back(v ? std::optional(v->str()) : std::nullopt);
        };
        add(closed, r.closed);
        add(factor, r.factor);
        add(oracle, r.oracle);
        const auto first = r.closed ? r.closed : r.factor ? r.factor : r.oracle;
        if (c.decimal) row.push_back(first ? std::optional(approx(*first)) : std::nullopt);
        if (all) {
            bool agree = true;
            for (const auto* v : {&r.closed, &r.factor, &r.oracle})
                if (*v && first && **v != *first) agree = false;
            if (!agree) {
                ok = false;
                err << "discrepancy at n=" << n << ": closed=" << (r.closed ? r.closed->str() : "n/a")
                    << " factor=" << (r.factor ? r.factor->str() : "n/a")
                    << " oracle=" << (r.oracle ? r.oracle->str() : "n/a") << '\n';
            }
            row.emplace_back(agree ? "true" : "false");
        }
        table.rows.push_back(std::move(row));
        ++n;
    }
    table.print(out, c.fmt());
    return ok ? kOk : kCheckFailed;
}

// inverse -------------------------------------------------------------------

int cmd_inverse(const Common& c, unsigned n, bool closed, bool kernel, bool oracle, std::ostream& out,
                std::ostream& err) {
    if (int(closed) + int(kernel) + int(oracle) > 1) throw UsageError("choose one of --closed, --kernel, --oracle");
    const MomentKind kind = c.kind();
    std::string route = closed ? "closed" : kernel ? "kernel" : "oracle";
    Mat m;
    if (closed) {
        if (kind.family() == Family::Harmonic || kind.t() != Rational(1))
            throw UsageError("--closed inverse needs family hilbert or generalized with t = 1");
        m = kind.family() == Family::Hilbert ? inverse_hilbert(n) : inverse_generalized(n, kind.s());
    } else if (kernel) {
        if (!kind.has_functional()) throw UsageError("--kernel inverse is not defined for the harmonic family");
        m = kernel_inverse(kind, n);
    } else {
        try {
            m = invert_oracle(hankel_matrix(kind, n));
        } catch (const SingularMatrixError& e) {
            json j = {{"error", "singular"}, {"pivot", e.pivot()}, {"kind", kind}, {"n", n}};
            if (c.fmt() == Format::Json) out << j.dump(2) << '\n';
            err << e.what() << '\n';
            return kCheckFailed;
        }
    }
    print_matrix(out, c.fmt(), m, {{"kind", kind}, {"n", n}, {"route", route}});
    return kOk;
}

// verify --------------------------------------------------------------------

int cmd_verify(const std::vector<std::string>& names, bool all, std::optional<unsigned> nmax, Format f,
               std::ostream& out) {
    std::vector<const verify::Suite*> chosen;
    if (all) {
        for (const auto& s : verify::suites()) chosen.push_back(&s);
    } else {
        if (names.empty()) throw UsageError("verify needs --suite NAME or --all");
        for (const auto& n : names) {
            const auto* s = verify::find_suite(n);
            if (!s) throw UsageError("unknown suite '" + n + "'");
            chosen.push_back(s);
        }
    }
    const verify::Options opts{nmax};
    std::vector<std::future<verify::SuiteResult>> jobs;
    for (const auto* s : chosen) jobs.push_back(std::async(std::launch::async, s->run, opts));

    bool ok = true;
    bool findings = all;
    json report = {{"suites", json::array()}};
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        const auto res = jobs[i].get();
        ok = ok && res.passed();
        findings = findings || chosen[i]->name == "transcription";
        report["suites"].push_back({{"name", chosen[i]->name},
                                    {"passed", res.passed()},
                                    {"cases", res.cases},
                                    {"failures", res.failures},
                                    {"counterexample", res.counterexample ? json(*res.counterexample) : json(nullptr)}});
        if (f == Format::Json) continue;
        if (f == Format::Csv) {
            if (i == 0) out << "suite,result,cases,failures\n";
            out << chosen[i]->name << ',' << (res.passed() ? "pass" : "fail") << ',' << res.cases << ','
                << res.failures << '\n';
            continue;
        }
        out << std::left << std::setw(22) << chosen[i]->name << std::right << (res.passed() ? "pass" : "FAIL")
            << ", " << res.cases << " cases";
        if (!res.passed()) out << ", " << res.failures << " failed; first: " << *res.counterexample;
        out << '\n';
    }
    if (findings) {
        report["transcription"] = json::array();
        if (f == Format::Text) out << "\ntranscription findings (corrected form validated, printed form fails):\n";
        for (const auto& t : verify::transcription_findings(nmax.value_or(8))) {
            report["transcription"].push_back({{"formula", t.formula},
                                               {"correction", t.correction},
                                               {"printed_witness", t.printed_witness ? json(*t.printed_witness) : json(nullptr)},
                                               {"confirmed", t.confirmed()}});
            if (f == Format::Text)
                out << "  - " << t.formula << ": " << t.correction << (t.confirmed() ? " [confirmed]" : " [NOT confirmed]")
                    << "\n      " << t.printed_witness.value_or("printed form holds on the grid") << '\n';
        }
    }
    report["passed"] = ok;
    if (f == Format::Json) out << report.dump(2) << '\n';
    else if (f == Format::Text) out << (ok ? "\nall suites pass\n" : "\nverification FAILED\n");
    return ok ? kOk : kCheckFailed;
}

// rseq / orthopoly / conjecture ---------------------------------------------

int cmd_rseq(const Common& c, unsigned nmax, std::ostream& out) {
    const Rational t = Rational::parse(c.t), s = Rational::parse(c.s);
    if (!admissible_shape(s)) throw DomainError("s must not be zero or a negative integer");
    const auto rec = r_recurrence(nmax, t, s);
    Table table{{"n", "r_direct", "r_recurrence"}, {}, {true, false, false}};
    if (c.decimal) table.header.push_back("approx"), table.raw.push_back(false);
    table.header.push_back("agree");
    table.raw.push_back(true);
    bool ok = true;
    for (unsigned n = 0; n <= nmax; ++n) {
        const Rational d = r_direct(n, t, s);
        const bool agree = d == rec[n];
        ok = ok && agree;
        std::vector<std::optional<std::string>> row{std::to_string(n), d.str(), rec[n].str()};
        if (c.decimal) row.emplace_back(approx(d));
        row.emplace_back(agree ? "true" : "false");
        table.rows.push_back(std::move(row));
    }
    table.print(out, c.fmt());
    return ok ? kOk : kCheckFailed;
}

int cmd_orthopoly(const Common& c, unsigned n, bool legendre, std::ostream& out) {
    const MomentKind kind = c.kind();
    if (!kind.has_functional()) throw UsageError("orthogonal polynomials are not defined for the harmonic family");
    if (legendre && kind.family() != Family::Hilbert) throw UsageError("--legendre needs family hilbert");
    const Poly p = legendre ? shifted_legendre(n, kind.t()) : orthogonal_poly(kind, n);
    if (c.fmt() == Format::Json) {
        out << json({{"kind", kind}, {"n", n}, {"scaled", legendre}, {"coeffs", p}}).dump(2) << '\n';
    } else if (c.fmt() == Format::Csv) {
        out << "degree,coeff\n";
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) out << k << ',' << p.coeffs()[k] << '\n';
    } else {
        out << p.str() << '\n';
    }
    return kOk;
}

int cmd_conjecture(const Common& c, unsigned nmax, std::ostream& out) {
    if (nmax < 1) throw UsageError("--nmax must be at least 1");
    std::vector<std::future<ConjectureReport>> jobs;
    for (unsigned n = 1; n <= nmax; ++n) jobs.push_back(std::async(std::launch::async, conjecture_check, n));
    std::vector<ConjectureReport> reports;
    for (auto& j : jobs) reports.push_back(j.get());

    bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
    if (c.fmt() == Format::Json) {
        out << json(reports).dump(2) << '\n';
        return ok ? kOk : kCheckFailed;
    }
    Table table{{"n", "U_n", "holds", "witness"}, {}, {true, false, true, false}};
    for (const auto& r : reports) {
        std::optional<std::string> w;
        if (r.witness)
            w = "(" + std::to_string(r.witness->i) + "," + std::to_string(r.witness->j) + ")=" + r.witness->entry.str();
        table.rows.push_back({std::to_string(r.n), r.numerator.get_str(), r.holds ? "true" : "false", w});
    }
    table.print(out, c.fmt());
    return ok ? kOk : kCheckFailed;
}

void add_common(CLI::App* sub, Common& c, bool family) {
    if (family)
        sub->add_option("--family", c.family, "hilbert | generalized | harmonic")
            ->check(CLI::IsMember({"hilbert", "generalized", "harmonic"}))
            ->capture_default_str();
    sub->add_option("--t", c.t, "parameter t as p/q")->capture_default_str();
    sub->add_option("--s", c.s, "parameter s as p/q")->capture_default_str();
    sub->add_option("--format", c.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hankel determinants, factorizations and inverses of Hilbert-type and harmonic moments"};
    app.require_subcommand(1);
    Common c;

    std::string nrange = "0";
    bool closed = false, factor = false, oracle = false, all = false, kernel = false, legendre = false;
    unsigned n = 0, nmax = 0;
    std::vector<std::string> suite_names;
    std::optional<unsigned> verify_nmax;

    auto* det = app.add_subcommand("det", "Hankel determinants by closed form, factorization and elimination");
    add_common(det, c, true);
    det->add_option("--n", nrange, "order or inclusive range a..b")->capture_default_str();
    det->add_flag("--closed", closed, "closed-form route");
    det->add_flag("--factor", factor, "orthogonal-polynomial product route");
    det->add_flag("--oracle", oracle, "fraction-free elimination");
    det->add_flag("--all", all, "every route plus an agreement column");
    det->add_flag("--decimal", c.decimal, "append an approximate decimal column");

    auto* inv = app.add_subcommand("inverse", "Inverse of the Hankel matrix");
    add_common(inv, c, true);
    inv->add_option("--n", n, "matrix order")->required();
    inv->add_flag("--closed", closed, "explicit entry formula (t = 1 only)");
    inv->add_flag("--kernel", kernel, "kernel-polynomial coefficients");
    inv->add_flag("--oracle", oracle, "Gauss-Jordan elimination (default)");

    auto* ver = app.add_subcommand("verify", "Run identity verification suites");
    ver->add_option("--suite", suite_names, "suite name (repeatable)");
    ver->add_flag("--all", all, "run every suite and list transcription findings");
    ver->add_option("--nmax", verify_nmax, "override the suite's default range");
    ver->add_option("--format", c.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));

    auto* rseq = app.add_subcommand("rseq", "r(n,t,s) by direct sum and by recurrence");
    add_common(rseq, c, false);
    rseq->add_option("--nmax", nmax, "last index")->required();
    rseq->add_flag("--decimal", c.decimal, "append an approximate decimal column");

    auto* ortho = app.add_subcommand("orthopoly", "Monic orthogonal polynomial coefficients, low to high degree");
    add_common(ortho, c, true);
    ortho->add_option("--n", n, "degree")->required();
    ortho->add_flag("--legendre", legendre, "shifted Legendre scaling C(2n,n) p_n (hilbert only)");

    auto* conj = app.add_subcommand("conjecture", "Integrality scan of U_n times the harmonic Hankel inverse");
    conj->add_option("--nmax", nmax, "largest order")->required();
    conj->add_option("--format", c.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << "run with --help for usage\n";
        return kUsage;
    }

    try {
        if (det->parsed()) return cmd_det(c, nrange, closed, factor, oracle, all, out, err);
        if (inv->parsed()) return cmd_inverse(c, n, closed, kernel, oracle, out, err);
        if (ver->parsed()) return cmd_verify(suite_names, all, verify_nmax, c.fmt(), out);
        if (rseq->parsed()) return cmd_rseq(c, nmax, out);
        if (ortho->parsed()) return cmd_orthopoly(c, n, legendre, out);
        if (conj->parsed()) return cmd_conjecture(c, nmax, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        // bad p/q strings, families, inadmissible parameters
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

}  // namespace hankel::cli
