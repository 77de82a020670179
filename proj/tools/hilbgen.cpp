#include "CLI11.hpp"
#include "json.hpp"

#include "hilb/asym.hpp"
#include "hilb/contour.hpp"
#include "hilb/errors.hpp"
#include "hilb/genfun.hpp"
#include "hilb/verify.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace {

using hilb::Int;
using hilb::Rat;
using hilb::XFloat;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

// Largest q-truncation order the exact-table commands will build, and the
// documented feasibility limit for the contour oracle (|q| -> 1 as n grows,
// so product cutoffs explode past this point).
constexpr long kSeriesBudget = 1200;
constexpr long kOracleBudget = 40;

struct Range {
    long lo = 0;
    long hi = 0;
};

std::optional<Range> parse_range(const std::string& text) {
    auto parse_long = [](const std::string& s, long& v) {
        if (s.empty()) return false;
        try {
            size_t pos = 0;
            v = std::stol(s, &pos);
            return pos == s.size();
        } catch (...) {
            return false;
        }
    };
    Range r;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        if (!parse_long(text, r.lo)) return std::nullopt;
        r.hi = r.lo;
    } else {
        if (!parse_long(text.substr(0, dots), r.lo)) return std::nullopt;
        if (!parse_long(text.substr(dots + 2), r.hi)) return std::nullopt;
    }
    if (r.lo > r.hi) return std::nullopt;
    return r;
}

// One table cell. Exact integers stay decimal strings all the way to the
// serializer so they are never mangled into floating point; floats carry a
// fixed 17-significant-digit rendering produced by XFloat.
struct Cell {
    enum class Kind { Empty, Text, Integer, Number, Boolean } kind = Kind::Empty;
    std::string s;
    bool b = false;

    static Cell empty() { return {}; }
    static Cell text(std::string v) { return {Kind::Text, std::move(v), false}; }
    static Cell integer(const Int& v) { return {Kind::Integer, hilb::to_string(v), false}; }
    static Cell index(long v) { return {Kind::Number, std::to_string(v), false}; }
    static Cell number(const XFloat& v) { return {Kind::Number, v.str(17), false}; }
    static Cell number(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return {Kind::Number, buf, false};
    }
    static Cell boolean(bool v) { return {Kind::Boolean, "", v}; }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    std::vector<Cell>& add_row() {
        rows.emplace_back(columns.size());
        return rows.back();
    }
};

void emit_csv(const Table& t, std::ostream& os) {
    for (size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            const Cell& c = row[i];
            switch (c.kind) {
                case Cell::Kind::Empty: break;
                case Cell::Kind::Boolean: os << (c.b ? "true" : "false"); break;
                default: os << c.s; break;
            }
        }
        os << "\n";
    }
}

ojson cell_json(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::Empty: return nullptr;
        case Cell::Kind::Text: return c.s;
        case Cell::Kind::Integer: return c.s;  // exact decimal string
        case Cell::Kind::Boolean: return c.b;
        case Cell::Kind::Number:
            try {
                return ojson::parse(c.s);
            } catch (...) {
                return c.s;  // inf/nan render as strings
            }
    }
    return nullptr;
}

void emit_table_json(const char* command, long k, long precision, const Table& t,
                     std::ostream& os) {
    ojson j;
    j["schema"] = "hilbgen-table/1";
    j["command"] = command;
    j["k"] = k;
    j["precision"] = precision;
    j["columns"] = t.columns;
    ojson rows = ojson::array();
    for (const auto& row : t.rows) {
        ojson obj;
        for (size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
        rows.push_back(std::move(obj));
    }
    j["rows"] = std::move(rows);
    os << j.dump(2) << "\n";
}

int write_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) {
        fn(std::cout);
        return kExitOk;
    }
    std::ofstream f(path);
    if (!f) {
        std::cerr << "error: cannot open output path: " << path << "\n";
        return kExitConfig;
    }
    fn(f);
    return f.good() ? kExitOk : kExitConfig;
}

struct Common {
    long k = 24;
    std::string n_text;
    std::string m_text;
    long terms = 3;
    long precision = 256;
    long samples = 0;
    std::string format = "csv";
    std::string out;
    bool timings = false;
};

void add_table_options(CLI::App* cmd, Common& c, const char* n_default,
                       const char* m_default) {
    cmd->add_option("--k", c.k, "color count k")->capture_default_str();
    c.n_text = n_default;
    c.m_text = m_default;
    cmd->add_option("--n", c.n_text, "index range, a..b or a")->capture_default_str();
    cmd->add_option("--m", c.m_text, "exponent range, a..b or a")->capture_default_str();
    cmd->add_option("--precision", c.precision, "working precision in bits")
        ->envname("HILBGEN_PRECISION")
        ->capture_default_str();
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", c.out, "write output to this path instead of stdout");
    cmd->add_flag("--timings", c.timings, "include wall-clock timings in the output");
}

// Shared validation; returns an exit code, kExitOk when fine.
int check_common(const Common& c, std::optional<Range>& nr, std::optional<Range>& mr) {
    if (c.k < 1) {
        std::cerr << "error: --k must be >= 1\n";
        return kExitConfig;
    }
    if (c.precision < 64 || c.precision > 8192) {
        std::cerr << "error: --precision must lie in [64, 8192]\n";
        return kExitConfig;
    }
    nr = parse_range(c.n_text);
    if (!nr) {
        std::cerr << "error: bad --n range: " << c.n_text << "\n";
        return kExitConfig;
    }
    if (!c.m_text.empty()) {
        mr = parse_range(c.m_text);
        if (!mr) {
            std::cerr << "error: bad --m range: " << c.m_text << "\n";
            return kExitConfig;
        }
    }
    return kExitOk;
}

int emit(const Common& c, const char* command, const Table& t) {
    if (c.format == "json")
        return write_output(c.out, [&](std::ostream& os) {
            emit_table_json(command, c.k, c.precision, t, os);
        });
    return write_output(c.out, [&](std::ostream& os) { emit_csv(t, os); });
}

int run_exact(const Common& c) {
    std::optional<Range> nr, mr;
    if (int rc = check_common(c, nr, mr); rc != kExitOk) return rc;
    if (nr->lo < 0) {
        std::cerr << "error: exact table needs n >= 0\n";
        return kExitConfig;
    }
    if (nr->hi > kSeriesBudget) {
        std::cerr << "error: n " << nr->hi << " exceeds the series budget " << kSeriesBudget
                  << "\n";
        return kExitBudget;
    }
    auto f = hilb::gen::f_series_cached(c.k, nr->hi);
    Range ms = mr.value_or(Range{-3, 3});

    Table t;
    t.columns = {"n", "m", "exact_value", "p_k", "sum_rule_ok", "beta_k"};
    for (long n = nr->lo; n <= nr->hi; ++n) {
        Int pk = hilb::gen::p_colored(c.k, n);
        bool sum_ok = hilb::gen::sum_rule_check(c.k, n);
        Cell beta = n >= 1 ? Cell::number(hilb::asym::beta(c.k, n, c.precision)) : Cell::empty();
        for (long m = ms.lo; m <= ms.hi; ++m) {
            auto& row = t.add_row();
            row[0] = Cell::index(n);
            row[1] = Cell::index(m);
            row[2] = Cell::integer(f->coeff(n, m));
            row[3] = Cell::integer(pk);
            row[4] = Cell::boolean(sum_ok);
            row[5] = beta;
        }
    }
    return emit(c, "exact", t);
}

int run_asym(const Common& c) {
    std::optional<Range> nr, mr;
    if (int rc = check_common(c, nr, mr); rc != kExitOk) return rc;
    if (nr->lo < 1) {
        std::cerr << "error: asymptotic table needs n >= 1\n";
        return kExitConfig;
    }
    if (nr->hi > kSeriesBudget) {
        std::cerr << "error: n " << nr->hi << " exceeds the series budget " << kSeriesBudget
                  << "\n";
        return kExitBudget;
    }
    if (c.terms < 1 || c.terms > 12) {
        std::cerr << "error: --terms must lie in [1, 12]\n";
        return kExitConfig;
    }
    auto f = hilb::gen::f_series_cached(c.k, nr->hi);
    Range ms = mr.value_or(Range{0, 2});
    const long m_first = ms.lo;

    Table t;
    t.columns = {"n",      "m",      "exact_value", "estimate",      "ratio",     "relative_error",
                 "beta_k", "pair_m", "diff_exact",  "diff_estimate", "diff_ratio"};
    for (long n = nr->lo; n <= nr->hi; ++n) {
        XFloat beta = hilb::asym::beta(c.k, n, c.precision);
        for (long m = ms.lo; m <= ms.hi; ++m) {
            Int exact = f->coeff(n, m);
            XFloat est = hilb::asym::a_asymptotic(m, c.k, n, c.terms, c.precision);
            auto& row = t.add_row();
            row[0] = Cell::index(n);
            row[1] = Cell::index(m);
            row[2] = Cell::integer(exact);
            row[3] = Cell::number(est);
            if (exact != 0) {
                XFloat ratio = est / XFloat::of(exact, c.precision);
                row[4] = Cell::number(ratio);
                row[5] = Cell::number(abs(ratio - XFloat::of(1L, c.precision)));
            }
            row[6] = Cell::number(beta);
            if (m != m_first && m * m != m_first * m_first) {
                Int diff_exact = f->coeff(n, m_first) - f->coeff(n, m);
                XFloat diff_est = hilb::asym::diff_asymptotic(m_first, m, c.k, n, c.precision);
                row[7] = Cell::index(m_first);
                row[8] = Cell::integer(diff_exact);
                row[9] = Cell::number(diff_est);
                row[10] = Cell::number(XFloat::of(diff_exact, c.precision) / diff_est);
            }
        }
    }
    return emit(c, "asym", t);
}

int run_profile(const Common& c) {
    std::optional<Range> nr, mr;
    if (int rc = check_common(c, nr, mr); rc != kExitOk) return rc;
    if (nr->lo < 2) {
        std::cerr << "error: profile table needs n >= 2\n";
        return kExitConfig;
    }
    if (nr->hi > kSeriesBudget) {
        std::cerr << "error: n " << nr->hi << " exceeds the series budget " << kSeriesBudget
                  << "\n";
        return kExitBudget;
    }
    hilb::gen::f_series_cached(c.k, nr->hi);

    Table t;
    t.columns = {"row_type", "n",         "m",        "exact_ratio", "profile_value",
                 "relative_deviation",    "in_window", "beta_k"};
    for (long n = nr->lo; n <= nr->hi; ++n) {
        XFloat beta = hilb::asym::beta(c.k, n, c.precision);
        Range ms;
        if (mr) {
            ms = *mr;
        } else {
            long w = static_cast<long>(std::floor(
                std::sqrt(double(n) / (6.0 * double(c.k))) * std::log(double(n)) / M_PI));
            if (w < 0) w = 0;
            ms = Range{-w, w};
        }
        XFloat worst = XFloat::of(0L, c.precision);
        bool any_window = false;
        for (long m = ms.lo; m <= ms.hi; ++m) {
            auto pr = hilb::asym::profile_ratio(m, c.k, n, c.precision);
            auto& row = t.add_row();
            row[0] = Cell::text("data");
            row[1] = Cell::index(n);
            row[2] = Cell::index(m);
            row[3] = Cell::number(pr.exact_ratio);
            row[4] = Cell::number(pr.profile_value);
            row[5] = Cell::number(pr.relative_deviation);
            row[6] = Cell::boolean(pr.in_window);
            row[7] = Cell::number(beta);
            if (pr.in_window) {
                any_window = true;
                if (abs(pr.relative_deviation) > worst) worst = abs(pr.relative_deviation);
            }
        }
        auto& srow = t.add_row();
        srow[0] = Cell::text("summary");
        srow[1] = Cell::index(n);
        if (any_window) srow[5] = Cell::number(worst);
        srow[7] = Cell::number(beta);
    }
    return emit(c, "profile", t);
}

int run_oracle(const Common& c) {
    std::optional<Range> nr, mr;
    if (int rc = check_common(c, nr, mr); rc != kExitOk) return rc;
    if (nr->lo < 0) {
        std::cerr << "error: oracle table needs n >= 0\n";
        return kExitConfig;
    }
    if (nr->hi > kOracleBudget) {
        std::cerr << "error: n " << nr->hi << " exceeds the oracle budget " << kOracleBudget
                  << "\n";
        return kExitBudget;
    }
    Range ms = mr.value_or(Range{0, 0});

    Table t;
    t.columns = {"n", "m", "exact_value", "oracle_value", "abs_diff", "rel_diff", "self_delta"};
    try {
        for (long n = nr->lo; n <= nr->hi; ++n) {
            hilb::contour::ContourConfig cfg;
            cfg.k = c.k;
            cfg.n = n;
            cfg.samples_w = c.samples;
            cfg.samples_u = c.samples;
            cfg.precision = c.precision;
            std::vector<long> mlist;
            for (long m = ms.lo; m <= ms.hi; ++m) mlist.push_back(m);
            std::vector<XFloat> deltas;
            auto vals = hilb::contour::contour_row(cfg, mlist, &deltas);
            for (size_t i = 0; i < mlist.size(); ++i) {
                Int exact = hilb::gen::a(mlist[i], c.k, n);
                XFloat ex = XFloat::of(exact, c.precision);
                XFloat adiff = abs(vals[i] - ex);
                auto& row = t.add_row();
                row[0] = Cell::index(n);
                row[1] = Cell::index(mlist[i]);
                row[2] = Cell::integer(exact);
                row[3] = Cell::number(vals[i]);
                row[4] = Cell::number(adiff);
                if (exact != 0) row[5] = Cell::number(adiff / abs(ex));
                row[6] = Cell::number(deltas[i]);
            }
        }
    } catch (const hilb::QuadratureUnstable& e) {
        std::cerr << "error: quadrature self-check failed: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const hilb::PoleProximity& e) {
        std::cerr << "error: sampled too close to a kernel pole: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const hilb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return emit(c, "oracle", t);
}

struct VerifyCli {
    Common common;
    std::vector<std::string> skips;
    bool inject_bernoulli_error = false;
};

int run_verify(const VerifyCli& vc) {
    const Common& c = vc.common;
    if (c.precision < 64 || c.precision > 8192) {
        std::cerr << "error: --precision must lie in [64, 8192]\n";
        return kExitConfig;
    }
    hilb::verify::VerifyOptions opts;
    opts.precision = c.precision;
    opts.skip.insert(vc.skips.begin(), vc.skips.end());
    if (vc.inject_bernoulli_error) {
        opts.bernoulli_provider = [](long j) {
            Rat b = hilb::asym::bernoulli(j);
            if (j == 2) b += hilb::make_rat(Int(1), Int(1000));
            return b;
        };
    }

    auto results = hilb::verify::run_checks(opts);

    long passed = 0, failed = 0, skipped = 0;
    std::vector<std::string> failing;
    for (const auto& r : results) {
        if (r.skipped) {
            ++skipped;
        } else if (r.passed) {
            ++passed;
        } else {
            ++failed;
            failing.push_back(r.name);
        }
        std::cerr << (r.skipped ? "skip" : (r.passed ? "  ok" : "FAIL")) << "  " << r.name;
        if (c.timings && !r.skipped) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "  (%.2fs)", r.seconds);
            std::cerr << buf;
        }
        std::cerr << "  " << r.detail << "\n";
    }
    if (!failing.empty()) {
        std::cerr << "failed checks:";
        for (const auto& name : failing) std::cerr << " \"" << name << "\"";
        std::cerr << "\n";
    }

    int rc;
    if (c.format == "csv") {
        Table t;
        t.columns = {"name", "passed", "skipped", "detail"};
        if (c.timings) t.columns.push_back("seconds");
        for (const auto& r : results) {
            auto& row = t.add_row();
            row[0] = Cell::text(r.name);
            row[1] = Cell::boolean(r.passed);
            row[2] = Cell::boolean(r.skipped);
            row[3] = Cell::text(r.detail);
            if (c.timings) row[4] = Cell::number(r.seconds);
        }
        rc = write_output(c.out, [&](std::ostream& os) { emit_csv(t, os); });
    } else {
        ojson j;
        j["schema"] = "hilbgen-verify-report/1";
        j["precision"] = c.precision;
        j["all_passed"] = failed == 0;
        j["counts"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
        ojson checks = ojson::array();
        for (const auto& r : results) {
            ojson e;
            e["name"] = r.name;
            e["passed"] = r.passed;
            e["skipped"] = r.skipped;
            e["detail"] = r.detail;
            if (c.timings) e["seconds"] = r.seconds;
            checks.push_back(std::move(e));
        }
        j["checks"] = std::move(checks);
        rc = write_output(c.out, [&](std::ostream& os) { os << j.dump(2) << "\n"; });
    }
    if (rc != kExitOk) return rc;
    return failed == 0 ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tables and checks for colored-partition coefficients a(m,k,n)"};
    app.require_subcommand(1);

    Common exact_c, asym_c, profile_c, oracle_c;
    VerifyCli verify_c;

    auto* exact = app.add_subcommand("exact", "exact coefficient table from the series");
    add_table_options(exact, exact_c, "0..10", "-3..3");

    auto* asym = app.add_subcommand("asym", "main-term estimates next to exact values");
    add_table_options(asym, asym_c, "100", "0..2");
    asym->add_option("--terms", asym_c.terms, "expansion order N")->capture_default_str();

    auto* profile = app.add_subcommand("profile", "coefficient profile against the limit shape");
    add_table_options(profile, profile_c, "200", "");

    auto* oracle = app.add_subcommand("oracle", "contour-integral cross-check of exact values");
    add_table_options(oracle, oracle_c, "0..6", "0");
    oracle->add_option("--samples", oracle_c.samples,
                       "quadrature samples per direction (0 = auto)");

    auto* verify = app.add_subcommand("verify", "run the invariant suite, emit a report");
    verify->add_option("--precision", verify_c.common.precision, "working precision in bits")
        ->envname("HILBGEN_PRECISION")
        ->capture_default_str();
    verify_c.common.format = "json";
    verify->add_option("--format", verify_c.common.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    verify->add_option("--out", verify_c.common.out, "write report to this path");
    verify->add_option("--skip", verify_c.skips,
                       "skip checks whose name contains this substring (repeatable)");
    verify->add_flag("--timings", verify_c.common.timings, "include wall-clock timings");
    verify
        ->add_flag("--inject-bernoulli-error", verify_c.inject_bernoulli_error,
                   "perturb one Bernoulli value to prove the checks are live")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (exact->parsed()) return run_exact(exact_c);
        if (asym->parsed()) return run_asym(asym_c);
        if (profile->parsed()) return run_profile(profile_c);
        if (oracle->parsed()) return run_oracle(oracle_c);
        if (verify->parsed()) return run_verify(verify_c);
    } catch (const hilb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
