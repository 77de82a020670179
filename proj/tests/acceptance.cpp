// End-to-end acceptance battery. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any of them fail. Tolerances are pinned
// literals: the convergence ceilings were computed once at high precision and
// then frozen with a 20 percent margin, so silent regressions in either the
// exact or the asymptotic side trip the corresponding criterion.

#include "hilb/asym.hpp"
#include "hilb/contour.hpp"
#include "hilb/genfun.hpp"
#include "hilb/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <vector>

using namespace hilb;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

template <typename Fn>
void criterion(int id, const char* what, Fn&& body) {
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("    exception: %s\n", e.what());
        ok = false;
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("criterion %2d: %s  %s  (%.1fs)\n", id, ok ? "PASS" : "FAIL", what, secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

Rat rat(long num, long den) { return make_rat(Int(num), Int(den)); }

double rel_to(const XFloat& got, const XFloat& want) {
    return (abs(got - want) / abs(want)).to_double();
}

bool crit_closed_forms() {
    for (long m = 0; m <= 5; ++m)
        for (long k : {1L, 2L, 24L}) {
            if (asym::d_coeff(m, k, 1) != rat(1, 6)) return false;
            if (asym::d_coeff(m, k, 2) != rat(1, 30) - rat(k, 144)) return false;
            Rat want3 = rat(23, 2520) - rat(m * m, 60) - rat(k, 720) + rat(k * k, 6912);
            if (asym::d_coeff(m, k, 3) != want3) return false;
        }
    return true;
}

bool crit_fixed_values() {
    if (gen::a(0, 24, 1) != 20) return false;
    if (gen::a(1, 24, 1) != 2) return false;
    if (gen::a(-1, 24, 1) != 2) return false;
    gen::ChiYPolynomial chi = gen::chi_y(1);
    return chi.c == std::vector<Int>{Int(2), Int(-20), Int(2)};
}

bool crit_row_invariants() {
    auto f = gen::f_series_cached(24, 50);
    for (long n = 0; n <= 50; ++n) {
        const LaurentPoly& row = f->row(n);
        if (!row.is_symmetric()) return false;
        if (row.lo() != -n || row.hi() != n) return false;
        for (long m = -n; m <= n; ++m)
            if (row.at(m) <= 0) return false;
        if (row.sum() != gen::p_colored(24, n)) return false;
        if (!gen::sum_rule_check(24, n)) return false;
    }
    return true;
}

bool crit_surface_product() {
    const long N = 10;
    gen::XYSeries s = gen::gottsche_series(gen::HodgeDiamond::K3(), N);
    QZSeries f = gen::f_series(24, N);
    for (long n = 0; n <= N; ++n)
        if (gen::specialize_row(s.rows[n]) != f.row(n)) return false;
    return true;
}

constexpr long kLadder[5] = {50, 100, 200, 400, 800};

bool crit_main_term_ladder() {
    const long P = 256;
    // ceilings: measured n=800 deviations times 1.2, frozen
    const double ceiling[3] = {0.0012946, 0.00095912, 0.00030022};
    gen::f_series_cached(24, 800);  // one shared build for the whole ladder
    bool ok = true;
    for (long m = 0; m <= 2; ++m) {
        double prev = 1e9;
        double dev = 0.0;
        for (long n : kLadder) {
            XFloat ratio =
                asym::a_asymptotic(m, 24, n, 3, P) / XFloat::of(gen::a(m, 24, n), P);
            dev = std::fabs(ratio.to_double() - 1.0);
            if (dev >= prev) ok = false;
            prev = dev;
        }
        std::printf("    m=%ld final dev %.6g (limit %.6g)\n", m, dev, ceiling[m]);
        if (dev > ceiling[m]) ok = false;
    }
    return ok;
}

bool crit_difference_ladder() {
    const long P = 256;
    const double ceiling = 0.41457;  // measured n=800 deviation times 1.2, frozen
    bool ok = true;
    double prev = 1e9;
    double dev = 0.0;
    for (long n : kLadder) {
        Int d = gen::a(0, 24, n) - gen::a(2, 24, n);
        XFloat ratio = XFloat::of(d, P) / asym::diff_asymptotic(0, 2, 24, n, P);
        dev = std::fabs(ratio.to_double() - 1.0);
        if (dev >= prev) ok = false;
        prev = dev;
    }
    std::printf("    final dev %.6g (limit %.6g)\n", dev, ceiling);
    return ok && dev <= ceiling;
}

bool crit_profile_window() {
    const long P = 256;
    // ceilings: measured in-window maxima times 1.2, frozen
    const double ceiling[2] = {0.018426, 0.0083934};
    double max_dev[2] = {0.0, 0.0};
    const long ns[2] = {200, 800};
    for (int i = 0; i < 2; ++i) {
        long n = ns[i];
        long W = static_cast<long>(
            std::sqrt(double(n) / 144.0) * std::log(double(n)) / M_PI);
        for (long m = -W; m <= W; ++m) {
            auto pr = asym::profile_ratio(m, 24, n, P);
            double dev = std::fabs(pr.relative_deviation.to_double());
            if (pr.in_window && dev > max_dev[i]) max_dev[i] = dev;
        }
        std::printf("    n=%ld window %ld max dev %.6g (limit %.6g)\n", n, W, max_dev[i],
                    ceiling[i]);
    }
    return max_dev[1] < max_dev[0] && max_dev[0] <= ceiling[0] && max_dev[1] <= ceiling[1];
}

bool crit_kernel_moments() {
    const long P = 256;
    XFloat pi = XFloat::pi(P);
    for (long j = 1; j <= 5; ++j) {
        XFloat want = XFloat::of(asym::bernoulli(2 * j), P) / pi;
        if (j % 2 == 0) want = -want;
        if (rel_to(asym::bernoulli_integral(j, P), want) > 1e-8) return false;
    }
    return true;
}

bool crit_oracle_agreement() {
    for (long n = 0; n <= 15; ++n) {
        contour::ContourConfig cfg;
        cfg.k = 24;
        cfg.n = n;
        cfg.samples_w = 0;
        cfg.samples_u = 0;
        cfg.precision = 128;
        std::vector<long> ms;
        for (long m = -n; m <= n; ++m) ms.push_back(m);
        auto vals = contour::contour_row(cfg, ms, nullptr);
        for (std::size_t i = 0; i < ms.size(); ++i) {
            XFloat exact = XFloat::of(gen::a(ms[i], 24, n), 128);
            if (rel_to(vals[i], exact) > 1e-3) return false;
        }
    }
    verify::VerifyOptions opts;
    opts.skip = {"series", "symmetry", "positivity", "sum",
                 "d_coeff", "bessel", "profile", "oracle"};
    auto results = verify::run_checks(opts);
    for (const auto& r : results)
        if (r.name == "modular identities") return r.passed && !r.skipped;
    return false;
}

bool crit_arc_decomposition() {
    // Exactness of the decomposition at two light probes, then the shape of
    // the refinement terms across a doubling ladder: each measured/expected
    // ratio must stay finite, below a fixed ceiling, and stop growing (the
    // growth factor between successive doublings must not increase). The
    // ladder grid is pinned at 1024x1024: the subdominant refinement terms
    // sit far below the main term, so their measured values are stable only
    // for a fixed quadrature configuration.
    const double kCeiling = 50.0;
    double ratios[3][4];
    int idx = 0;
    bool ok = true;
    for (long n : {5L, 10L, 15L, 20L, 40L}) {
        const bool ladder = n == 10 || n == 20 || n == 40;
        contour::ContourConfig cfg;
        cfg.k = 24;
        cfg.n = n;
        cfg.m = 0;
        cfg.samples_w = ladder ? 1024 : 0;
        cfg.samples_u = ladder ? 1024 : 0;
        cfg.precision = 128;
        auto rep = contour::arc_split_probe(cfg, 3);
        XFloat exact = XFloat::of(gen::a(0, 24, n), 128);
        double rel = rel_to((rep.M_major + rep.E_minor).re, exact);
        std::printf("    n=%2ld reassembly rel %.3g ratios %.4g %.4g %.4g %.4g\n", n, rel,
                    rep.bound_ratios[0], rep.bound_ratios[1], rep.bound_ratios[2],
                    rep.bound_ratios[3]);
        if (rel > 1e-6) ok = false;
        if (ladder) {
            for (int j = 0; j < 4; ++j) ratios[idx][j] = rep.bound_ratios[j];
            ++idx;
        }
    }
    for (int j = 0; j < 4; ++j) {
        double r10 = ratios[0][j], r20 = ratios[1][j], r40 = ratios[2][j];
        for (double r : {r10, r20, r40})
            if (!std::isfinite(r) || r < 0.0 || r > kCeiling) ok = false;
        if (r20 > 0.0 && r10 > 0.0) {
            double early = r20 / r10;
            double late = r40 / r20;
            if (late > std::max(1.0, early)) ok = false;
        } else if (r40 != 0.0 && r20 == 0.0) {
            ok = false;
        }
    }
    return ok;
}

}  // namespace

int main() {
    criterion(1, "expansion coefficients match their closed forms exactly", crit_closed_forms);
    criterion(2, "fixed small values and the point-count polynomial are exact",
              crit_fixed_values);
    criterion(3, "rows to n=50 are symmetric, positive, fully supported, sum rule holds",
              crit_row_invariants);
    criterion(4, "surface product specialization reproduces the coefficient table",
              crit_surface_product);
    criterion(5, "main-term estimate converges along a doubling ladder, pinned ceilings",
              crit_main_term_ladder);
    criterion(6, "difference estimate converges along the same ladder, pinned ceiling",
              crit_difference_ladder);
    criterion(7, "profile deviation shrinks with n inside the window, pinned ceilings",
              crit_profile_window);
    criterion(8, "kernel moment quadrature reproduces exact values to 1e-8",
              crit_kernel_moments);
    criterion(9, "contour oracle matches all rows to n=15; modular identities hold",
              crit_oracle_agreement);
    criterion(10, "arc decomposition reassembles exactly and its error terms keep shape",
              crit_arc_decomposition);

    std::printf("acceptance: %d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
