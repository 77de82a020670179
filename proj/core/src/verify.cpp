#include "hilb/verify.hpp"

#include "hilb/contour.hpp"
#include "hilb/genfun.hpp"
#include "hilb/qzseries.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <utility>

namespace hilb::verify {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double rel_diff(const XFloat& got, const XFloat& want) {
    XFloat denom = abs(want);
    if (denom.is_zero()) return abs(got).to_double();
    return (abs(got - want) / denom).to_double();
}

double rel_diff(const XComplex& got, const XComplex& want) {
    XFloat denom = abs(want);
    if (denom.is_zero()) return abs(got).to_double();
    return (abs(XComplex{got.re - want.re, got.im - want.im}) / denom).to_double();
}

struct Harness {
    const VerifyOptions& opts;
    std::vector<CheckResult> out;

    bool should_skip(const std::string& name) const {
        for (const auto& s : opts.skip)
            if (!s.empty() && name.find(s) != std::string::npos) return true;
        return false;
    }

    template <typename Fn>
    void run(const char* name, Fn&& body) {
        CheckResult r;
        r.name = name;
        if (should_skip(r.name)) {
            r.skipped = true;
            r.passed = true;
            r.detail = "skipped";
            out.push_back(std::move(r));
            return;
        }
        auto t0 = Clock::now();
        try {
            body(r);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        out.push_back(std::move(r));
    }
};

// Composite Simpson of f over [0, L] with an even segment count.
template <typename Fn>
XFloat simpson0(Fn&& f, const XFloat& L, long segs, long prec) {
    XFloat h = L / XFloat::of(segs, prec);
    XFloat acc = f(XFloat::zero(prec)) + f(L);
    for (long i = 1; i < segs; ++i) {
        XFloat xi = XFloat::of(i, prec) * h;
        acc += XFloat::of(i % 2 ? 4L : 2L, prec) * f(xi);
    }
    return acc * h / XFloat::of(3L, prec);
}

void check_series_ring(const VerifyOptions& opts, CheckResult& r) {
    long L = std::max(opts.series_n_max, 8L);
    QZSeries A = pochhammer(0, 1, L);
    QZSeries B = pochhammer(1, 1, L);
    QZSeries C = pochhammer(-1, 1, L);
    QZSeries Z = QZSeries::monomial(Int(-3), 2, 1, L);

    bool ok = true;
    ok = ok && mul(add(A, B), C) == add(mul(A, C), mul(B, C));
    ok = ok && mul(A, mul(B, C)) == mul(mul(A, B), C);
    ok = ok && mul(A, B) == mul(B, A);
    ok = ok && mul(A, invert(A)) == QZSeries::one(L);
    ok = ok && mul(B, invert(B)) == QZSeries::one(L);
    ok = ok && pow(C, 3) == mul(C, mul(C, C));
    ok = ok && mul(Z, add(A, B)) == add(mul(Z, A), mul(Z, B));

    r.passed = ok;
    r.detail = "ring identities at truncation order " + std::to_string(L);
}

void check_symmetry(const VerifyOptions& opts, CheckResult& r) {
    long L = std::max(opts.series_n_max, 8L);
    long rows = 0;
    bool ok = true;
    for (long k : {1L, 24L}) {
        auto f = gen::f_series_cached(k, L);
        for (long n = 0; n <= L; ++n, ++rows)
            ok = ok && f->row(n).is_symmetric();
    }
    for (long n = 1; n <= 5; ++n)
        ok = ok && gen::chi_y(n).palindromic();
    r.passed = ok;
    r.detail = std::to_string(rows) + " series rows mirror-symmetric, 5 palindromic polynomials";
}

void check_positivity(const VerifyOptions& opts, CheckResult& r) {
    long L = std::max(opts.series_n_max, 8L);
    auto f = gen::f_series_cached(24, L);
    bool ok = true;
    for (long n = 0; n <= L && ok; ++n) {
        const LaurentPoly& row = f->row(n);
        ok = ok && row.lo() == -n && row.hi() == n;
        for (long m = -n; m <= n && ok; ++m) ok = ok && row.at(m) > 0;
    }
    r.passed = ok;
    r.detail = "coefficients positive on the full support window, n <= " + std::to_string(L);
}

void check_sum_rule(const VerifyOptions& opts, CheckResult& r) {
    long L = std::max(opts.series_n_max, 8L);
    bool ok = true;
    for (long k : {1L, 2L, 24L})
        for (long n = 0; n <= L && ok; ++n) ok = ok && gen::sum_rule_check(k, n);
    r.passed = ok;
    r.detail = "colored-partition totals match for k in {1,2,24}, n <= " + std::to_string(L);
}

void check_d_coeff(const VerifyOptions& opts, CheckResult& r) {
    asym::BernoulliFn B = opts.bernoulli_provider
                              ? opts.bernoulli_provider
                              : asym::BernoulliFn([](long j) { return asym::bernoulli(j); });
    bool ok = true;
    for (long m = 0; m <= 5 && ok; ++m) {
        for (long k : {1L, 2L, 24L}) {
            Rat want1 = make_rat(Int(1), Int(6));
            Rat want2 = make_rat(Int(1), Int(30)) - make_rat(Int(k), Int(144));
            Rat want3 = make_rat(Int(23), Int(2520)) - make_rat(Int(m * m), Int(60)) -
                        make_rat(Int(k), Int(720)) + make_rat(Int(k * k), Int(6912));
            ok = ok && asym::d_coeff_with(B, m, k, 1) == want1;
            ok = ok && asym::d_coeff_with(B, m, k, 2) == want2;
            ok = ok && asym::d_coeff_with(B, m, k, 3) == want3;
            if (!ok) break;
        }
    }
    // Independent route: convolve the exponential-twist series with the
    // grouped-form kernel coefficients and compare term by term.
    for (auto [m, k] : {std::pair<long, long>{0, 1}, {2, 24}}) {
        for (long ell = 1; ell <= 6 && ok; ++ell) {
            Rat conv(0);
            Rat pw(1);
            for (long j = 0; j <= ell - 1; ++j) {
                conv += pw * asym::g_m1_taylor(m, ell - j);
                pw *= make_rat(Int(-k), Int(24));
                pw /= (j + 1);
            }
            ok = ok && conv == asym::d_coeff_with(B, m, k, ell);
        }
    }
    r.passed = ok;
    r.detail = ok ? "closed forms and twist-convolution route agree exactly"
                  : "closed-form mismatch against the supplied Bernoulli source";
}

void check_bessel(const VerifyOptions& opts, CheckResult& r) {
    long P = std::max(opts.precision, 64L);
    XFloat pi = XFloat::pi(P);
    double tol = std::ldexp(1.0, -static_cast<int>(std::min(P / 2, 160L)));
    double worst = 0.0;
    bool ok = true;

    for (double xv : {0.3, 1.7}) {
        XFloat x = XFloat::of(xv, P);
        XFloat pref = sqrt(XFloat::of(2L, P) / (pi * x));
        double r1 = rel_diff(asym::bessel_I(XFloat::of(0.5, P), x, P), pref * sinh(x));
        double r2 = rel_diff(asym::bessel_I(XFloat::of(-0.5, P), x, P), pref * cosh(x));
        worst = std::max({worst, r1, r2});
    }
    ok = ok && worst <= tol;
    ok = ok && asym::bessel_I(-13.0, 10.0, P) == asym::bessel_I(13.0, 10.0, P);

    // Large-argument growth: I_s(x) ~ e^x / sqrt(2 pi x).
    XFloat x = XFloat::of(20000L, P);
    XFloat lead = asym::bessel_I(XFloat::of(-14L, P), x, P) *
                  sqrt(XFloat::of(2L, P) * pi * x) * exp(-x);
    double drift = std::fabs(lead.to_double() - 1.0);
    ok = ok && drift <= 0.01;

    r.passed = ok;
    r.detail = "half-order rel " + fmt(worst) + ", growth drift " + fmt(drift);
}

void check_profile(const VerifyOptions& opts, CheckResult& r) {
    long P = std::min(std::max(opts.precision, 96L), 192L);
    bool ok = true;
    double worst_mass = 0.0, worst_var = 0.0;

    for (double bv : {0.3, 0.8}) {
        XFloat beta = XFloat::of(bv, P);
        XFloat L = XFloat::of(64.0 / bv, P);
        long segs = 1L << 14;
        XFloat mass = XFloat::of(2L, P) *
                      simpson0([&](const XFloat& m) { return asym::profile_P(m, beta); }, L, segs, P);
        XFloat var = XFloat::of(2L, P) *
                     simpson0([&](const XFloat& m) { return m * m * asym::profile_P(m, beta); }, L,
                              segs, P);
        XFloat var_want = XFloat::of(2L, P) * XFloat::pi(P) * XFloat::pi(P) /
                          (XFloat::of(3L, P) * beta * beta);
        worst_mass = std::max(worst_mass, std::fabs(mass.to_double() - 1.0));
        worst_var = std::max(worst_var, rel_diff(var, var_want));

        // The m = 0 value and evenness.
        ok = ok && rel_diff(asym::profile_P(XFloat::zero(P), beta), beta / XFloat::of(6L, P)) <
                       std::ldexp(1.0, -static_cast<int>(P - 8));
        ok = ok && asym::profile_P(XFloat::of(3L, P), beta) ==
                       asym::profile_P(-XFloat::of(3L, P), beta);

        // Branch seam: values a hair on either side of the switchover must
        // agree far beyond what the local slope could explain.
        XFloat eps = pow(XFloat::of(2L, P), -70L);
        XFloat x0 = XFloat::of(0.125, P);
        XFloat lo = asym::profile_P((x0 - eps) / beta, beta);
        XFloat hi = asym::profile_P((x0 + eps) / beta, beta);
        ok = ok && rel_diff(lo, hi) < 1e-15;
    }
    ok = ok && worst_mass <= 1e-9 && worst_var <= 1e-8;
    r.passed = ok;
    r.detail = "mass defect " + fmt(worst_mass) + ", variance rel " + fmt(worst_var);
}

void check_oracle(const VerifyOptions& opts, CheckResult& r) {
    double worst = 0.0;
    long pairs = 0;
    for (long n = 0; n <= opts.oracle_n_max; ++n) {
        contour::ContourConfig cfg;
        cfg.k = 24;
        cfg.n = n;
        cfg.samples_w = 0;
        cfg.samples_u = 0;
        cfg.precision = 128;
        std::vector<long> ms;
        for (long m = -n; m <= n; ++m) ms.push_back(m);
        auto vals = contour::contour_row(cfg, ms);
        for (size_t i = 0; i < ms.size(); ++i, ++pairs) {
            XFloat exact = XFloat::of(gen::a(ms[i], 24, n), 128);
            worst = std::max(worst, rel_diff(vals[i], exact));
        }
    }
    r.passed = worst <= 1e-3;
    r.detail = "worst rel " + fmt(worst) + " over " + std::to_string(pairs) +
               " coefficients, n <= " + std::to_string(opts.oracle_n_max);
}

void check_modular(const VerifyOptions& opts, CheckResult& r) {
    long P = std::max(opts.precision, 128L);
    XFloat pi = XFloat::pi(P);
    // Fixed sample points near the fundamental domain; kept literal so the
    // report is reproducible run to run.
    struct Pt {
        double u, v, wr, wi;
    };
    static const Pt pts[5] = {{-0.31, 0.87, 0.30, 0.00},
                              {0.12, 1.22, 0.21, 0.11},
                              {0.05, 0.64, 0.45, -0.08},
                              {-0.18, 1.05, 0.07, 0.13},
                              {0.33, 0.71, 0.38, 0.02}};
    double worst = 0.0;
    XComplex one = XComplex::one(P);
    for (const Pt& p : pts) {
        XComplex tau = XComplex::of(p.u, p.v, P);
        XComplex w = XComplex::of(p.wr, p.wi, P);
        XComplex inv_tau = one / tau;
        XComplex neg_inv{-inv_tau.re, -inv_tau.im};
        XComplex root = sqrt(XComplex{tau.im, -tau.re});  // (-i tau)^{1/2}

        XComplex eta_t = contour::eval_eta(tau, 0, P);
        worst = std::max(worst, rel_diff(contour::eval_eta(neg_inv, 0, P), root * eta_t));

        XComplex t2 = (w * w) * inv_tau;
        XComplex gauss = exp(XComplex{-pi * t2.im, pi * t2.re});  // e^{pi i w^2 / tau}
        XComplex rhs = root * gauss * contour::eval_theta(w, tau, 0, P);
        rhs = XComplex{rhs.im, -rhs.re};  // multiply by -i
        worst = std::max(worst, rel_diff(contour::eval_theta(w * inv_tau, neg_inv, 0, P), rhs));

        XComplex shifted = contour::eval_eta(tau + one, 0, P);
        XComplex phase = cis(pi / XFloat::of(12L, P));
        worst = std::max(worst, rel_diff(shifted, phase * eta_t));
    }
    r.passed = worst <= 1e-8;
    r.detail = "worst rel " + fmt(worst) + " over 5 points, 3 identities each";
}

}  // namespace

std::vector<CheckResult> run_checks(const VerifyOptions& opts) {
    Harness h{opts, {}};
    h.run("series ring axioms", [&](CheckResult& r) { check_series_ring(opts, r); });
    h.run("symmetry", [&](CheckResult& r) { check_symmetry(opts, r); });
    h.run("positivity", [&](CheckResult& r) { check_positivity(opts, r); });
    h.run("sum rule", [&](CheckResult& r) { check_sum_rule(opts, r); });
    h.run("d_coeff closed form", [&](CheckResult& r) { check_d_coeff(opts, r); });
    h.run("bessel closed forms", [&](CheckResult& r) { check_bessel(opts, r); });
    h.run("profile normalization", [&](CheckResult& r) { check_profile(opts, r); });
    h.run("oracle equivalence", [&](CheckResult& r) { check_oracle(opts, r); });
    h.run("modular identities", [&](CheckResult& r) { check_modular(opts, r); });
    return std::move(h.out);
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace hilb::verify
