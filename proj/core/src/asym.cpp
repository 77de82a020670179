#include "hilb/asym.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

#include "hilb/errors.hpp"
#include "hilb/genfun.hpp"

namespace hilb::asym {

namespace {

// Re-round a value to a different working precision.
XFloat at(const XFloat& v, long prec) {
    XFloat r(prec);
    mpfr_set(r.raw(), v.raw(), MPFR_RNDN);
    return r;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Coefficient of z^T in G_m(z), by direct enumeration of the index triples
// (l1, l2, j) with 2(l1 + l2) + j - 1 = T:
//   G_m(z) = 2 sum (-1)^j m^{2 l2} B_{2(l1+l2+j)} z^{2(l1+l2)+j-1}
//            / ((2 l1)! (2 l2)! j!),  l1 >= 1, l2 >= 0, j >= 0.
Rat g_m1_coeff_enum(const BernoulliFn& B, long m, long T) {
    Rat total(0);
    const Int m2 = Int(m) * Int(m);
    for (long l1 = 1; 2 * l1 <= T + 1; ++l1) {
        for (long l2 = 0; 2 * (l1 + l2) <= T + 1; ++l2) {
            long j = T + 1 - 2 * (l1 + l2);
            Rat b = B(2 * (l1 + l2 + j));
            if (b == 0) continue;
            Rat term = b * Rat(int_pow(m2, static_cast<unsigned long>(l2)));
            term /= Rat(factorial(2 * l1) * factorial(2 * l2) * factorial(j));
            if (j % 2) term = -term;
            total += term;
        }
    }
    return 2 * total;
}

}  // namespace

Rat bernoulli(long j) {
    if (j < 0) throw Error("bernoulli: negative index");
    static std::mutex mu;
    static std::vector<Rat> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.emplace_back(1);
    while (static_cast<long>(cache.size()) <= j) {
        // B_t = -1/(t+1) * sum_{i<t} C(t+1, i) B_i
        long t = static_cast<long>(cache.size());
        Rat s(0);
        for (long i = 0; i < t; ++i) {
            if (cache[i] == 0) continue;
            s += Rat(binomial(t + 1, i)) * cache[i];
        }
        s /= -(t + 1);
        cache.push_back(s);
    }
    return cache[j];
}

Rat d_coeff_with(const BernoulliFn& B, long m, long k, long ell) {
    if (k < 1) throw Error("d_coeff: k must be positive");
    if (ell < 1) throw Error("d_coeff: index must be positive");
    // Convolve the G_m coefficients with the expansion of e^{-kz/24}.
    Rat acc(0);
    Rat twist(1);  // (-k/24)^i / i!
    for (long i = 0; i < ell; ++i) {
        acc += g_m1_coeff_enum(B, m, ell - i) * twist;
        twist *= make_rat(-k, 24);
        twist /= (i + 1);
    }
    return acc;
}

Rat d_coeff(long m, long k, long ell) {
    return d_coeff_with([](long j) { return bernoulli(j); }, m, k, ell);
}

Rat g_m1_taylor(long m, long t) {
    if (t < 1) throw Error("g_m1_taylor: index must be positive");
    // Independent route: group the triple sum by p = l1 + l2, which forces
    // j = t + 1 - 2p and sign (-1)^{t+1}, then sum the inner binomial-style
    // weights in closed form.
    Rat total(0);
    const Int m2 = Int(m) * Int(m);
    for (long p = 1; 2 * p <= t + 1; ++p) {
        long j = t + 1 - 2 * p;
        Rat inner(0);
        for (long l1 = 1; l1 <= p; ++l1) {
            long l2 = p - l1;
            inner += make_rat(int_pow(m2, static_cast<unsigned long>(l2)),
                              factorial(2 * l1) * factorial(2 * l2));
        }
        total += bernoulli(2 * (t + 1 - p)) / Rat(factorial(j)) * inner;
    }
    if ((t + 1) % 2) total = -total;
    return 2 * total;
}

AsymExpansion expansion(long m, long k, long N) {
    if (N < 1) throw Error("expansion: need at least one term");
    AsymExpansion e;
    e.m = m;
    e.k = k;
    e.N = N;
    e.terms.reserve(N);
    for (long ell = 1; ell <= N; ++ell) e.terms.emplace_back(ell, d_coeff(m, k, ell));
    return e;
}

XFloat bessel_I(const XFloat& order, const XFloat& x, long precision) {
    if (x.sgn() <= 0) throw Error("bessel_I: x must be positive");
    const long wp = precision + 64;
    XFloat nu = at(order, wp);
    if (nu.is_integer() && nu.sgn() < 0) nu = -nu;  // I_{-n} = I_n

    const XFloat half_x = at(x, wp) / XFloat::of(2L, wp);
    const XFloat q = half_x * half_x;
    const XFloat one = XFloat::of(1L, wp);

    XFloat term = pow(half_x, nu) / gamma(nu + one);
    XFloat sum = term;
    XFloat max_abs = abs(term);

    // The series hump sits near j ~ x/2; only trust the tail test past it.
    const double hump = x.to_double() / 2.0 + 4.0;
    const XFloat tail_eps = pow(XFloat::of(2L, wp), -(precision - 16));
    bool converged = false;
    for (long j = 0; j < 1000000; ++j) {
        term = term * q / (XFloat::of(j + 1, wp) * (nu + XFloat::of(j + 1, wp)));
        sum += term;
        XFloat a = abs(term);
        if (a > max_abs) max_abs = a;
        if (static_cast<double>(j) > hump && a < tail_eps * abs(sum)) {
            converged = true;
            break;
        }
    }
    if (!converged || sum.is_zero() || !sum.is_finite())
        throw PrecisionLoss("bessel_I: series did not certify convergence");

    // Certified bits: requested precision minus the tail margin minus the
    // bits lost to cancellation between the largest term and the result.
    long loss = mpfr_get_exp(max_abs.raw()) - mpfr_get_exp(sum.raw());
    if (loss < 0) loss = 0;
    if (precision - 16 - loss < 30)
        throw PrecisionLoss("bessel_I: fewer than 30 correct bits certified");
    return at(sum, precision);
}

XFloat bessel_I(double order, double x, long precision) {
    return bessel_I(XFloat::of(order, precision), XFloat::of(x, precision), precision);
}

XFloat beta(long k, long n, long precision) {
    if (k < 1 || n < 1) throw Error("beta: k and n must be positive");
    return XFloat::pi(precision) * sqrt(XFloat::of(k, precision) / XFloat::of(6 * n, precision));
}

XFloat a_asymptotic(long m, long k, long n, long N, long precision) {
    if (k < 1 || n < 1 || N < 1) throw Error("a_asymptotic: k, n, N must be positive");
    const long wp = precision + 64;
    const XFloat pi_w = XFloat::pi(wp);
    const XFloat nf = XFloat::of(n, wp);
    const XFloat kf = XFloat::of(k, wp);
    const XFloat four = XFloat::of(4L, wp);
    const XFloat half_k = kf / XFloat::of(2L, wp);
    const XFloat arg = pi_w * sqrt(XFloat::of(2 * k, wp) * nf / XFloat::of(3L, wp));
    const XFloat base = pi_w * sqrt(kf / XFloat::of(6L, wp));

    XFloat sum = XFloat::zero(wp);
    for (long ell = 1; ell <= N; ++ell) {
        Rat d = d_coeff(m, k, ell);
        if (d == 0) continue;
        XFloat n_pow = pow(nf, -(XFloat::of(2 + 2 * ell + k, wp) / four));
        XFloat b_pow = pow(base, XFloat::of(1 + ell, wp) + half_k);
        XFloat bess = bessel_I(-(XFloat::of(1 + ell, wp) + half_k), arg, wp);
        sum += XFloat::of(d, wp) * n_pow * b_pow * bess;
    }
    XFloat front = pow(XFloat::of(2L, wp) * pi_w, -half_k);
    return at(front * sum, precision);
}

XFloat diff_asymptotic(long m, long r, long k, long n, long precision) {
    if (k < 1 || n < 1) throw Error("diff_asymptotic: k and n must be positive");
    const long wp = precision + 64;
    const XFloat pi_w = XFloat::pi(wp);
    const XFloat four = XFloat::of(4L, wp);
    XFloat v = XFloat::of(4L, wp) / XFloat::of(15L, wp);
    v *= pow(pi_w, 3L);
    v *= XFloat::of(Int(Int(r) * Int(r) - Int(m) * Int(m)), wp);
    v *= pow(XFloat::of(8 * n, wp), -(XFloat::of(9 + k, wp) / four));
    v *= pow(XFloat::of(k, wp) / XFloat::of(3L, wp), XFloat::of(k + 7, wp) / four);
    v *= exp(pi_w * sqrt(XFloat::of(2 * k, wp) * XFloat::of(n, wp) / XFloat::of(3L, wp)));
    return at(v, precision);
}

XFloat profile_P(const XFloat& m, const XFloat& beta) {
    if (beta.sgn() <= 0) throw Error("profile_P: beta must be positive");
    const long prec = std::max(m.precision(), beta.precision());
    const long wp = prec + 32;
    const XFloat x = at(m, wp) * at(beta, wp);
    const XFloat ax = abs(x);

    if (ax < XFloat::of(0.125, wp)) {
        // Even Taylor branch: P = beta * sum_{l>=1} B_{2l} x^{2l-2} / (2l-2)!
        // avoids the csch^2 cancellation near the removable singularity.
        const XFloat x2 = x * x;
        XFloat acc = XFloat::zero(wp);
        XFloat xpow = XFloat::of(1L, wp);
        const XFloat tiny = pow(XFloat::of(2L, wp), -(wp - 4));
        for (long l = 1; l <= 400; ++l) {
            XFloat term = XFloat::of(bernoulli(2 * l), wp) * xpow;
            term /= XFloat::of(factorial(2 * l - 2), wp);
            acc += term;
            if (l > 2 && abs(term) < tiny * abs(acc)) break;
            xpow *= x2;
        }
        return at(at(beta, wp) * acc, prec);
    }

    const XFloat half = x / XFloat::of(2L, wp);
    const XFloat s = sinh(half);
    const XFloat c = cosh(half);
    XFloat v = (x * c / s - XFloat::of(2L, wp)) / (s * s);
    v *= at(beta, wp) / XFloat::of(4L, wp);
    return at(v, prec);
}

XFloat pk_asymptotic(long k, long n, long precision) {
    if (k < 1 || n < 1) throw Error("pk_asymptotic: k and n must be positive");
    const long wp = precision + 64;
    const XFloat pi_w = XFloat::pi(wp);
    const XFloat four = XFloat::of(4L, wp);
    XFloat v = XFloat::of(2L, wp);
    v *= pow(XFloat::of(k, wp) / XFloat::of(3L, wp), XFloat::of(k + 1, wp) / four);
    v *= pow(XFloat::of(8 * n, wp), -(XFloat::of(k + 3, wp) / four));
    v *= exp(pi_w * sqrt(XFloat::of(2 * k, wp) * XFloat::of(n, wp) / XFloat::of(3L, wp)));
    return at(v, precision);
}

ProfileRow profile_ratio(long m, long k, long n, long precision) {
    if (k < 1 || n < 1) throw Error("profile_ratio: k and n must be positive");
    ProfileRow row;
    row.m = m;

    Int av = gen::a(m, k, n);
    Int pv = gen::p_colored(k, n);
    row.exact_ratio = XFloat::of(make_rat(av, pv), precision);

    const XFloat b = beta(k, n, precision);
    row.profile_value = profile_P(XFloat::of(m, precision), b);
    row.relative_deviation = abs(row.exact_ratio - row.profile_value) / abs(row.profile_value);

    // Guaranteed window: |m| <= sqrt(n/(6k)) log(n) / pi.
    XFloat window = sqrt(XFloat::of(n, precision) / XFloat::of(6 * k, precision));
    window *= log(XFloat::of(n, precision));
    window /= XFloat::pi(precision);
    row.in_window = (XFloat::of(m < 0 ? -m : m, precision) <= window);
    return row;
}

XFloat bernoulli_integral(long j, long precision) {
    if (j < 1) throw Error("bernoulli_integral: index must be positive");
    const long wp = precision + 32;
    const XFloat pi_w = XFloat::pi(wp);
    const XFloat upper = XFloat::of(20L, wp);  // integrand ~ u^{2j} e^{-2 pi u} beyond
    const XFloat zero = XFloat::zero(wp);

    auto F = [&](const XFloat& u) -> XFloat {
        if (u.is_zero()) {
            // u^{2j} / sinh^2(pi u) -> u^{2j-2} / pi^2 at 0
            if (j == 1) return XFloat::of(1L, wp) / (pi_w * pi_w);
            return XFloat::zero(wp);
        }
        XFloat s = sinh(pi_w * u);
        return pow(u, 2 * j) / (s * s);
    };

    // Composite Simpson with interval doubling until self-consistent.
    XFloat prev(wp);
    bool have_prev = false;
    XFloat result = zero;
    const XFloat rel_tol = XFloat::of(1e-14, wp);
    for (long segs = 256; segs <= (1 << 15); segs *= 2) {
        XFloat h = upper / XFloat::of(segs, wp);
        XFloat acc = F(zero) + F(upper);
        for (long i = 1; i < segs; ++i) {
            XFloat fi = F(XFloat::of(i, wp) * h);
            acc += XFloat::of(i % 2 ? 4L : 2L, wp) * fi;
        }
        result = acc * h / XFloat::of(3L, wp);
        if (have_prev && abs(result - prev) <= rel_tol * abs(result)) break;
        prev = result;
        have_prev = true;
    }
    return at(result, precision);
}

}  // namespace hilb::asym
