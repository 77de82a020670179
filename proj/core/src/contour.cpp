#include "hilb/contour.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hilb/asym.hpp"
#include "hilb/errors.hpp"

namespace hilb::contour {

namespace {

XFloat at(const XFloat& v, long prec) {
    XFloat r(prec);
    mpfr_set(r.raw(), v.raw(), MPFR_RNDN);
    return r;
}

XComplex at(const XComplex& v, long prec) { return XComplex(at(v.re, prec), at(v.im, prec)); }

long next_pow2(long v) {
    long p = 1;
    while (p < v) p <<= 1;
    return p;
}

XComplex csinh(const XComplex& z) {
    return XComplex(sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im));
}

// e^{i pi c tau} for tau = u + iv: equals e^{-pi c v} (cos(pi c u) + i sin(pi c u)).
XComplex exp_i_pi_tau(const XFloat& u, const XFloat& v, const XFloat& c, long prec) {
    XFloat pi_c = XFloat::pi(prec) * c;
    return exp(-(pi_c * v)) * cis(pi_c * u);
}

// In-place acc *= b via fused real primitives; s1, s2 are scratch.
void cmul_inplace(XComplex& acc, const XComplex& b, XFloat& s1, XFloat& s2) {
    mpfr_fmms(s1.raw(), acc.re.raw(), b.re.raw(), acc.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_fmma(s2.raw(), acc.re.raw(), b.im.raw(), acc.im.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_set(acc.re.raw(), s1.raw(), MPFR_RNDN);
    mpfr_set(acc.im.raw(), s2.raw(), MPFR_RNDN);
}

// out = 1 - a*b; out must not alias a or b.
void one_minus_prod(XComplex& out, const XComplex& a, const XComplex& b) {
    mpfr_fmms(out.re.raw(), a.re.raw(), b.re.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_fmma(out.im.raw(), a.re.raw(), b.im.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_ui_sub(out.re.raw(), 1, out.re.raw(), MPFR_RNDN);
    mpfr_neg(out.im.raw(), out.im.raw(), MPFR_RNDN);
}

struct Scratch {
    XComplex f;
    XFloat s1, s2;
    explicit Scratch(long prec) : f(XFloat::zero(prec), XFloat::zero(prec)), s1(prec), s2(prec) {}
};

// prod_{j=1..cutoff} (1 - zeta q^j)(1 - zeta^{-1} q^{j-1}) from precomputed powers.
XComplex zeta_product(const std::vector<XComplex>& qpow, long cutoff, const XComplex& zeta,
                      const XComplex& zinv, Scratch& S, long prec) {
    XComplex acc = XComplex::one(prec);
    for (long j = 1; j <= cutoff; ++j) {
        one_minus_prod(S.f, zeta, qpow[static_cast<size_t>(j)]);
        cmul_inplace(acc, S.f, S.s1, S.s2);
        one_minus_prod(S.f, zinv, qpow[static_cast<size_t>(j - 1)]);
        cmul_inplace(acc, S.f, S.s1, S.s2);
    }
    return acc;
}

void require_radius(const XFloat& qmod) {
    // |q| must stay clear of the unit circle for the truncated products.
    XFloat limit = XFloat::of(1L, qmod.precision()) - pow(XFloat::of(2L, qmod.precision()), -8L);
    if (!(qmod < limit)) throw ConvergenceTooSlow("product evaluation too close to |q| = 1");
}

long auto_cutoff(double neg_log_qmod, long precision) {
    if (neg_log_qmod <= 0) throw ConvergenceTooSlow("contour radius outside the unit disk");
    double c = static_cast<double>(precision) * 0.6931471805599453 / neg_log_qmod;
    return static_cast<long>(c) + 9;
}

// Everything about one u sample that is independent of w.
struct UContext {
    std::vector<XComplex> qpow;  // q^0 .. q^cutoff
    XComplex P1;                 // prod (1 - q^j)
    XComplex eta3;               // eta^3
    XComplex fpre;               // q^{k/24} eta^{-k}
    XComplex theta_pre;          // i q^{1/8} P1
};

UContext make_ucontext(long k, const XFloat& u, const XFloat& tau_im, long cutoff, long prec) {
    UContext C;
    XFloat two_pi = XFloat::of(2L, prec) * XFloat::pi(prec);
    XFloat qmod = exp(-(two_pi * tau_im));
    require_radius(qmod);
    XComplex q = qmod * cis(two_pi * u);

    C.qpow.reserve(static_cast<size_t>(cutoff) + 1);
    C.qpow.push_back(XComplex::one(prec));
    for (long j = 1; j <= cutoff; ++j) C.qpow.push_back(C.qpow.back() * q);

    C.P1 = XComplex::one(prec);
    Scratch S(prec);
    XComplex one = XComplex::one(prec);
    for (long j = 1; j <= cutoff; ++j) {
        XComplex factor = one - C.qpow[static_cast<size_t>(j)];
        cmul_inplace(C.P1, factor, S.s1, S.s2);
    }

    XComplex eta = exp_i_pi_tau(u, tau_im, XFloat::of(1L, prec) / XFloat::of(12L, prec), prec) * C.P1;
    C.eta3 = pow(eta, 3L);
    C.fpre = exp_i_pi_tau(u, tau_im, XFloat::of(k, prec) / XFloat::of(12L, prec), prec) * pow(eta, -k);
    XComplex i_unit = XComplex::of(0.0, 1.0, prec);
    C.theta_pre =
        i_unit * exp_i_pi_tau(u, tau_im, XFloat::of(1L, prec) / XFloat::of(4L, prec), prec) * C.P1;
    return C;
}

// f(w_t; tau) on the half-offset w grid, sharing the per-u context.
// zhalf = e^{i pi w}; returns the normalized kernel value.
XComplex f_at_point(const UContext& C, const XComplex& zhalf, long cutoff, Scratch& S,
                    long prec, long pole_guard_prec) {
    XComplex zeta = zhalf * zhalf;
    XComplex zinv = conj(zeta);  // w is real on the grid
    XComplex theta = C.theta_pre * zhalf * zeta_product(C.qpow, cutoff, zeta, zinv, S, prec);
    XFloat t2 = theta.re * theta.re + theta.im * theta.im;
    if (t2 < pow(XFloat::of(2L, prec), -pole_guard_prec))
        throw PoleProximity("theta underflow at a quadrature node");
    XFloat minus_two_sin = XFloat::of(-2L, prec) * zhalf.im;
    XComplex g = minus_two_sin * (C.eta3 / theta);
    return g * g * C.fpre;
}

XComplex phase_unit(long num, long den, long prec) {
    // e^{-2 pi i num/den} with the angle reduced exactly first
    long r = num % den;
    if (r < 0) r += den;
    XFloat ang = XFloat::of(-2L, prec) * XFloat::pi(prec) * XFloat::of(r, prec) / XFloat::of(den, prec);
    return cis(ang);
}

struct GridSpec {
    long k = 24;
    long n = 0;
    XFloat beta;
    long Nw = 0;
    long Nu = 0;
    long cutoff = 0;
    long prec = 144;
};

std::vector<XComplex> grid_coeffs(const GridSpec& G, const std::vector<long>& ms) {
    const long wp = G.prec;
    const XFloat tau_im = G.beta / (XFloat::of(2L, wp) * XFloat::pi(wp));

    // w-direction Fourier weights, shared across all u samples
    std::vector<std::vector<XComplex>> wphase(ms.size());
    for (size_t i = 0; i < ms.size(); ++i) {
        wphase[i].reserve(static_cast<size_t>(G.Nw));
        for (long t = 0; t < G.Nw; ++t)
            wphase[i].push_back(phase_unit(ms[i] * (2 * t + 1), 2 * G.Nw, wp));
    }

    std::vector<XComplex> totals(ms.size(), XComplex::zero(wp));
    Scratch S(wp);
    for (long s = 0; s < G.Nu; ++s) {
        XFloat u = XFloat::of(s, wp) / XFloat::of(G.Nu, wp);
        UContext C = make_ucontext(G.k, u, tau_im, G.cutoff, wp);
        std::vector<XComplex> acc(ms.size(), XComplex::zero(wp));
        for (long t = 0; t < G.Nw; ++t) {
            XFloat w = XFloat::of(2 * t + 1, wp) / XFloat::of(2 * G.Nw, wp);
            XComplex zhalf = cis(XFloat::pi(wp) * w);
            XComplex f = f_at_point(C, zhalf, G.cutoff, S, wp, G.prec / 2);
            for (size_t i = 0; i < ms.size(); ++i) {
                XComplex term = f * wphase[i][static_cast<size_t>(t)];
                acc[i] = acc[i] + term;
            }
        }
        XComplex uphase = phase_unit(G.n * s, G.Nu, wp);
        for (size_t i = 0; i < ms.size(); ++i) totals[i] = totals[i] + acc[i] * uphase;
    }

    XFloat scale = exp(XFloat::of(G.n, wp) * G.beta) / XFloat::of(G.Nu * G.Nw, wp);
    for (auto& v : totals) v = scale * v;
    return totals;
}

GridSpec resolve_spec(const ContourConfig& cfg) {
    if (cfg.k < 1) throw Error("contour: k must be positive");
    if (cfg.n < 0) throw Error("contour: n must be non-negative");
    if (cfg.precision < 64) throw Error("contour: precision below the supported floor");
    GridSpec G;
    G.k = cfg.k;
    G.n = cfg.n;
    G.prec = cfg.precision + 16;
    long n_eff = std::max(cfg.n, 1L);
    G.beta = XFloat::pi(G.prec) * sqrt(XFloat::of(cfg.k, G.prec) / XFloat::of(6 * n_eff, G.prec));
    G.Nw = cfg.samples_w > 0 ? next_pow2(cfg.samples_w) : std::max(64L, next_pow2(4 * cfg.n + 8));
    G.Nu = cfg.samples_u > 0 ? next_pow2(cfg.samples_u) : std::max(128L, next_pow2(8 * cfg.n + 8));
    G.cutoff = cfg.product_cutoff > 0 ? cfg.product_cutoff
                                      : auto_cutoff(G.beta.to_double(), cfg.precision);
    return G;
}

}  // namespace

XComplex eval_eta(const XComplex& tau, long cutoff, long precision) {
    if (tau.im.sgn() <= 0) throw Error("eval_eta: Im(tau) must be positive");
    const long wp = precision + 16;
    XFloat u = at(tau.re, wp), v = at(tau.im, wp);
    XFloat two_pi = XFloat::of(2L, wp) * XFloat::pi(wp);
    XFloat qmod = exp(-(two_pi * v));
    require_radius(qmod);
    if (cutoff <= 0) cutoff = auto_cutoff((two_pi * v).to_double(), precision);

    XComplex q = qmod * cis(two_pi * u);
    XComplex P = XComplex::one(wp);
    XComplex qp = q;
    XComplex one = XComplex::one(wp);
    for (long j = 1; j <= cutoff; ++j) {
        P = P * (one - qp);
        qp = qp * q;
    }
    XComplex pref = exp_i_pi_tau(u, v, XFloat::of(1L, wp) / XFloat::of(12L, wp), wp);
    return at(pref * P, precision);
}

XComplex eval_theta(const XComplex& w, const XComplex& tau, long cutoff, long precision) {
    if (tau.im.sgn() <= 0) throw Error("eval_theta: Im(tau) must be positive");
    const long wp = precision + 16;
    XFloat u = at(tau.re, wp), v = at(tau.im, wp);
    XFloat two_pi = XFloat::of(2L, wp) * XFloat::pi(wp);
    XFloat qmod = exp(-(two_pi * v));
    require_radius(qmod);
    if (cutoff <= 0) cutoff = auto_cutoff((two_pi * v).to_double(), precision);

    XComplex q = qmod * cis(two_pi * u);
    XComplex wc = at(w, wp);
    XComplex i_pi_w = XComplex(-(XFloat::pi(wp) * wc.im), XFloat::pi(wp) * wc.re);
    XComplex zhalf = exp(i_pi_w);
    XComplex zeta = zhalf * zhalf;
    XComplex zinv = XComplex::one(wp) / zeta;

    XComplex acc = XComplex::one(wp);
    XComplex one = XComplex::one(wp);
    XComplex qp = q;                    // q^j
    XComplex qpm = XComplex::one(wp);   // q^{j-1}
    for (long j = 1; j <= cutoff; ++j) {
        acc = acc * (one - qp);
        acc = acc * (one - zeta * qp);
        acc = acc * (one - zinv * qpm);
        qpm = qp;
        qp = qp * q;
    }
    XComplex pref = XComplex::of(0.0, 1.0, wp) * zhalf *
                    exp_i_pi_tau(u, v, XFloat::of(1L, wp) / XFloat::of(4L, wp), wp);
    return at(pref * acc, precision);
}

XComplex eval_f(long k, const XFloat& w, const XComplex& tau, long cutoff, long precision) {
    if (k < 1) throw Error("eval_f: k must be positive");
    const long wp = precision + 16;
    XComplex eta = eval_eta(tau, cutoff, wp);
    XComplex wc(at(w, wp), XFloat::zero(wp));
    XComplex theta = eval_theta(wc, tau, cutoff, wp);
    XFloat theta_sq = theta.re * theta.re + theta.im * theta.im;
    if (theta_sq < pow(XFloat::of(2L, wp), -precision))
        throw PoleProximity("eval_f: sampled too close to a theta zero");

    XFloat u = at(tau.re, wp), v = at(tau.im, wp);
    XFloat pi_w = XFloat::pi(wp) * at(w, wp);
    XComplex pref = XComplex::of(0.0, 1.0, wp) * (cis(pi_w) - cis(-pi_w));
    XComplex g = pref * pow(eta, 3L) / theta;
    XComplex qk24 = exp_i_pi_tau(u, v, XFloat::of(k, wp) / XFloat::of(12L, wp), wp);
    return at(g * g * pow(eta, -k) * qk24, precision);
}

std::vector<XFloat> contour_row(const ContourConfig& cfg, const std::vector<long>& ms,
                                std::vector<XFloat>* self_deltas) {
    GridSpec G = resolve_spec(cfg);
    std::vector<XComplex> base = grid_coeffs(G, ms);

    std::vector<XFloat> out;
    out.reserve(ms.size());
    for (const auto& v : base) out.push_back(at(v.re, cfg.precision));

    if (self_deltas) self_deltas->assign(ms.size(), XFloat::zero(cfg.precision));
    if (cfg.self_check) {
        GridSpec Gw = G;
        Gw.Nw *= 2;
        GridSpec Gu = G;
        Gu.Nu *= 2;
        std::vector<XComplex> finer_w = grid_coeffs(Gw, ms);
        std::vector<XComplex> finer_u = grid_coeffs(Gu, ms);
        for (size_t i = 0; i < ms.size(); ++i) {
            XFloat dw = abs(base[i].re - finer_w[i].re);
            XFloat du = abs(base[i].re - finer_u[i].re);
            XFloat delta = dw > du ? dw : du;
            if (self_deltas) (*self_deltas)[i] = at(delta, cfg.precision);
            XFloat mag = abs(base[i].re);
            XFloat budget = XFloat::of(cfg.tolerance, G.prec) *
                            (mag > XFloat::of(1L, G.prec) ? mag : XFloat::of(1L, G.prec));
            if (delta > budget)
                throw QuadratureUnstable("contour quadrature not self-consistent under doubling");
        }
    }
    return out;
}

XFloat contour_a(const ContourConfig& cfg) {
    return contour_row(cfg, {cfg.m}, nullptr)[0];
}

XComplex g_m1_numeric(long m, const XComplex& z, long precision) {
    if (z.re.sgn() <= 0) throw Error("g_m1_numeric: Re(z) must be positive");
    const long wp = precision + 16;
    const XFloat pi_w = XFloat::pi(wp);
    const XFloat two(XFloat::of(2L, wp));
    const XComplex zw = at(z, wp);
    const XComplex zinv = XComplex::one(wp) / zw;
    const XFloat four_pi_sq = XFloat::of(4L, wp) * pi_w * pi_w;
    const XFloat two_pi_sq = two * pi_w * pi_w;
    const XFloat two_pi_m = two * pi_w * XFloat::of(m < 0 ? -m : m, wp);

    auto F = [&](const XFloat& w) -> XComplex {
        if (w.is_zero()) {
            // sin^2/sinh^2 -> z^2/(4 pi^2) as w -> 0
            return (XFloat::of(1L, wp) / four_pi_sq) * (zw * zw);
        }
        XFloat s = sin(pi_w * w);
        XFloat numer_real = s * s * cos(two_pi_m * w);
        XComplex grow = exp((four_pi_sq * w * w) * zinv);
        XComplex sh = csinh((two_pi_sq * w) * zinv);
        return (numer_real * grow) / (sh * sh);
    };

    // Adaptive Simpson on [0, 1/2] against a whole-interval magnitude scale.
    const XFloat a0 = XFloat::zero(wp);
    const XFloat b0 = XFloat::of(1L, wp) / two;
    XComplex fa = F(a0), fb = F(b0), fm = F((a0 + b0) / two);
    auto simpson = [&](const XFloat& a, const XFloat& b, const XComplex& va, const XComplex& vm,
                       const XComplex& vb) {
        return ((b - a) / XFloat::of(6L, wp)) * (va + XFloat::of(4L, wp) * vm + vb);
    };
    XComplex whole = simpson(a0, b0, fa, fm, fb);

    // Tolerance scale from a coarse composite pass over |F|; the three-point
    // estimate alone badly underestimates sharply peaked integrands (small
    // |z| localizes the mass near w = 0) and would force runaway refinement.
    XFloat scale_est;
    {
        const long panels = 64;
        XFloat h = (b0 - a0) / XFloat::of(panels, wp);
        XFloat acc = abs(fa) + abs(fb);
        for (long i = 1; i < panels; ++i)
            acc += XFloat::of(i % 2 ? 4L : 2L, wp) * abs(F(a0 + XFloat::of(i, wp) * h));
        scale_est = acc * h / XFloat::of(3L, wp);
    }
    long tol_bits = std::min(precision / 2 + 8, 50L);
    XFloat tol = scale_est * pow(XFloat::of(2L, wp), -tol_bits);
    if (tol.is_zero()) tol = pow(XFloat::of(2L, wp), -(tol_bits + 40));

    std::function<XComplex(const XFloat&, const XFloat&, const XComplex&, const XComplex&,
                           const XComplex&, const XComplex&, const XFloat&, int)>
        adapt = [&](const XFloat& a, const XFloat& b, const XComplex& va, const XComplex& vm,
                    const XComplex& vb, const XComplex& s_whole, const XFloat& eps,
                    int depth) -> XComplex {
        XFloat mid = (a + b) / two;
        XFloat lm = (a + mid) / two;
        XFloat rm = (mid + b) / two;
        XComplex flm = F(lm), frm = F(rm);
        XComplex left = simpson(a, mid, va, flm, vm);
        XComplex right = simpson(mid, b, vm, frm, vb);
        XComplex sum = left + right;
        XComplex diff = sum - s_whole;
        if (depth <= 0 || abs(diff) <= XFloat::of(15L, wp) * eps) {
            return sum + (XFloat::of(1L, wp) / XFloat::of(15L, wp)) * diff;
        }
        XFloat half_eps = eps / two;
        return adapt(a, mid, va, flm, vm, left, half_eps, depth - 1) +
               adapt(mid, b, vm, frm, vb, right, half_eps, depth - 1);
    };

    XComplex integral = adapt(a0, b0, fa, fm, fb, whole, tol, 32);
    XComplex scale = (XFloat::of(8L, wp) * pi_w * pi_w) * (zinv * zinv);
    return at(scale * integral, precision);
}

ArcSplitReport arc_split_probe(const ContourConfig& cfg, long taylor_terms) {
    if (cfg.n < 1) throw Error("arc_split_probe: n must be positive");
    if (taylor_terms < 1) throw Error("arc_split_probe: need at least one polynomial term");
    GridSpec G = resolve_spec(cfg);
    const long wp = G.prec;
    const long k = G.k;
    const XFloat two_pi = XFloat::of(2L, wp) * XFloat::pi(wp);
    const XFloat tau_im = G.beta / two_pi;
    const XFloat half = XFloat::of(1L, wp) / XFloat::of(2L, wp);
    const XFloat arc_limit = G.beta / two_pi;  // |u| <= beta/(2 pi) is the central arc

    std::vector<XComplex> wphase;
    std::vector<XFloat> wgrid;
    wphase.reserve(static_cast<size_t>(G.Nw));
    wgrid.reserve(static_cast<size_t>(G.Nw));
    for (long t = 0; t < G.Nw; ++t) {
        wphase.push_back(phase_unit(cfg.m * (2 * t + 1), 2 * G.Nw, wp));
        wgrid.push_back(XFloat::of(2 * t + 1, wp) / XFloat::of(2 * G.Nw, wp));
    }

    std::vector<std::pair<long, Rat>> dpoly;
    for (long ell = 1; ell <= taylor_terms; ++ell)
        dpoly.emplace_back(ell, asym::d_coeff(cfg.m, k, ell));

    const XFloat pi_w = XFloat::pi(wp);
    const XFloat four_pi_sq = XFloat::of(4L, wp) * pi_w * pi_w;
    const XFloat two_pi_sq = XFloat::of(2L, wp) * pi_w * pi_w;

    XComplex M_c = XComplex::zero(wp), E_c = XComplex::zero(wp);
    XComplex E1_c = XComplex::zero(wp), E2_c = XComplex::zero(wp), E3_c = XComplex::zero(wp);
    const XFloat outer_scale = exp(XFloat::of(G.n, wp) * G.beta) / XFloat::of(G.Nu, wp);
    Scratch S(wp);

    for (long s = 0; s < G.Nu; ++s) {
        XFloat u = XFloat::of(s, wp) / XFloat::of(G.Nu, wp);
        XFloat u_wr = u <= half ? u : u - XFloat::of(1L, wp);
        bool central = !(abs(u_wr) > arc_limit);
        UContext C = make_ucontext(k, u, tau_im, G.cutoff, wp);

        XComplex P1k = pow(C.P1, k);
        XComplex z(G.beta, -(two_pi * u_wr));
        XComplex zi = XComplex::one(wp) / z;
        XComplex z_over_2pi = (XFloat::of(1L, wp) / two_pi) * z;
        XComplex fsum = XComplex::zero(wp);
        XComplex residual_sum = XComplex::zero(wp);
        for (long t = 0; t < G.Nw; ++t) {
            const XFloat& w = wgrid[static_cast<size_t>(t)];
            XComplex zhalf = cis(pi_w * w);
            XComplex f = f_at_point(C, zhalf, G.cutoff, S, wp, G.prec / 2);
            fsum = fsum + f * wphase[static_cast<size_t>(t)];
            if (central) {
                // g^2 minus its central-arc approximation, folded to w <= 1/2
                XFloat wf = w <= half ? w : XFloat::of(1L, wp) - w;
                XFloat sw = sin(pi_w * wf);
                XComplex grow = exp((four_pi_sq * wf * wf) * zi);
                XComplex sh = csinh((two_pi_sq * wf) * zi);
                XComplex approx = ((sw * sw) * grow) / (z_over_2pi * z_over_2pi * (sh * sh));
                XComplex g_sq = f * P1k;
                residual_sum = residual_sum + (g_sq - approx) * wphase[static_cast<size_t>(t)];
            }
        }
        XComplex W = outer_scale * phase_unit(G.n * s, G.Nu, wp);
        XComplex contribution = (XFloat::of(1L, wp) / XFloat::of(G.Nw, wp)) * fsum * W;
        if (central) {
            M_c = M_c + contribution;

            XComplex P1k_inv = XComplex::one(wp) / P1k;
            XComplex g1 = g_m1_numeric(cfg.m, z, cfg.precision);
            g1 = XComplex(at(g1.re, wp), at(g1.im, wp));

            XComplex zpow = pow(z_over_2pi, XFloat::of(k, wp) / XFloat::of(2L, wp));
            XComplex twist = exp(-((XFloat::of(k, wp) / XFloat::of(24L, wp)) * z));
            XComplex spike = exp((XFloat::of(k, wp) * pi_w * pi_w / XFloat::of(6L, wp)) * zi);
            XComplex qpk = zpow * twist * spike;

            E1_c = E1_c + ((XFloat::of(1L, wp) / XFloat::of(G.Nw, wp)) * residual_sum) * P1k_inv * W;
            E2_c = E2_c + g1 * (P1k_inv - qpk) * W;

            XComplex poly = XComplex::zero(wp);
            for (auto it = dpoly.rbegin(); it != dpoly.rend(); ++it)
                poly = (poly + XComplex(XFloat::of(it->second, wp), XFloat::zero(wp))) * z;
            E3_c = E3_c + zpow * spike * (twist * g1 - poly) * W;
        } else {
            E_c = E_c + contribution;
        }
    }

    ArcSplitReport rep;
    rep.M_major = at(M_c, cfg.precision);
    rep.E_minor = at(E_c, cfg.precision);
    rep.E1 = at(abs(E1_c), cfg.precision);
    rep.E2 = at(abs(E2_c), cfg.precision);
    rep.E3 = at(abs(E3_c), cfg.precision);

    const XFloat nf = XFloat::of(G.n, wp);
    const XFloat four = XFloat::of(4L, wp);
    XFloat x = pi_w * sqrt(XFloat::of(2 * k, wp) * nf / XFloat::of(3L, wp));
    XFloat y = pi_w * sqrt(XFloat::of(6L, wp) * nf / XFloat::of(k, wp));
    XFloat bE = pow(nf, -(XFloat::of(k - 6, wp) / four)) *
                exp(x * (XFloat::of(1L, wp) -
                         XFloat::of(3L, wp) / (four * pi_w * pi_w)));
    XFloat bE1 = pow(nf, -(XFloat::of(k, wp) / four) + half) *
                 exp(x - XFloat::of(3L, wp) / XFloat::of(2L, wp) * y);
    XFloat bE2 = pow(nf, -(XFloat::of(k, wp) / four) - XFloat::of(1L, wp)) * exp(x - four * y);
    XFloat bE3 = pow(nf, -(XFloat::of(1L, wp) + XFloat::of(taylor_terms, wp) / XFloat::of(2L, wp) +
                           XFloat::of(k, wp) / four)) *
                 exp(x);
    rep.bound_ratios[0] = (abs(E_c) / bE).to_double();
    rep.bound_ratios[1] = (at(rep.E1, wp) / bE1).to_double();
    rep.bound_ratios[2] = (at(rep.E2, wp) / bE2).to_double();
    rep.bound_ratios[3] = (at(rep.E3, wp) / bE3).to_double();
    return rep;
}

}  // namespace hilb::contour
