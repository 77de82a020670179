#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hilb/bigint.hpp"
#include "hilb/xfloat.hpp"

namespace hilb::asym {

// Exact Bernoulli number B_j (B_1 = -1/2), computed by the recurrence from
// the generating function x/(e^x - 1) and memoized write-once.
Rat bernoulli(long j);

using BernoulliFn = std::function<Rat(long)>;

// Coefficient of z^ell in the expansion e^{-kz/24} * G_m(z), where G_m is the
// weighted Bernoulli triple sum whose low-order coefficients drive the main
// asymptotic term. Exact rational arithmetic throughout. The `_with` variant
// takes the Bernoulli source as a parameter; it exists so verification can
// inject a perturbed source and prove the closed-form checks are live.
Rat d_coeff(long m, long k, long ell);
Rat d_coeff_with(const BernoulliFn& B, long m, long k, long ell);

// Coefficient of z^t in G_m(z) alone (no exponential twist), computed by an
// independently derived grouped formula rather than the triple-sum
// enumeration d_coeff uses. Serves as the second route when cross-checking
// d_coeff by exact series convolution.
Rat g_m1_taylor(long m, long t);

// Truncated main-term expansion data: coefficients d_{m,k}(ell) for
// ell = 1..N, gap-free.
struct AsymExpansion {
    long m = 0;
    long k = 24;
    long N = 0;
    std::vector<std::pair<long, Rat>> terms;
};

AsymExpansion expansion(long m, long k, long N);

// Modified Bessel function of the first kind, I_order(x), by the ascending
// series in extended precision. Negative integer orders are routed through
// the symmetry I_{-n} = I_n. Throws PrecisionLoss when error tracking cannot
// certify at least 30 correct bits (large cancellation, or the requested
// precision leaves no room beyond the tail cutoff).
XFloat bessel_I(const XFloat& order, const XFloat& x, long precision = XFloat::default_precision);
XFloat bessel_I(double order, double x, long precision = XFloat::default_precision);

// pi * sqrt(k / (6n)), the natural width parameter at index n.
XFloat beta(long k, long n, long precision = XFloat::default_precision);

// Truncated main-term estimate of a(m, k, n) with N expansion terms:
//   (2pi)^{-k/2} sum_{ell=1}^{N} d_{m,k}(ell) n^{-(2+2ell+k)/4}
//                 (pi sqrt(k/6))^{1+ell+k/2} I_{-1-ell-k/2}(pi sqrt(2kn/3)).
XFloat a_asymptotic(long m, long k, long n, long N, long precision = XFloat::default_precision);

// Leading-order estimate of the difference a(m,k,n) - a(r,k,n):
//   (4/15) pi^3 (r^2 - m^2) (8n)^{-(9+k)/4} (k/3)^{(k+7)/4} e^{pi sqrt(2kn/3)}.
XFloat diff_asymptotic(long m, long r, long k, long n, long precision = XFloat::default_precision);

// Limit profile P(m, beta) = (beta/4) csch^2(beta m/2) (beta m coth(beta m/2) - 2),
// with the removable singularity at m = 0 handled by the even Taylor branch
// (used for |beta m| < 1/8). Integrates to 1 in m and has variance
// 2 pi^2 / (3 beta^2).
XFloat profile_P(const XFloat& m, const XFloat& beta);

// Leading-order count of partitions of n into k colors:
//   2 (k/3)^{(k+1)/4} (8n)^{-(k+3)/4} e^{pi sqrt(2kn/3)}.
XFloat pk_asymptotic(long k, long n, long precision = XFloat::default_precision);

// One profile comparison: the exact ratio a(m,k,n)/p_k(n) against
// profile_P(m, beta(k,n)). `in_window` records whether |m| lies inside the
// guaranteed range |m| <= sqrt(n/(6k)) log(n)/pi; outside it the row is still
// computed, just flagged.
struct ProfileRow {
    long m = 0;
    XFloat exact_ratio;
    XFloat profile_value;
    XFloat relative_deviation;
    bool in_window = true;
};

ProfileRow profile_ratio(long m, long k, long n, long precision = XFloat::default_precision);

// Numerical quadrature of int_0^infty u^{2j} / sinh^2(pi u) du, which equals
// (-1)^{j+1} B_{2j} / pi.
XFloat bernoulli_integral(long j, long precision = XFloat::default_precision);

}  // namespace hilb::asym
