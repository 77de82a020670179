#pragma once

#include <vector>

#include "hilb/xfloat.hpp"

namespace hilb::contour {

// Quadrature setup for recovering a(m,k,n) from the product side.
// samples counts are rounded up to powers of two; 0 means "choose from n".
// product_cutoff 0 means "choose from precision and the contour radius".
struct ContourConfig {
    long k = 24;
    long n = 0;
    long m = 0;
    long samples_w = 1 << 10;
    long samples_u = 1 << 10;
    long precision = 128;
    long product_cutoff = 0;
    double tolerance = 1e-6;  // relative self-consistency budget
    bool self_check = true;   // re-run with each sample count doubled
};

// eta(tau) as the truncated product q^{1/24} prod_{j>=1} (1 - q^j), with the
// principal-branch prefactor exp(2 pi i tau / 24). Throws ConvergenceTooSlow
// when |q| >= 1 - 2^{-8}. cutoff <= 0 selects the count automatically so the
// dropped tail is below the precision budget.
XComplex eval_eta(const XComplex& tau, long cutoff, long precision);

// theta(w; tau) as the truncated triple product
//   i zeta^{1/2} q^{1/8} prod_{j>=1} (1-q^j)(1 - zeta q^j)(1 - zeta^{-1} q^{j-1}),
// zeta = exp(2 pi i w), principal branches for the half powers.
XComplex eval_theta(const XComplex& w, const XComplex& tau, long cutoff, long precision);

// Normalized kernel g(w;tau)^2 eta(tau)^{-k} q^{k/24}, whose Fourier
// coefficients in (zeta, q) are the exact integer table. Throws
// PoleProximity when |theta| falls below 2^{-precision/2}.
XComplex eval_f(long k, const XFloat& w, const XComplex& tau, long cutoff, long precision);

// a(m,k,n) recovered by two-dimensional trapezoid quadrature on the circle
// of radius e^{-beta}, beta = pi sqrt(k/(6n)) (n = 0 uses the n = 1 radius).
// The w grid is offset by half a step so no sample hits the w = 0 pole.
// Throws QuadratureUnstable when doubling either sample count moves the
// result by more than the tolerance.
XFloat contour_a(const ContourConfig& cfg);

// Same quadrature, one shared grid, several m extracted at once (cfg.m is
// ignored). If self_deltas is non-null it receives, per m, the largest
// change observed when doubling either sample direction.
std::vector<XFloat> contour_row(const ContourConfig& cfg, const std::vector<long>& ms,
                                std::vector<XFloat>* self_deltas = nullptr);

// Adaptive quadrature of the kernel transform
//   (8 pi^2 / z^2) int_0^{1/2} sin^2(pi w) e^{4 pi^2 w^2 / z}
//                  cos(2 pi m w) / sinh^2(2 pi^2 w / z) dw,   Re z > 0.
XComplex g_m1_numeric(long m, const XComplex& z, long precision);

// Central-arc / complementary-arc decomposition of the contour sum plus the
// three successive central-arc refinements, each reported as a magnitude and
// as a ratio against the expected magnitude shape. Ratios are diagnostics,
// not pass/fail values.
struct ArcSplitReport {
    XComplex M_major;
    XComplex E_minor;
    XFloat E1, E2, E3;
    // measured / expected shape, in order E, E1, E2, E3
    double bound_ratios[4] = {0.0, 0.0, 0.0, 0.0};
};

ArcSplitReport arc_split_probe(const ContourConfig& cfg, long taylor_terms = 3);

}  // namespace hilb::contour
