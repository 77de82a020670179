#pragma once

#include "hilb/qzseries.hpp"

#include <array>
#include <memory>
#include <vector>

namespace hilb::gen {

// Normalized two-variable expansion
//   g = (q;q)^2 / ((zeta q; q) (zeta^{-1} q; q)),
// the integer-exponent form of the eta^3/theta quotient after its
// i * zeta^(1/2) * q^(1/8) prefactors cancel. Constant term 1.
QZSeries g_series(long order);

// f_k = g^2 / (q;q)^k with the global fractional q-power dropped, so the
// coefficient of zeta^m q^n is exactly a_{m,k}(n). Built factor-wise (one
// in-place division per Pochhammer factor), which is what makes large
// truncation orders affordable.
QZSeries f_series(long k, long order);

// Literal composition g_series^2 * invert(pow(pochhammer, k)). Same value as
// f_series; kept as an independently-coded route for cross-checking and only
// suitable for moderate orders.
QZSeries f_series_reference(long k, long order);

// Immutable memoized f_series, keyed by (k, order). Safe for concurrent use;
// entries are write-once.
std::shared_ptr<const QZSeries> f_series_cached(long k, long order);

// Exact coefficient a_{m,k}(n). Builds (or reuses) a cached f_series of
// sufficient order.
Int a(long m, long k, long n);

// Partitions of n into parts of k colors: q^n coefficient of 1/(q;q)^k.
Int p_colored(long k, long n);

// True iff sum_m a(m,k,n) = p_colored(k,n) holds exactly.
bool sum_rule_check(long k, long n);

// Hodge numbers h^{p,r} of a smooth surface, 0 <= p,r <= 2. In projective
// mode validate() enforces h^{p,r} = h^{r,p} and h^{p,r} = h^{2-p,2-r}.
struct HodgeDiamond {
    std::array<std::array<Int, 3>, 3> h{};
    bool projective = true;

    static HodgeDiamond K3();
    void validate() const;
};

// chi_y polynomial of the n-point Hilbert scheme of a K3 surface,
// sum_r c[r] y^r with degree 2n.
struct ChiYPolynomial {
    long n = 0;
    std::vector<Int> c;

    Int eval(const Int& y) const;
    bool palindromic() const;
};

// Assembles chi_y(K3^[n]) = sum_{m=-n}^{n} a(m,24,n) (-1)^(m+n) y^(m+n).
// The index shift m -> m+n and the sign are this library's convention for
// mapping the symmetric coefficient index onto y-degrees 0..2n; it is fixed
// by the n=1 value 2 - 20y + 2y^2.
ChiYPolynomial chi_y(long n);

// Dense Laurent polynomial in two variables x, y.
class BiLaurent {
public:
    BiLaurent() = default;
    static BiLaurent constant(Int c);

    bool is_zero() const { return v_.empty(); }
    long lo_x() const { return lox_; }
    long hi_x() const { return lox_ + nx_ - 1; }
    long lo_y() const { return loy_; }
    long hi_y() const { return loy_ + ny_ - 1; }

    // Coefficient of x^ex y^ey; zero outside the stored window.
    const Int& at(long ex, long ey) const;

    // this += c * x^sx y^sy * src, growing the window as needed.
    void add_scaled_shifted(const BiLaurent& src, const Int& c, long sx, long sy);

private:
    long lox_ = 0, loy_ = 0;
    long nx_ = 0, ny_ = 0;
    std::vector<Int> v_; // row-major: v_[(ex-lox_)*ny_ + (ey-loy_)]

    void ensure_window(long lx, long hx, long ly, long hy);
};

// Truncated q-series with BiLaurent coefficients.
struct XYSeries {
    long order = 0;
    std::vector<BiLaurent> rows; // rows[n] multiplies q^n
};

// The surface-product expansion
//   prod_{n>=1} prod_{p+r odd} (1 + x^(p-1) y^(r-1) q^n)^(h^{p,r})
//            / prod_{p+r even} (1 - x^(p-1) y^(r-1) q^n)^(h^{p,r}),
// whose q^n coefficient is x^(-n) y^(-n) times the Hodge polynomial of the
// n-point Hilbert scheme of the surface.
XYSeries gottsche_series(const HodgeDiamond& hd, long order);

// Substitute x -> -1, y -> -zeta in one row, giving a Laurent polynomial in
// zeta (each term picks up the sign (-1)^(ex+ey) and lands on zeta^ey).
LaurentPoly specialize_row(const BiLaurent& row);

} // namespace hilb::gen
