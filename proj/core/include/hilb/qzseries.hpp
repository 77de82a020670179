#pragma once

#include "hilb/errors.hpp"
#include "hilb/laurent.hpp"

#include <vector>

namespace hilb {

// Power series in q, truncated at a fixed order N, whose coefficients are
// Laurent polynomials in zeta. Coefficients are known exactly for q^0..q^N.
//
// Values are immutable in normal use: the arithmetic entry points below are
// pure functions. The in-place binomial helpers exist for builders that
// assemble a series before handing it out.
class QZSeries {
public:
    // Zero series with the given truncation order.
    explicit QZSeries(long order);

    static QZSeries one(long order);
    static QZSeries monomial(Int c, long zeta_exp, long q_exp, long order);

    long order() const { return order_; }

    // Laurent coefficient of q^n. Throws OrderExceeded outside 0..order().
    const LaurentPoly& row(long n) const;

    // Integer coefficient of zeta^m q^n; zero when m lies outside the stored
    // Laurent window. Throws OrderExceeded when n is outside 0..order().
    Int coeff(long n, long m) const;

    bool operator==(const QZSeries& o) const = default;

    // In-place multiply by (1 + c zeta^s q^j), j >= 1.
    void mul_binomial(const Int& c, long s, long j);
    // In-place divide by (1 + c zeta^s q^j), j >= 1.
    void div_binomial(const Int& c, long s, long j);

    // Mutable access for builders.
    LaurentPoly& mutable_row(long n);

private:
    long order_ = 0;
    std::vector<LaurentPoly> c_;
};

// Coefficient-wise sum/difference; result truncation is the minimum of the
// operand orders.
QZSeries add(const QZSeries& a, const QZSeries& b);
QZSeries sub(const QZSeries& a, const QZSeries& b);
QZSeries negate(const QZSeries& a);

// Cauchy product truncated at the minimum operand order.
QZSeries mul(const QZSeries& a, const QZSeries& b);

// Multiplicative inverse up to truncation. The q^0 coefficient must be a
// single monomial with coefficient +1 or -1; otherwise NonUnitConstantTerm
// is thrown.
QZSeries invert(const QZSeries& a);

// Repeated-squaring power; pow(a, 0) is the one-series of the same order.
QZSeries pow(const QZSeries& a, unsigned long e);

// prod_{n >= 0, t + n <= N} (1 - zeta^s q^(t+n)), the q-Pochhammer product
// with first factor at q^t. Throws InvalidShift when t < 1.
QZSeries pochhammer(long s, long t, long order);

inline QZSeries operator+(const QZSeries& a, const QZSeries& b) { return add(a, b); }
inline QZSeries operator-(const QZSeries& a, const QZSeries& b) { return sub(a, b); }
inline QZSeries operator*(const QZSeries& a, const QZSeries& b) { return mul(a, b); }

} // namespace hilb
