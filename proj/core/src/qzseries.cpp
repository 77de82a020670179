#include "hilb/qzseries.hpp"

#include <algorithm>
#include <string>

namespace hilb {

QZSeries::QZSeries(long order) : order_(order) {
    if (order < 0) throw OrderExceeded("truncation order must be >= 0");
    c_.resize(static_cast<size_t>(order) + 1);
}

QZSeries QZSeries::one(long order) {
    QZSeries s(order);
    s.c_[0] = LaurentPoly::constant(1);
    return s;
}

QZSeries QZSeries::monomial(Int c, long zeta_exp, long q_exp, long order) {
    QZSeries s(order);
    if (q_exp < 0 || q_exp > order)
        throw OrderExceeded("monomial q-exponent outside 0..order");
    s.c_[static_cast<size_t>(q_exp)] = LaurentPoly::monomial(std::move(c), zeta_exp);
    return s;
}

const LaurentPoly& QZSeries::row(long n) const {
    if (n < 0 || n > order_)
        throw OrderExceeded("coefficient index " + std::to_string(n) +
                            " exceeds truncation order " + std::to_string(order_));
    return c_[static_cast<size_t>(n)];
}

LaurentPoly& QZSeries::mutable_row(long n) {
    if (n < 0 || n > order_)
        throw OrderExceeded("coefficient index " + std::to_string(n) +
                            " exceeds truncation order " + std::to_string(order_));
    return c_[static_cast<size_t>(n)];
}

Int QZSeries::coeff(long n, long m) const { return row(n).at(m); }

void QZSeries::mul_binomial(const Int& c, long s, long j) {
    if (j < 1) throw InvalidShift("binomial q-shift must be >= 1");
    for (long n = order_; n >= j; --n)
        c_[static_cast<size_t>(n)].add_scaled_shifted(c_[static_cast<size_t>(n - j)], c, s);
}

void QZSeries::div_binomial(const Int& c, long s, long j) {
    if (j < 1) throw InvalidShift("binomial q-shift must be >= 1");
    Int neg_c = -c;
    for (long n = j; n <= order_; ++n)
        c_[static_cast<size_t>(n)].add_scaled_shifted(c_[static_cast<size_t>(n - j)], neg_c, s);
}

QZSeries add(const QZSeries& a, const QZSeries& b) {
    QZSeries r(std::min(a.order(), b.order()));
    for (long n = 0; n <= r.order(); ++n)
        r.mutable_row(n) = a.row(n) + b.row(n);
    return r;
}

QZSeries sub(const QZSeries& a, const QZSeries& b) {
    QZSeries r(std::min(a.order(), b.order()));
    for (long n = 0; n <= r.order(); ++n)
        r.mutable_row(n) = a.row(n) - b.row(n);
    return r;
}

QZSeries negate(const QZSeries& a) {
    QZSeries r(a.order());
    for (long n = 0; n <= r.order(); ++n) r.mutable_row(n) = -a.row(n);
    return r;
}

QZSeries mul(const QZSeries& a, const QZSeries& b) {
    QZSeries r(std::min(a.order(), b.order()));
    for (long n = 0; n <= r.order(); ++n) {
        LaurentPoly& acc = r.mutable_row(n);
        long lo = 0, hi = -1;
        bool any = false;
        for (long i = 0; i <= n; ++i) {
            const LaurentPoly& ai = a.row(i);
            const LaurentPoly& bj = b.row(n - i);
            if (ai.is_zero() || bj.is_zero()) continue;
            long plo = ai.lo() + bj.lo();
            long phi = ai.hi() + bj.hi();
            if (!any) {
                lo = plo;
                hi = phi;
                any = true;
            } else {
                lo = std::min(lo, plo);
                hi = std::max(hi, phi);
            }
        }
        if (!any) continue;
        acc.reserve_window(lo, hi);
        for (long i = 0; i <= n; ++i) add_mul_into(acc, a.row(i), b.row(n - i));
        acc.canonicalize();
    }
    return r;
}

QZSeries invert(const QZSeries& a) {
    const LaurentPoly& a0 = a.row(0);
    if (!a0.is_unit_monomial())
        throw NonUnitConstantTerm(
            "invert() needs a q^0 coefficient of the form +/- zeta^s, got " +
            a0.str());
    // a0 = eps * zeta^s with eps = +/-1; its inverse is eps * zeta^(-s).
    Int eps = a0.at(a0.lo());
    long s = a0.lo();
    QZSeries b(a.order());
    b.mutable_row(0) = LaurentPoly::monomial(eps, -s);
    LaurentPoly acc;
    for (long n = 1; n <= a.order(); ++n) {
        acc = LaurentPoly();
        for (long i = 1; i <= n; ++i) add_mul_into(acc, a.row(i), b.row(n - i));
        acc.canonicalize();
        // b[n] = -a0^{-1} * acc = -eps * zeta^(-s) * acc
        LaurentPoly& bn = b.mutable_row(n);
        bn.add_scaled_shifted(acc, -eps, -s);
    }
    return b;
}

QZSeries pow(const QZSeries& a, unsigned long e) {
    QZSeries result = QZSeries::one(a.order());
    if (e == 0) return result;
    QZSeries base = a;
    while (true) {
        if (e & 1UL) result = mul(result, base);
        e >>= 1UL;
        if (e == 0) break;
        base = mul(base, base);
    }
    return result;
}

QZSeries pochhammer(long s, long t, long order) {
    if (t < 1) throw InvalidShift("pochhammer q-shift must be >= 1");
    QZSeries r = QZSeries::one(order);
    for (long j = t; j <= order; ++j) r.mul_binomial(-1, s, j);
    return r;
}

} // namespace hilb
