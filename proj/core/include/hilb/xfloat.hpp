#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "hilb/bigint.hpp"

namespace hilb {

// Extended-precision real scalar; a thin value-semantics wrapper over MPFR.
// Binary operations round to nearest at the larger operand precision, so
// precision is always an explicit per-value property, never ambient state.
class XFloat {
public:
    static constexpr long default_precision = 256;

    XFloat() : XFloat(default_precision) {}
    explicit XFloat(long prec) { mpfr_init2(x_, prec < 2 ? 2 : prec); }
    XFloat(const XFloat& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    XFloat(XFloat&& o) noexcept {
        mpfr_init2(x_, 2);
        mpfr_swap(x_, o.x_);
    }
    XFloat& operator=(const XFloat& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    XFloat& operator=(XFloat&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~XFloat() { mpfr_clear(x_); }

    static XFloat of(double v, long prec = default_precision);
    static XFloat of(long v, long prec = default_precision);
    static XFloat of(const Int& v, long prec = default_precision);
    static XFloat of(const Rat& v, long prec = default_precision);
    static XFloat zero(long prec = default_precision) { return of(0L, prec); }
    static XFloat pi(long prec = default_precision);

    long precision() const { return mpfr_get_prec(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    // Shortest-round-trip style decimal rendering with the given number of
    // significant digits.
    std::string str(int digits = 17) const;

    int sgn() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    bool is_finite() const { return mpfr_number_p(x_) != 0; }
    bool is_integer() const { return mpfr_integer_p(x_) != 0; }

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    XFloat& operator+=(const XFloat& o);
    XFloat& operator-=(const XFloat& o);
    XFloat& operator*=(const XFloat& o);
    XFloat& operator/=(const XFloat& o);

private:
    mpfr_t x_;
};

XFloat operator+(const XFloat& a, const XFloat& b);
XFloat operator-(const XFloat& a, const XFloat& b);
XFloat operator*(const XFloat& a, const XFloat& b);
XFloat operator/(const XFloat& a, const XFloat& b);
XFloat operator-(const XFloat& a);

int cmp(const XFloat& a, const XFloat& b);
inline bool operator<(const XFloat& a, const XFloat& b) { return cmp(a, b) < 0; }
inline bool operator>(const XFloat& a, const XFloat& b) { return cmp(a, b) > 0; }
inline bool operator<=(const XFloat& a, const XFloat& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const XFloat& a, const XFloat& b) { return cmp(a, b) >= 0; }
inline bool operator==(const XFloat& a, const XFloat& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

XFloat abs(const XFloat& a);
XFloat sqrt(const XFloat& a);
XFloat exp(const XFloat& a);
XFloat log(const XFloat& a);
XFloat pow(const XFloat& base, const XFloat& expo);
XFloat pow(const XFloat& base, long expo);
XFloat sin(const XFloat& a);
XFloat cos(const XFloat& a);
XFloat sinh(const XFloat& a);
XFloat cosh(const XFloat& a);
XFloat coth(const XFloat& a);
XFloat atan2(const XFloat& y, const XFloat& x);
XFloat hypot(const XFloat& x, const XFloat& y);
XFloat gamma(const XFloat& a);

// Complex scalar assembled from two XFloat components. Only what the product
// evaluations and quadratures need; principal branches throughout.
struct XComplex {
    XFloat re, im;

    XComplex() = default;
    XComplex(XFloat r, XFloat i) : re(std::move(r)), im(std::move(i)) {}

    static XComplex of(double r, double i, long prec = XFloat::default_precision) {
        return XComplex(XFloat::of(r, prec), XFloat::of(i, prec));
    }
    static XComplex zero(long prec = XFloat::default_precision) { return of(0.0, 0.0, prec); }
    static XComplex one(long prec = XFloat::default_precision) { return of(1.0, 0.0, prec); }

    long precision() const { return re.precision() > im.precision() ? re.precision() : im.precision(); }
};

XComplex operator+(const XComplex& a, const XComplex& b);
XComplex operator-(const XComplex& a, const XComplex& b);
XComplex operator-(const XComplex& a);
XComplex operator*(const XComplex& a, const XComplex& b);
XComplex operator*(const XFloat& a, const XComplex& b);
XComplex operator/(const XComplex& a, const XComplex& b);

XComplex conj(const XComplex& a);
XFloat abs(const XComplex& a);
XFloat arg(const XComplex& a);

// cos(t) + i sin(t)
XComplex cis(const XFloat& t);
XComplex exp(const XComplex& a);
XComplex log(const XComplex& a);
XComplex sqrt(const XComplex& a);
XComplex pow(const XComplex& base, const XFloat& expo);
XComplex pow(const XComplex& base, long expo);

}  // namespace hilb
