#include "hilb/xfloat.hpp"

#include <algorithm>
#include <cstdlib>

namespace hilb {

namespace {
long max_prec(const XFloat& a, const XFloat& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

XFloat XFloat::of(double v, long prec) {
    XFloat r(prec);
    mpfr_set_d(r.x_, v, MPFR_RNDN);
    return r;
}

XFloat XFloat::of(long v, long prec) {
    XFloat r(prec);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
}

XFloat XFloat::of(const Int& v, long prec) {
    XFloat r(prec);
    mpfr_set_z(r.x_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

XFloat XFloat::of(const Rat& v, long prec) {
    XFloat r(prec);
    mpfr_set_q(r.x_, v.get_mpq_t(), MPFR_RNDN);
    return r;
}

XFloat XFloat::pi(long prec) {
    XFloat r(prec);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

std::string XFloat::str(int digits) const {
    if (digits < 1) digits = 1;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, x_);
    std::string s(buf ? buf : "");
    mpfr_free_str(buf);
    return s;
}

XFloat& XFloat::operator+=(const XFloat& o) {
    mpfr_add(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}
XFloat& XFloat::operator-=(const XFloat& o) {
    mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}
XFloat& XFloat::operator*=(const XFloat& o) {
    mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}
XFloat& XFloat::operator/=(const XFloat& o) {
    mpfr_div(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

#define HILB_XF_BINOP(name, fn)                                 \
    XFloat name(const XFloat& a, const XFloat& b) {             \
        XFloat r(max_prec(a, b));                               \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);               \
        return r;                                               \
    }

HILB_XF_BINOP(operator+, mpfr_add)
HILB_XF_BINOP(operator-, mpfr_sub)
HILB_XF_BINOP(operator*, mpfr_mul)
HILB_XF_BINOP(operator/, mpfr_div)
HILB_XF_BINOP(atan2, mpfr_atan2)
HILB_XF_BINOP(hypot, mpfr_hypot)
HILB_XF_BINOP(pow, mpfr_pow)

#undef HILB_XF_BINOP

XFloat operator-(const XFloat& a) {
    XFloat r(a.precision());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

int cmp(const XFloat& a, const XFloat& b) { return mpfr_cmp(a.raw(), b.raw()); }

#define HILB_XF_UNOP(name, fn)                    \
    XFloat name(const XFloat& a) {                \
        XFloat r(a.precision());                  \
        fn(r.raw(), a.raw(), MPFR_RNDN);          \
        return r;                                 \
    }

HILB_XF_UNOP(abs, mpfr_abs)
HILB_XF_UNOP(sqrt, mpfr_sqrt)
HILB_XF_UNOP(exp, mpfr_exp)
HILB_XF_UNOP(log, mpfr_log)
HILB_XF_UNOP(sin, mpfr_sin)
HILB_XF_UNOP(cos, mpfr_cos)
HILB_XF_UNOP(sinh, mpfr_sinh)
HILB_XF_UNOP(cosh, mpfr_cosh)
HILB_XF_UNOP(coth, mpfr_coth)
HILB_XF_UNOP(gamma, mpfr_gamma)

#undef HILB_XF_UNOP

XFloat pow(const XFloat& base, long expo) {
    XFloat r(base.precision());
    mpfr_pow_si(r.raw(), base.raw(), expo, MPFR_RNDN);
    return r;
}

XComplex operator+(const XComplex& a, const XComplex& b) {
    return XComplex(a.re + b.re, a.im + b.im);
}

XComplex operator-(const XComplex& a, const XComplex& b) {
    return XComplex(a.re - b.re, a.im - b.im);
}

XComplex operator-(const XComplex& a) { return XComplex(-a.re, -a.im); }

XComplex operator*(const XComplex& a, const XComplex& b) {
    return XComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

XComplex operator*(const XFloat& a, const XComplex& b) {
    return XComplex(a * b.re, a * b.im);
}

XComplex operator/(const XComplex& a, const XComplex& b) {
    XFloat den = b.re * b.re + b.im * b.im;
    return XComplex((a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den);
}

XComplex conj(const XComplex& a) { return XComplex(a.re, -a.im); }

XFloat abs(const XComplex& a) { return hypot(a.re, a.im); }

XFloat arg(const XComplex& a) { return atan2(a.im, a.re); }

XComplex cis(const XFloat& t) {
    XFloat s(t.precision()), c(t.precision());
    mpfr_sin_cos(s.raw(), c.raw(), t.raw(), MPFR_RNDN);
    return XComplex(std::move(c), std::move(s));
}

XComplex exp(const XComplex& a) {
    XFloat scale = exp(a.re);
    XComplex phase = cis(a.im);
    return XComplex(scale * phase.re, scale * phase.im);
}

XComplex log(const XComplex& a) { return XComplex(log(abs(a)), arg(a)); }

XComplex sqrt(const XComplex& a) {
    long prec = a.precision();
    if (a.im.is_zero() && a.re.sgn() >= 0) return XComplex(sqrt(a.re), XFloat::of(0L, prec));
    XFloat r = sqrt(abs(a));
    XFloat half_arg = arg(a) / XFloat::of(2L, prec);
    XComplex phase = cis(half_arg);
    return XComplex(r * phase.re, r * phase.im);
}

XComplex pow(const XComplex& base, const XFloat& expo) {
    return exp(XComplex(expo * log(abs(base)), expo * arg(base)));
}

XComplex pow(const XComplex& base, long expo) {
    long prec = base.precision();
    if (expo == 0) return XComplex::one(prec);
    bool inv = expo < 0;
    unsigned long e = inv ? static_cast<unsigned long>(-(expo + 1)) + 1UL : static_cast<unsigned long>(expo);
    XComplex acc = XComplex::one(prec);
    XComplex sq = base;
    while (e) {
        if (e & 1UL) acc = acc * sq;
        e >>= 1;
        if (e) sq = sq * sq;
    }
    if (inv) acc = XComplex::one(prec) / acc;
    return acc;
}

}  // namespace hilb
