#include "doctest.h"

#include "hilb/asym.hpp"
#include "hilb/errors.hpp"
#include "hilb/genfun.hpp"

#include <cmath>

using namespace hilb;

namespace {

Rat rat(long num, long den) { return make_rat(Int(num), Int(den)); }

double rel(const XFloat& got, const XFloat& want) {
    if (abs(want).is_zero()) return abs(got).to_double();
    return (abs(got - want) / abs(want)).to_double();
}

}  // namespace

TEST_CASE("bernoulli numbers match the classical table") {
    CHECK(asym::bernoulli(0) == rat(1, 1));
    CHECK(asym::bernoulli(1) == rat(-1, 2));
    CHECK(asym::bernoulli(2) == rat(1, 6));
    CHECK(asym::bernoulli(3) == rat(0, 1));
    CHECK(asym::bernoulli(4) == rat(-1, 30));
    CHECK(asym::bernoulli(6) == rat(1, 42));
    CHECK(asym::bernoulli(8) == rat(-1, 30));
    CHECK(asym::bernoulli(10) == rat(5, 66));
    CHECK(asym::bernoulli(12) == rat(-691, 2730));
    CHECK(asym::bernoulli(13) == rat(0, 1));
}

TEST_CASE("d coefficients: closed forms and the independent convolution route") {
    for (long m : {0L, 1L, 4L}) {
        for (long k : {1L, 24L}) {
            CHECK(asym::d_coeff(m, k, 1) == rat(1, 6));
            CHECK(asym::d_coeff(m, k, 2) == rat(1, 30) - rat(k, 144));
            CHECK(asym::d_coeff(m, k, 3) ==
                  rat(23, 2520) - rat(m * m, 60) - rat(k, 720) + rat(k * k, 6912));
        }
    }

    // The exponential twist of the kernel series, convolved by hand from the
    // independently derived per-order coefficients, must reproduce d exactly.
    for (long m : {0L, 2L}) {
        for (long k : {1L, 24L}) {
            for (long ell = 1; ell <= 7; ++ell) {
                Rat conv(0);
                Rat pw(1);
                for (long j = 0; j < ell; ++j) {
                    conv += pw * asym::g_m1_taylor(m, ell - j);
                    pw *= rat(-k, 24);
                    pw /= (j + 1);
                }
                CHECK(conv == asym::d_coeff(m, k, ell));
            }
        }
    }

    // the injectable-source variant agrees with the default source
    asym::BernoulliFn b = [](long j) { return asym::bernoulli(j); };
    CHECK(asym::d_coeff_with(b, 3, 24, 5) == asym::d_coeff(3, 24, 5));

    // and actually consumes what it is given
    asym::BernoulliFn wrong = [](long j) {
        return j == 2 ? rat(1, 7) : asym::bernoulli(j);
    };
    CHECK(asym::d_coeff_with(wrong, 0, 24, 1) != asym::d_coeff(0, 24, 1));
}

TEST_CASE("expansion lists gap-free coefficient prefixes") {
    auto e5 = asym::expansion(2, 24, 5);
    CHECK(e5.terms.size() == 5);
    for (long i = 0; i < 5; ++i) {
        CHECK(e5.terms[i].first == i + 1);
        CHECK(e5.terms[i].second == asym::d_coeff(2, 24, i + 1));
    }
    auto e6 = asym::expansion(2, 24, 6);
    for (long i = 0; i < 5; ++i) CHECK(e6.terms[i] == e5.terms[i]);
}

TEST_CASE("bessel evaluation against half-order closed forms") {
    const long P = 256;
    XFloat pi = XFloat::pi(P);
    for (double xv : {0.4, 2.3}) {
        XFloat x = XFloat::of(xv, P);
        XFloat pref = sqrt(XFloat::of(2L, P) / (pi * x));
        CHECK(rel(asym::bessel_I(XFloat::of(0.5, P), x, P), pref * sinh(x)) < 1e-40);
        CHECK(rel(asym::bessel_I(XFloat::of(-0.5, P), x, P), pref * cosh(x)) < 1e-40);
    }
    CHECK(asym::bessel_I(-13.0, 10.0, P) == asym::bessel_I(13.0, 10.0, P));
    CHECK_THROWS_AS(asym::bessel_I(XFloat::of(0L, P), XFloat::zero(P), P), Error);
}

TEST_CASE("bessel refuses to hand back uncertified digits") {
    // 40 requested bits leave nothing after the tail margin
    CHECK_THROWS_AS(asym::bessel_I(0.0, 1.0, 40), PrecisionLoss);
    CHECK_NOTHROW(asym::bessel_I(0.0, 1.0, 64));
}

TEST_CASE("width parameter beta") {
    const long P = 128;
    XFloat want = XFloat::pi(P) * sqrt(XFloat::of(2L, P) / XFloat::of(3L, P));
    CHECK(rel(asym::beta(24, 6, P), want) < 1e-30);
}

TEST_CASE("limit profile: value, parity, seam") {
    const long P = 192;
    XFloat beta = XFloat::of(0.55, P);

    CHECK(rel(asym::profile_P(XFloat::zero(P), beta), beta / XFloat::of(6L, P)) < 1e-50);
    CHECK(asym::profile_P(XFloat::of(4L, P), beta) == asym::profile_P(XFloat::of(-4L, P), beta));

    // the two internal branches agree where they meet
    XFloat x0 = XFloat::of(0.125, P);
    XFloat eps = pow(XFloat::of(2L, P), -80L);
    XFloat lo = asym::profile_P((x0 - eps) / beta, beta);
    XFloat hi = asym::profile_P((x0 + eps) / beta, beta);
    CHECK(rel(lo, hi) < 1e-20);

    // positive and decaying along the tail
    XFloat p1 = asym::profile_P(XFloat::of(5L, P), beta);
    XFloat p2 = asym::profile_P(XFloat::of(10L, P), beta);
    CHECK(p1.sgn() == 1);
    CHECK(p2.sgn() == 1);
    CHECK(p2 < p1);
}

TEST_CASE("main-term estimate tracks the exact coefficients") {
    const long P = 256;
    Int a100 = gen::a(0, 24, 100);
    XFloat ratio = asym::a_asymptotic(0, 24, 100, 3, P) / XFloat::of(a100, P);
    CHECK(ratio.to_double() > 1.005);
    CHECK(ratio.to_double() < 1.05);

    // more expansion terms means a better estimate at fixed n
    Int a200 = gen::a(0, 24, 200);
    double d1 = std::fabs(
        (asym::a_asymptotic(0, 24, 200, 1, P) / XFloat::of(a200, P)).to_double() - 1.0);
    double d3 = std::fabs(
        (asym::a_asymptotic(0, 24, 200, 3, P) / XFloat::of(a200, P)).to_double() - 1.0);
    CHECK(d3 < d1);
}

TEST_CASE("difference estimate: sign, antisymmetry, degenerate pairs") {
    const long P = 128;
    XFloat d02 = asym::diff_asymptotic(0, 2, 24, 50, P);
    CHECK(d02.sgn() == 1);  // central coefficients dominate
    CHECK(asym::diff_asymptotic(2, 0, 24, 50, P) == -d02);
    CHECK(asym::diff_asymptotic(3, -3, 24, 50, P).is_zero());

    // exact difference over estimate drifts toward 1 as n doubles
    double prev = 10.0;
    for (long n : {100L, 200L, 400L}) {
        Int d = gen::a(0, 24, n) - gen::a(2, 24, n);
        double dev = std::fabs(
            (XFloat::of(d, P) / asym::diff_asymptotic(0, 2, 24, n, P)).to_double() - 1.0);
        CHECK(dev < prev);
        prev = dev;
    }
}

TEST_CASE("colored-partition leading term shrinks toward the exact count") {
    const long P = 128;
    double prev = 1e9;
    for (long n : {100L, 200L, 400L}) {
        XFloat ratio = asym::pk_asymptotic(24, n, P) / XFloat::of(gen::p_colored(24, n), P);
        double dev = std::fabs(ratio.to_double() - 1.0);
        CHECK(dev < prev);
        prev = dev;
    }
}

TEST_CASE("profile rows carry the window flag") {
    auto in = asym::profile_ratio(1, 24, 100, 128);
    auto out = asym::profile_ratio(4, 24, 100, 128);
    CHECK(in.in_window);
    CHECK(!out.in_window);
    CHECK(in.m == 1);
    CHECK(rel(in.exact_ratio,
              XFloat::of(make_rat(gen::a(1, 24, 100), gen::p_colored(24, 100)), 128)) < 1e-25);
}

TEST_CASE("kernel moment quadrature reproduces bernoulli values") {
    const long P = 128;
    XFloat pi = XFloat::pi(P);
    for (long j = 1; j <= 3; ++j) {
        XFloat want = XFloat::of(asym::bernoulli(2 * j), P) / pi;
        if ((j + 1) % 2) want = -want;
        CHECK(rel(asym::bernoulli_integral(j, P), want) < 1e-8);
    }
}
