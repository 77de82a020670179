#pragma once

#include <gmpxx.h>

#include <string>

namespace hilb {

// Arbitrary-precision integer and reduced rational. GMP's C++ wrappers
// already provide canonical reduced form for mpq_class (after canonicalize)
// and value semantics for both.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& v) { return v.get_str(); }

// n! as an Int.
inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Binomial coefficient C(n, k).
inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Rational a/b from integer parts, canonicalized.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

} // namespace hilb
