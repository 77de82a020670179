#pragma once

#include "hilb/bigint.hpp"

#include <string>
#include <vector>

namespace hilb {

// Dense Laurent polynomial in zeta with Int coefficients.
//
// Canonical form: the zero polynomial stores an empty coefficient vector and
// lowest exponent 0; any other value stores a window whose first and last
// entries are nonzero. All public operations return canonical values, so
// operator== is plain member comparison.
class LaurentPoly {
public:
    LaurentPoly() = default;

    // Takes a raw window (coeffs[i] is the coefficient of zeta^(lo+i)) and
    // trims it to canonical form.
    LaurentPoly(long lo, std::vector<Int> coeffs);

    static LaurentPoly constant(Int c);
    static LaurentPoly monomial(Int c, long e);

    bool is_zero() const { return c_.empty(); }
    // Lowest/highest stored exponent; meaningful only when !is_zero().
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
    // Number of stored coefficients.
    long width() const { return static_cast<long>(c_.size()); }

    // Coefficient of zeta^e; zero outside the stored window.
    const Int& at(long e) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        a += b;
        return a;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
        a -= b;
        return a;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& o) const = default;

    // this += c * zeta^shift * src. Grows the stored window when needed; when
    // the window already covers the target range no allocation of new slots
    // happens, which keeps tight loops cheap.
    void add_scaled_shifted(const LaurentPoly& src, const Int& c, long shift);

    // Substitution zeta -> 1/zeta.
    LaurentPoly reversed() const;
    bool is_symmetric() const;

    // True when the value is a single monomial with coefficient +1 or -1.
    bool is_unit_monomial() const;

    // Value at zeta = 1 (sum of all coefficients).
    Int sum() const;

    // Pre-sizes the window to [lo, hi] without trimming; used by builders
    // that fill coefficients in place.
    void reserve_window(long lo, long hi);
    // Restores canonical form after in-place building.
    void canonicalize() { trim(); }

    // Human-readable rendering like "2*z^-1 + 20 + 2*z", for diagnostics.
    std::string str() const;

private:
    long lo_ = 0;
    std::vector<Int> c_;

    void trim();
    void ensure_window(long lo, long hi);

    friend void add_mul_into(LaurentPoly& acc, const LaurentPoly& a,
                             const LaurentPoly& b);
};

// acc += a * b. The accumulator window is grown once up front; per-term work
// is a single mpz_addmul into an existing slot.
void add_mul_into(LaurentPoly& acc, const LaurentPoly& a, const LaurentPoly& b);

} // namespace hilb
