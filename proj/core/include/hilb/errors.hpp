#pragma once

#include <stdexcept>
#include <string>

namespace hilb {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// invert() requires the q^0 coefficient to be a single monomial with
// coefficient +1 or -1.
struct NonUnitConstantTerm : Error {
    using Error::Error;
};

// pochhammer() requires the q-shift of the first factor to be >= 1 so the
// product stays a power series in q.
struct InvalidShift : Error {
    using Error::Error;
};

// A coefficient beyond the truncation order of a series was requested.
struct OrderExceeded : Error {
    using Error::Error;
};

// A floating-point evaluation lost so much precision to cancellation that
// fewer than the guaranteed number of bits survive.
struct PrecisionLoss : Error {
    using Error::Error;
};

// A product evaluation was requested too close to |q| = 1 for the factor
// cutoff to reach the target accuracy.
struct ConvergenceTooSlow : Error {
    using Error::Error;
};

// A sample point landed close enough to a zero of the theta function that
// 1/theta exceeds the precision budget.
struct PoleProximity : Error {
    using Error::Error;
};

// Doubling the quadrature sample count moved the result by more than the
// requested tolerance.
struct QuadratureUnstable : Error {
    using Error::Error;
};

} // namespace hilb
