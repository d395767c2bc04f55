#pragma once

#include <stdexcept>
#include <string>

namespace masschain {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or inconsistent user input (config file, parameter ranges).
struct ConfigError : Error {
    using Error::Error;
};

// A requested computation requires a stable chain and the device fails
// the stability condition.
struct InstabilityError : Error {
    using Error::Error;
};

// Hypotheses for the uniform bound are not met
// (no spring term, Y1(0) = 0, or h(jw) touches [-4, 0)).
struct HypothesesError : Error {
    using Error::Error;
};

// Numerical failures: overflow, singular systems, vanishing denominators.
struct NumericError : Error {
    using Error::Error;
};

struct OverflowError : NumericError {
    using NumericError::NumericError;
};

// h at (or numerically near) an eigenvalue of H_N: d_N(h) ~ 0.
struct SingularSystemError : NumericError {
    using NumericError::NumericError;
};

// Iteration denominator F + d_i vanished (h near a pole of the recursion).
struct DivisionBreakdownError : NumericError {
    using NumericError::NumericError;
};

// 1 + zeta^(2N+1) vanished in the closed form (only possible on the cut).
struct DenominatorVanishesError : NumericError {
    using NumericError::NumericError;
};

// Evaluation at a pole of the admittance/impedance description.
struct PoleError : NumericError {
    using NumericError::NumericError;
};

// Ellipse bound requested on the cut (semi-major axis A <= 2).
struct OnCutError : NumericError {
    using NumericError::NumericError;
};

// Low-frequency bound with a non-positive exponential argument.
struct DegenerateConstantsError : NumericError {
    using NumericError::NumericError;
};

} // namespace masschain
