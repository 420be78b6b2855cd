#pragma once

#include <stdexcept>
#include <string>

namespace qstep {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition on an argument was violated (bad range, wrong regime for the
// operation, non-finite input, ...).
struct DomainError : Error { using Error::Error; };

// log_gamma evaluated at (or within 1e-12 of) a non-positive integer.
struct PoleError : Error { using Error::Error; };

// Hypergeometric c parameter at (or within 1e-12 of) zero or a negative integer.
struct InvalidCError : Error { using Error::Error; };

// Series did not meet the truncation criterion within the term cap.
struct NoConvergenceError : Error { using Error::Error; };

// a - b within 1e-10 of an integer while the 1/z continuation is required;
// the two-term connection formula degenerates there.
struct DegenerateParametersError : Error { using Error::Error; };

// Scattering energy <= 0.
struct NonPositiveEnergyError : Error { using Error::Error; };

// Potential parameters out of range (V0 <= 0 or delta <= 0).
struct DegenerateInputError : Error { using Error::Error; };

// Operation defined only above the step asked to run in the evanescent regime.
struct BelowRegimeError : Error { using Error::Error; };

// |x| beyond the e^{2 delta |x|} overflow guard with asymptotic substitution off.
struct OverflowGuardError : Error { using Error::Error; };

// Continuity-matching denominator vanished; the left basis solutions degenerate.
struct SingularWronskianError : Error { using Error::Error; };

// Integrated solution grew past 1e12 x the seed magnitude.
struct UnstableGrowthError : Error { using Error::Error; };

// Amplitude-extraction nodes too close to a half wavelength apart.
struct IllConditionedError : Error { using Error::Error; };

}  // namespace qstep
