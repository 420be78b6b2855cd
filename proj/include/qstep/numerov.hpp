#pragma once

#include "qstep/model.hpp"

namespace qstep {
namespace numerov {

// Grid for the right-to-left sweep. Both tails must be deep in their
// asymptotic regions: x_left < 0 < x_right, delta*|x_left| >= 15 and
// delta*x_right >= 15 (DomainError otherwise). default_config picks the
// smallest grid satisfying those plus a half-oscillation margin on the left,
// keeping the below-barrier growth e^{kappa x_right} under the 1e12 guard.
struct IntegrationConfig {
    double x_left;
    double x_right;
    double step = 1e-3;
};

IntegrationConfig default_config(const StepPotential& p, double energy);

// Integrates psi'' = (V - E) psi with the three-term Numerov recurrence,
// seeded at the two rightmost nodes with the outgoing transmitted asymptotic
// (e^{i ell x} above, e^{-kappa x} below, amplitude 1). Fourth-order accurate
// in the step. UnstableGrowthError if |psi| exceeds 1e12 anywhere.
WaveSample integrate(const StepPotential& p, double energy,
                     const IntegrationConfig& cfg);

// Recovers incident/reflected amplitudes from the left tail of an integrated
// sample by solving psi(x) = A e^{ikx} + B e^{-ikx} at two nodes a quarter
// wavelength apart. IllConditionedError when the 2x2 system determinant
// |sin k(x2-x1)| < 1e-3.
struct TailAmplitudes {
    Complex A;
    Complex B;
};
TailAmplitudes extract_amplitudes(const WaveSample& sample, double k);

struct CompareReport {
    double R_analytic = 0.0;
    double R_numeric = 0.0;
    double T_analytic = 0.0;
    double T_numeric = 0.0;
    // max |psi_numeric - psi_analytic| over the grid after rescaling the
    // numeric solution to incident amplitude 1.
    double max_psi_deviation = 0.0;
};

// Runs the integration and compares against the closed-form solution at the
// same energy. R_numeric = |B/A|^2; T_numeric = (ell/k)/|A|^2 above the step
// (the seed fixes the transmitted amplitude to 1), 0 below.
CompareReport compare(const StepPotential& p, double energy,
                      const IntegrationConfig& cfg);

}  // namespace numerov
}  // namespace qstep
