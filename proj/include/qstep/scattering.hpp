#pragma once

#include "qstep/model.hpp"

namespace qstep {

// Plane-wave amplitudes of the scattering solution, normalized to incident
// amplitude A = 1. Above the step B is the reflected and D the transmitted
// amplitude; below it D multiplies the decaying solution and |B| = 1.
struct AmplitudeSet {
    Complex A{1.0, 0.0};
    Complex B;
    Complex D;
};

// Amplitude ratios from the 1/z connection coefficients of the transmitted
// hypergeometric solution, evaluated as log-Gamma sums:
//   B/A = G(a-b) G(b) G(c-a) / [ G(b-a) G(a) G(c-b) ]
//   D/A = G(b) G(c-a) / [ G(c) G(b-a) ]
// with (a,b,c) the regime's mapping. In both regimes this matches the x = 0
// continuity conditions of match_below to rounding.
AmplitudeSet amplitudes(const Kinematics& kin, const StepPotential& p);

// Fault-injection variant for the validation suite: every log-Gamma value is
// scaled by (1 + perturb) before exponentiation. perturb = 0 is amplitudes().
AmplitudeSet amplitudes_perturbed(const Kinematics& kin, const StepPotential& p,
                                  double perturb);

struct Coefficients {
    double R = 0.0;
    double T = 0.0;
};

// Closed-form reflection/transmission,
//   R = sinh^2 pi(mu-nu) / sinh^2 pi(mu+nu),
//   T = sinh(2 pi mu) sinh(2 pi nu) / sinh^2 pi(mu+nu),
// evaluated through exponential differences so no argument overflows and
// R + T = 1 holds to rounding; exactly R = 1, T = 0 at and below E = V0.
Coefficients coefficients(const Kinematics& kin);

// The same numbers from the Gamma-ratio amplitudes, R = |B/A|^2 and
// T = (nu/mu)|D/A|^2. Above the step only (BelowRegimeError otherwise);
// agrees with coefficients() to ~1e-13 relative. perturb as in
// amplitudes_perturbed.
Coefficients coefficients_gamma_form(const Kinematics& kin, double perturb = 0.0);

// Sharp-step (delta -> infinity) limits: R = (k-ell)^2/(k+ell)^2,
// T = 4 k ell/(k+ell)^2 above; R = 1, T = 0 below.
Coefficients step_limit_coefficients(const Kinematics& kin);

// Sharp-step amplitudes: B = (k-ell)/(k+ell), D = 2k/(k+ell) above;
// B = (k - i kappa)/(k + i kappa), D = 2k/(k + i kappa) below.
AmplitudeSet step_limit_amplitudes(const Kinematics& kin);

// Below-barrier amplitudes from continuity of psi and psi' at x = 0, solving
// the 2x2 system between the decaying right-side solution and the two
// left-side basis solutions (everything evaluated at z = -1).
// SingularWronskianError if the basis Wronskian denominator is below 1e-14.
AmplitudeSet match_below(const StepPotential& p, double energy);

// Scattering state at one energy: caches kinematics, mapping and amplitudes,
// then evaluates psi piecewise from the representation native to each side
// (transmitted form for x >= 0, incident + reflected for x < 0; both meet at
// x = 0 to ~1e-9). Beyond |x| > 50/delta the plane-wave / decaying
// asymptotics are substituted (their residual is < 1e-17 there); with
// substitution disabled such x throws OverflowGuardError.
class ScatteringState {
  public:
    ScatteringState(const StepPotential& p, double energy);

    Complex psi(double x) const;

    struct PsiDeriv {
        Complex psi;
        Complex dpsi;
    };
    PsiDeriv psi_deriv(double x) const;

    // Single-representation evaluations, both defined for any |x| within the
    // overflow guard: the transmitted form crosses x < 0 through the 1/z
    // connection inside hyp2f1, the left form through the direct series.
    Complex psi_transmitted_form(double x) const;
    Complex psi_left_form(double x) const;

    WaveSample scan(double x_min, double x_max, int samples) const;

    void set_asymptotic_substitution(bool on) { substitute_asymptotics_ = on; }

    const Kinematics& kin() const { return kin_; }
    const HypMapping& mapping() const { return map_; }
    const AmplitudeSet& amplitude_set() const { return amp_; }

  private:
    PsiDeriv transmitted_deriv(double x) const;
    PsiDeriv left_deriv(double x) const;

    StepPotential p_;
    Kinematics kin_;
    HypMapping map_;
    AmplitudeSet amp_;
    double guard_x_;
    bool substitute_asymptotics_ = true;
};

// psi(x) with incident amplitude 1 (one-shot convenience wrapper).
Complex wavefunction(const StepPotential& p, double energy, double x);

// psi and |psi|^2 and current on a uniform grid of `samples` points.
WaveSample density_scan(const StepPotential& p, double energy, double x_min,
                        double x_max, int samples);

}  // namespace qstep
