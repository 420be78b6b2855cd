#pragma once

#include <vector>

#include "qstep/special_functions.hpp"

namespace qstep {

// V(x) = (V0/2)(1 + tanh(delta x)): rises from 0 to V0 around x = 0 over a
// width ~1/delta. Units with hbar^2/2m = 1, so V0 and the energy are the
// scaled 2m V0 / hbar^2 and 2m E / hbar^2.
struct StepPotential {
    double v0 = 1.0;
    double delta = 1.0;
};

double potential_value(const StepPotential& p, double x);

enum class Regime { Above, Below };

// Wave numbers of the scattering problem at a given energy. k = sqrt(E) on
// the incoming side; above the step ell = sqrt(E - V0) on the far side, below
// it kappa = sqrt(V0 - E) is the decay constant. mu = k/2delta and
// nu = ell/2delta are the same numbers in units of the step width; E = V0 is
// classified Above with nu = 0. Fields of the other regime are left 0.
struct Kinematics {
    double energy = 0.0;
    Regime regime = Regime::Above;
    double k = 0.0;
    double mu = 0.0;
    double ell = 0.0;
    double nu = 0.0;
    double kappa = 0.0;
};

Kinematics kinematics(const StepPotential& p, double energy);

// Parameters of the hypergeometric form psi = y^alpha (1-y)^beta F(a,b;c;y),
// y = -e^{-2 delta x}, describing the transmitted-side solution. beta = 1
// always; alpha = -i nu above the step and +kappa/2delta below it (the
// decaying branch). Satisfies c = 1 + 2 alpha, a + b = 2 + 2 alpha,
// a b = 1 + 2 alpha + V0/4 delta^2.
struct HypMapping {
    Complex alpha;
    double beta = 1.0;
    Complex a, b, c;
};

HypMapping hyp_mapping(const Kinematics& kin, const StepPotential& p);

// One scanned wavefunction: psi, |psi|^2 and the probability current
// Im(conj(psi) psi') on a shared grid.
struct WaveSample {
    std::vector<double> x;
    std::vector<Complex> psi;
    std::vector<double> density;
    std::vector<double> current;
};

}  // namespace qstep
