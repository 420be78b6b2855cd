#include "qstep/model.hpp"

#include <cmath>

namespace qstep {

namespace {

void validate(const StepPotential& p) {
    if (!std::isfinite(p.v0) || !std::isfinite(p.delta)) {
        throw DegenerateInputError("potential parameters must be finite");
    }
    if (p.v0 <= 0.0 || p.delta <= 0.0) {
        throw DegenerateInputError("potential needs v0 > 0 and delta > 0");
    }
}

}  // namespace

double potential_value(const StepPotential& p, double x) {
    validate(p);
    return 0.5 * p.v0 * (1.0 + std::tanh(p.delta * x));
}

Kinematics kinematics(const StepPotential& p, double energy) {
    validate(p);
    if (!std::isfinite(energy)) {
        throw DomainError("kinematics: energy must be finite");
    }
    if (energy <= 0.0) {
        throw NonPositiveEnergyError("kinematics: energy must be positive");
    }
    Kinematics kin;
    kin.energy = energy;
    kin.k = std::sqrt(energy);
    kin.mu = kin.k / (2.0 * p.delta);
    if (energy >= p.v0) {
        kin.regime = Regime::Above;
        kin.ell = std::sqrt(energy - p.v0);
        kin.nu = kin.ell / (2.0 * p.delta);
    } else {
        kin.regime = Regime::Below;
        kin.kappa = std::sqrt(p.v0 - energy);
    }
    return kin;
}

HypMapping hyp_mapping(const Kinematics& kin, const StepPotential& p) {
    validate(p);
    HypMapping m;
    const Complex i(0.0, 1.0);
    if (kin.regime == Regime::Above) {
        m.alpha = -i * kin.nu;
        m.a = 1.0 + i * (kin.mu - kin.nu);
        m.b = 1.0 - i * (kin.mu + kin.nu);
    } else {
        // exponent of the decaying solution on the high side
        const double q = kin.kappa / (2.0 * p.delta);
        m.alpha = Complex(q, 0.0);
        m.a = Complex(1.0 + q, kin.mu);
        m.b = Complex(1.0 + q, -kin.mu);
    }
    m.c = 1.0 + 2.0 * m.alpha;
    return m;
}

}  // namespace qstep
