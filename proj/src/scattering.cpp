#include "qstep/scattering.hpp"

#include <cmath>

namespace qstep {

namespace {

const Complex kI(0.0, 1.0);
constexpr double kPi = 3.141592653589793238462643383279;

Complex lg_scaled(Complex z, double perturb) {
    return (1.0 + perturb) * log_gamma(z);
}

// Connection-coefficient ratios of the transmitted solution. The pieces are
// combined in log space first; the individual Gamma factors overflow already
// for moderate mu while the ratios stay O(1).
AmplitudeSet amplitudes_from_mapping(const HypMapping& m, double perturb) {
    AmplitudeSet amp;
    amp.B = std::exp(lg_scaled(m.a - m.b, perturb) + lg_scaled(m.b, perturb) +
                     lg_scaled(m.c - m.a, perturb) -
                     lg_scaled(m.b - m.a, perturb) - lg_scaled(m.a, perturb) -
                     lg_scaled(m.c - m.b, perturb));
    amp.D = std::exp(lg_scaled(m.b, perturb) + lg_scaled(m.c - m.a, perturb) -
                     lg_scaled(m.c, perturb) - lg_scaled(m.b - m.a, perturb));
    return amp;
}

// The above-step mapping depends on mu and nu only, so it can be rebuilt
// from the kinematics when no potential object is at hand.
HypMapping above_mapping(const Kinematics& kin) {
    HypMapping m;
    m.alpha = -kI * kin.nu;
    m.a = 1.0 + kI * (kin.mu - kin.nu);
    m.b = 1.0 - kI * (kin.mu + kin.nu);
    m.c = 1.0 + 2.0 * m.alpha;
    return m;
}

}  // namespace

AmplitudeSet amplitudes(const Kinematics& kin, const StepPotential& p) {
    return amplitudes_from_mapping(hyp_mapping(kin, p), 0.0);
}

AmplitudeSet amplitudes_perturbed(const Kinematics& kin, const StepPotential& p,
                                  double perturb) {
    return amplitudes_from_mapping(hyp_mapping(kin, p), perturb);
}

Coefficients coefficients(const Kinematics& kin) {
    Coefficients co;
    if (kin.regime == Regime::Below) {
        co.R = 1.0;
        co.T = 0.0;
        return co;
    }
    // sinh-ratio forms rewritten in P = e^{-2 pi mu}, Q = e^{-2 pi nu}; both
    // lie in (0, 1], nothing overflows, and the expressions are symmetric
    // under mu <-> nu exactly as evaluated. nu = 0 collapses to R = 1, T = 0
    // with no special case.
    const double P = std::exp(-2.0 * kPi * kin.mu);
    const double Q = std::exp(-2.0 * kPi * kin.nu);
    const double denom = 1.0 - P * Q;
    const double r = (Q - P) / denom;
    co.R = r * r;
    co.T = (1.0 - P * P) * (1.0 - Q * Q) / (denom * denom);
    return co;
}

Coefficients coefficients_gamma_form(const Kinematics& kin, double perturb) {
    if (kin.regime == Regime::Below) {
        throw BelowRegimeError(
            "coefficients_gamma_form: Gamma-modulus form needs E >= V0");
    }
    const AmplitudeSet amp = amplitudes_from_mapping(above_mapping(kin), perturb);
    Coefficients co;
    co.R = std::norm(amp.B);
    co.T = kin.nu / kin.mu * std::norm(amp.D);
    return co;
}

Coefficients step_limit_coefficients(const Kinematics& kin) {
    Coefficients co;
    if (kin.regime == Regime::Below) {
        co.R = 1.0;
        co.T = 0.0;
        return co;
    }
    const double s = kin.k + kin.ell;
    const double d = kin.k - kin.ell;
    co.R = d * d / (s * s);
    co.T = 4.0 * kin.k * kin.ell / (s * s);
    return co;
}

AmplitudeSet step_limit_amplitudes(const Kinematics& kin) {
    AmplitudeSet amp;
    if (kin.regime == Regime::Below) {
        const Complex denom(kin.k, kin.kappa);
        amp.B = Complex(kin.k, -kin.kappa) / denom;
        amp.D = 2.0 * kin.k / denom;
        return amp;
    }
    amp.B = Complex((kin.k - kin.ell) / (kin.k + kin.ell), 0.0);
    amp.D = Complex(2.0 * kin.k / (kin.k + kin.ell), 0.0);
    return amp;
}

AmplitudeSet match_below(const StepPotential& p, double energy) {
    const Kinematics kin = kinematics(p, energy);
    const HypMapping m = hyp_mapping(kin, p);
    const double delta = p.delta;
    const double k = kin.k;
    const Complex z(-1.0, 0.0);

    // psi and psi' at x = 0 for the decaying right-side solution and the two
    // left-side basis solutions; all hypergeometric values sit at z = -1.
    const Complex F0 = hyp2f1(m.a, m.b, m.c, z);
    const Complex F0d = hyp2f1_deriv(m.a, m.b, m.c, z);
    const Complex F1 = hyp2f1(m.a, 1.0 + m.a - m.c, 1.0 + m.a - m.b, z);
    const Complex F1d = hyp2f1_deriv(m.a, 1.0 + m.a - m.c, 1.0 + m.a - m.b, z);
    const Complex F2 = hyp2f1(m.b, 1.0 + m.b - m.c, 1.0 + m.b - m.a, z);
    const Complex F2d = hyp2f1_deriv(m.b, 1.0 + m.b - m.c, 1.0 + m.b - m.a, z);

    const Complex psi_t = 2.0 * F0;
    const Complex dpsi_t = -4.0 * delta * m.alpha * F0 - 2.0 * delta * F0 +
                           4.0 * delta * F0d;
    const Complex psi_inc = 2.0 * F1;
    const Complex dpsi_inc = 2.0 * kI * k * F1 + 2.0 * delta * F1 -
                             4.0 * delta * F1d;
    const Complex psi_ref = 2.0 * F2;
    const Complex dpsi_ref = -2.0 * kI * k * F2 + 2.0 * delta * F2 -
                             4.0 * delta * F2d;

    const Complex wronskian = psi_t * dpsi_ref - dpsi_t * psi_ref;
    if (std::abs(wronskian) < 1e-14) {
        throw SingularWronskianError(
            "match_below: matching system denominator below 1e-14");
    }
    AmplitudeSet amp;
    amp.D = (psi_inc * dpsi_ref - dpsi_inc * psi_ref) / wronskian;
    amp.B = (psi_t * dpsi_inc - dpsi_t * psi_inc) / (-wronskian);
    return amp;
}

ScatteringState::ScatteringState(const StepPotential& p, double energy)
    : p_(p),
      kin_(kinematics(p, energy)),
      map_(hyp_mapping(kin_, p)),
      amp_(amplitudes_from_mapping(map_, 0.0)),
      guard_x_(50.0 / p.delta) {}

ScatteringState::PsiDeriv ScatteringState::transmitted_deriv(double x) const {
    const double delta = p_.delta;
    const Complex y(-std::exp(-2.0 * delta * x), 0.0);
    const Complex F = hyp2f1(map_.a, map_.b, map_.c, y);
    const Complex Fd = hyp2f1_deriv(map_.a, map_.b, map_.c, y);
    const Complex pref = amp_.D * std::exp(-2.0 * delta * map_.alpha * x);
    const Complex one_minus_y = 1.0 - y;
    PsiDeriv out;
    out.psi = pref * one_minus_y * F;
    out.dpsi = pref * (-2.0 * delta * map_.alpha * one_minus_y * F +
                       2.0 * delta * y * F - 2.0 * delta * y * one_minus_y * Fd);
    return out;
}

ScatteringState::PsiDeriv ScatteringState::left_deriv(double x) const {
    const double delta = p_.delta;
    const double k = kin_.k;
    const Complex z(-std::exp(2.0 * delta * x), 0.0);
    const Complex a1 = map_.a;
    const Complex b1 = 1.0 + map_.a - map_.c;
    const Complex c1 = 1.0 + map_.a - map_.b;
    const Complex a2 = map_.b;
    const Complex b2 = 1.0 + map_.b - map_.c;
    const Complex c2 = 1.0 + map_.b - map_.a;
    const Complex F1 = hyp2f1(a1, b1, c1, z);
    const Complex F1d = hyp2f1_deriv(a1, b1, c1, z);
    const Complex F2 = hyp2f1(a2, b2, c2, z);
    const Complex F2d = hyp2f1_deriv(a2, b2, c2, z);
    const Complex one_minus_z = 1.0 - z;
    const Complex ep = std::exp(kI * k * x);
    const Complex em = std::exp(-kI * k * x);
    PsiDeriv out;
    out.psi = ep * one_minus_z * F1 + amp_.B * em * one_minus_z * F2;
    out.dpsi = ep * (kI * k * one_minus_z * F1 - 2.0 * delta * z * F1 +
                     2.0 * delta * z * one_minus_z * F1d) +
               amp_.B * em * (-kI * k * one_minus_z * F2 - 2.0 * delta * z * F2 +
                              2.0 * delta * z * one_minus_z * F2d);
    return out;
}

ScatteringState::PsiDeriv ScatteringState::psi_deriv(double x) const {
    if (!std::isfinite(x)) throw DomainError("psi: non-finite position");
    if (std::abs(x) > guard_x_) {
        if (!substitute_asymptotics_) {
            throw OverflowGuardError(
                "psi: |x| beyond 50/delta with asymptotic substitution off");
        }
        PsiDeriv out;
        if (x > 0.0) {
            if (kin_.regime == Regime::Above) {
                // transmitted plane wave; exact to < 1e-17 this far out
                const Complex ph = std::exp(kI * kin_.ell * x);
                out.psi = amp_.D * ph;
                out.dpsi = kI * kin_.ell * amp_.D * ph;
            } else {
                const double decay = std::exp(-kin_.kappa * x);
                out.psi = amp_.D * decay;
                out.dpsi = -kin_.kappa * amp_.D * decay;
            }
        } else {
            const Complex ep = std::exp(kI * kin_.k * x);
            const Complex em = std::exp(-kI * kin_.k * x);
            out.psi = ep + amp_.B * em;
            out.dpsi = kI * kin_.k * (ep - amp_.B * em);
        }
        return out;
    }
    return x >= 0.0 ? transmitted_deriv(x) : left_deriv(x);
}

Complex ScatteringState::psi(double x) const { return psi_deriv(x).psi; }

Complex ScatteringState::psi_transmitted_form(double x) const {
    if (!std::isfinite(x)) throw DomainError("psi: non-finite position");
    if (std::abs(x) > guard_x_) {
        throw OverflowGuardError(
            "psi_transmitted_form: |x| beyond the 50/delta guard");
    }
    return transmitted_deriv(x).psi;
}

Complex ScatteringState::psi_left_form(double x) const {
    if (!std::isfinite(x)) throw DomainError("psi: non-finite position");
    if (std::abs(x) > guard_x_) {
        throw OverflowGuardError("psi_left_form: |x| beyond the 50/delta guard");
    }
    return left_deriv(x).psi;
}

WaveSample ScatteringState::scan(double x_min, double x_max, int samples) const {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || x_min >= x_max) {
        throw DomainError("scan: need finite x_min < x_max");
    }
    if (samples < 2) throw DomainError("scan: need at least 2 samples");
    WaveSample out;
    out.x.resize(samples);
    out.psi.resize(samples);
    out.density.resize(samples);
    out.current.resize(samples);
    const double h = (x_max - x_min) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        const double x = x_min + h * i;
        const PsiDeriv pd = psi_deriv(x);
        out.x[i] = x;
        out.psi[i] = pd.psi;
        out.density[i] = std::norm(pd.psi);
        out.current[i] = std::imag(std::conj(pd.psi) * pd.dpsi);
    }
    return out;
}

Complex wavefunction(const StepPotential& p, double energy, double x) {
    return ScatteringState(p, energy).psi(x);
}

WaveSample density_scan(const StepPotential& p, double energy, double x_min,
                        double x_max, int samples) {
    return ScatteringState(p, energy).scan(x_min, x_max, samples);
}

}  // namespace qstep
