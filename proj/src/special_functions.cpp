#include "qstep/special_functions.hpp"

#include <cmath>
#include <string>

namespace qstep {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kLogSqrtTwoPi = 0.91893853320467274178032973640562;
constexpr double kPi = 3.141592653589793238462643383279;

// Lanczos approximation, g = 7, 9 terms (Godfrey's coefficients). Relative
// error of exp(log_gamma) stays below ~1e-14 over the half-plane Re z >= 0.5.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool near_nonpositive_integer(Complex z, double tol) {
    const double n = std::round(z.real());
    if (n > 0.5) return false;
    return std::abs(z - Complex(n, 0.0)) <= tol;
}

// log sin(pi z) on the branch that makes the reflection formula agree with
// the principal log Gamma. The exponentially large half of sin is factored
// out so nothing overflows for large |Im z|.
Complex log_sin_pi(Complex z) {
    const Complex ipz = Complex(0.0, kPi) * z;
    if (z.imag() > 0.0) {
        return -ipz + std::log((std::exp(2.0 * ipz) - 1.0) / Complex(0.0, 2.0));
    }
    return ipz + std::log((1.0 - std::exp(-2.0 * ipz)) / Complex(0.0, 2.0));
}

Complex log_gamma_right_half(Complex z) {
    // shifted so the series is evaluated at z-1
    const Complex zz = z - 1.0;
    const Complex t = zz + 7.5;
    Complex acc(kLanczos[0], 0.0);
    for (int i = 1; i < 9; ++i) {
        acc += kLanczos[i] / (zz + static_cast<double>(i));
    }
    return kLogSqrtTwoPi + (zz + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

Complex log_gamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("log_gamma: non-finite argument");
    }
    if (near_nonpositive_integer(z, 1e-12)) {
        throw PoleError("log_gamma: argument within 1e-12 of a pole at " +
                        std::to_string(std::lround(z.real())));
    }
    if (z.real() >= 0.5) {
        return log_gamma_right_half(z);
    }
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
    return std::log(kPi) - log_sin_pi(z) - log_gamma_right_half(1.0 - z);
}

double gamma_abs_sq_one_plus_i_eta(double eta) {
    if (!std::isfinite(eta)) {
        throw DomainError("gamma_abs_sq_one_plus_i_eta: non-finite argument");
    }
    const double x = kPi * std::abs(eta);
    if (x == 0.0) return 1.0;
    // past this point sinh overflows; x/sinh x == 2x e^{-x}/(1 - e^{-2x})
    if (x > 700.0) return 2.0 * x * std::exp(-x);
    return x / std::sinh(x);
}

Complex hyp2f1_series(Complex a, Complex b, Complex c, Complex z) {
    if (near_nonpositive_integer(c, 1e-12)) {
        throw InvalidCError("hyp2f1: c within 1e-12 of a non-positive integer");
    }
    if (std::abs(z) > 0.75) {
        throw DomainError("hyp2f1_series: |z| > 0.75, tail not geometric");
    }
    Complex term(1.0, 0.0);
    Complex sum(1.0, 0.0);
    for (int n = 0; n < 10000; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) return sum;
    }
    throw NoConvergenceError("hyp2f1_series: 10000 terms without convergence");
}

namespace {

// One side of the 1/z connection. The Gamma prefactor is assembled in log
// space; a Gamma pole in the denominator kills the whole term. The inner
// function goes back through the dispatcher: for z just below -1 its argument
// 1/z falls outside the series disk and needs the Pfaff map itself.
Complex connection_term(Complex num, Complex den1, Complex den2, Complex c,
                        Complex exponent, Complex sa, Complex sb, Complex sc,
                        Complex w, double log_minus_z) {
    if (near_nonpositive_integer(den1, 1e-12) ||
        near_nonpositive_integer(den2, 1e-12)) {
        return Complex(0.0, 0.0);
    }
    const Complex log_coeff = log_gamma(c) + log_gamma(num) - log_gamma(den1) -
                              log_gamma(den2) - exponent * log_minus_z;
    return std::exp(log_coeff) * hyp2f1(sa, sb, sc, w);
}

}  // namespace

Complex hyp2f1(Complex a, Complex b, Complex c, Complex z) {
    if (z.imag() != 0.0 || z.real() > 0.0) {
        throw DomainError("hyp2f1: argument must lie on the real ray z <= 0");
    }
    if (near_nonpositive_integer(c, 1e-12)) {
        throw InvalidCError("hyp2f1: c within 1e-12 of a non-positive integer");
    }
    const double x = z.real();
    if (x >= -0.5) {
        return hyp2f1_series(a, b, c, z);
    }
    if (x >= -1.0) {
        // Pfaff, w = z/(z-1) in (0, 1/2]
        const Complex w = z / (z - 1.0);
        return std::pow(Complex(1.0 - x, 0.0), -a) *
               hyp2f1_series(a, c - b, c, w);
    }
    // analytic continuation through 1/z; the two-term formula needs a - b
    // away from the integers
    const Complex d = a - b;
    if (std::abs(d - Complex(std::round(d.real()), 0.0)) <= 1e-10) {
        throw DegenerateParametersError(
            "hyp2f1: a - b within 1e-10 of an integer on the 1/z branch");
    }
    const Complex w = 1.0 / z;
    const double log_minus_z = std::log(-x);
    const Complex t1 = connection_term(b - a, b, c - a, c, a, a, 1.0 + a - c,
                                       1.0 + a - b, w, log_minus_z);
    const Complex t2 = connection_term(a - b, a, c - b, c, b, b, 1.0 + b - c,
                                       1.0 + b - a, w, log_minus_z);
    return t1 + t2;
}

Complex hyp2f1_deriv(Complex a, Complex b, Complex c, Complex z) {
    return a * b / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z);
}

}  // namespace qstep
