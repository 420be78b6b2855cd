#pragma once

#include <complex>

#include "qstep/errors.hpp"

namespace qstep {

using Complex = std::complex<double>;

// Principal-branch log Gamma, Lanczos g=7 with the reflection formula for
// Re z < 0.5. exp(log_gamma(z)) == Gamma(z); the recurrence
// log_gamma(1+z) = log_gamma(z) + log z holds in the right half-plane.
// Throws PoleError within 1e-12 of a non-positive integer.
Complex log_gamma(Complex z);

// |Gamma(1 + i eta)|^2 = pi eta / sinh(pi eta), continued to 1 at eta = 0.
// Stable for any real eta (no intermediate sinh overflow).
double gamma_abs_sq_one_plus_i_eta(double eta);

// Gauss series sum_n (a)_n (b)_n / ((c)_n n!) z^n by the term ratio
// recurrence, truncated when |t_n| < 1e-16 |sum|. Requires |z| <= 0.75 so the
// tail stays geometric; throws NoConvergenceError at 10000 terms.
Complex hyp2f1_series(Complex a, Complex b, Complex c, Complex z);

// 2F1 on the real ray z <= 0, the only argument range the scattering problem
// produces. Dispatch: direct series for z >= -0.5, the Pfaff map
// w = z/(z-1) for z in [-1, -0.5), and the two-term 1/z connection for
// z < -1 (DegenerateParametersError when a-b sits within 1e-10 of an
// integer there).
Complex hyp2f1(Complex a, Complex b, Complex c, Complex z);

// d/dz 2F1(a,b;c;z) = (a b / c) 2F1(a+1,b+1;c+1;z), same domain as hyp2f1.
Complex hyp2f1_deriv(Complex a, Complex b, Complex c, Complex z);

}  // namespace qstep
