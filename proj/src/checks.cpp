#include "qstep/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qstep/numerov.hpp"
#include "qstep/scattering.hpp"

namespace qstep {
namespace checks {

namespace {

std::string param_tag(double delta, double ratio) {
    std::ostringstream os;
    os << "delta=" << delta << " ratio=" << ratio;
    return os.str();
}

// Tracks the worst deviation seen and where it happened.
struct Worst {
    double value = 0.0;
    std::string where;

    void feed(double v, const std::string& where_tag) {
        if (where.empty() || v > value) {
            value = v;
            where = where_tag;
        }
    }
};

CheckResult finish(const std::string& name, double tol, const Worst& w) {
    CheckResult r;
    r.name = name;
    r.tolerance = tol;
    r.measured = w.value;
    r.pass = w.value <= tol;
    r.detail = w.where;
    return r;
}

constexpr double kAboveDeltas[] = {0.5, 1.0, 2.0, 10.0};
constexpr double kAboveRatios[] = {1.01, 1.1, 1.5, 2.0, 3.0, 5.0};

CheckResult check_anchor_log2() {
    // F(1,1;2;-1) = log 2, reached through the z = -1 Pfaff path
    const double v =
        hyp2f1(Complex(1, 0), Complex(1, 0), Complex(2, 0), Complex(-1, 0))
            .real();
    Worst w;
    w.feed(std::abs(v - 0.6931471805599453), "F(1,1;2;-1)");
    return finish("series_log2_anchor", 1e-12, w);
}

CheckResult check_anchor_binomial() {
    // F(a,b;b;z) = (1-z)^{-a} with z = -3 exercises the far continuation,
    // including the vanishing of the term with a Gamma pole underneath
    const double v = hyp2f1(Complex(0.5, 0), Complex(0.25, 0), Complex(0.25, 0),
                            Complex(-3, 0))
                         .real();
    Worst w;
    w.feed(std::abs(v - 0.5), "F(1/2,1/4;1/4;-3)");
    return finish("binomial_anchor", 1e-10, w);
}

CheckResult check_anchor_gamma_magnitude() {
    Worst w;
    w.feed(std::abs(gamma_abs_sq_one_plus_i_eta(1.0) - 0.27202905498213314),
           "eta=1");
    w.feed(std::abs(gamma_abs_sq_one_plus_i_eta(0.0) - 1.0), "eta=0");
    return finish("gamma_magnitude_anchor", 1e-12, w);
}

CheckResult check_unitarity_closed_form() {
    Worst w;
    for (double d : kAboveDeltas) {
        for (double r : kAboveRatios) {
            const StepPotential p{1.0, d};
            const Coefficients co = coefficients(kinematics(p, r));
            w.feed(std::abs(co.R + co.T - 1.0), param_tag(d, r));
        }
    }
    return finish("unitarity_closed_form", 1e-10, w);
}

CheckResult check_unitarity_gamma_form(const CheckOptions& opt) {
    Worst w;
    for (double d : kAboveDeltas) {
        for (double r : kAboveRatios) {
            const StepPotential p{1.0, d};
            const Coefficients co =
                coefficients_gamma_form(kinematics(p, r), opt.perturb_gamma);
            w.feed(std::abs(co.R + co.T - 1.0), param_tag(d, r));
        }
    }
    return finish("unitarity_gamma_form", 1e-10, w);
}

CheckResult check_dual_form(const CheckOptions& opt) {
    Worst w;
    for (double d : kAboveDeltas) {
        for (double r : kAboveRatios) {
            const StepPotential p{1.0, d};
            const Kinematics kin = kinematics(p, r);
            const Coefficients cs = coefficients(kin);
            const Coefficients cg =
                coefficients_gamma_form(kin, opt.perturb_gamma);
            w.feed(std::abs(cg.R - cs.R) / cs.R, param_tag(d, r) + " R");
            w.feed(std::abs(cg.T - cs.T) / cs.T, param_tag(d, r) + " T");
        }
    }
    return finish("closed_vs_gamma_form", 1e-10, w);
}

CheckResult check_total_reflection() {
    Worst w;
    for (double d : {0.5, 10.0}) {
        for (double r : {0.1, 0.2, 0.5, 0.9, 0.999}) {
            const StepPotential p{1.0, d};
            const Coefficients co = coefficients(kinematics(p, r));
            w.feed(std::abs(co.R - 1.0), param_tag(d, r) + " R");
            w.feed(std::abs(co.T), param_tag(d, r) + " T");
            const AmplitudeSet amp = match_below(p, r);
            w.feed(std::abs(std::norm(amp.B) - 1.0), param_tag(d, r) + " |B|^2");
        }
    }
    return finish("total_reflection", 1e-10, w);
}

CheckResult check_oracle(const CheckOptions& opt) {
    Worst w;
    for (double d : {0.5, 1.0, 2.0}) {
        for (double r : {0.25, 0.5, 0.9, 1.2, 2.0, 4.0}) {
            if (opt.below_only && r >= 1.0) continue;
            const StepPotential p{1.0, d};
            numerov::IntegrationConfig cfg = numerov::default_config(p, r);
            cfg.step = opt.oracle_step;
            const numerov::CompareReport rep = numerov::compare(p, r, cfg);
            w.feed(std::abs(rep.R_numeric - rep.R_analytic),
                   param_tag(d, r) + " R");
            w.feed(std::abs(rep.T_numeric - rep.T_analytic),
                   param_tag(d, r) + " T");
        }
    }
    return finish("ode_oracle_agreement", 1e-6, w);
}

CheckResult check_connection_identity(const CheckOptions& opt) {
    // the transmitted representation continued to x < 0 must reproduce the
    // incident + reflected representation through the 1/z continuation
    Worst w;
    for (double d : {0.5, 1.0}) {
        for (double r : {0.5, 2.0}) {
            if (opt.below_only && r >= 1.0) continue;
            const StepPotential p{1.0, d};
            const ScatteringState state(p, r);
            double scale = 0.0;
            for (int i = 0; i < 9; ++i) {
                const double x = -2.0 / d + i * (2.0 / d) / 10.0;
                scale = std::max(scale, std::abs(state.psi(x)));
            }
            for (int i = 0; i < 9; ++i) {
                const double x = -2.0 / d + i * (2.0 / d) / 10.0;
                const Complex via_connection = state.psi_transmitted_form(x);
                w.feed(std::abs(via_connection - state.psi(x)) / scale,
                       param_tag(d, r) + " x=" + std::to_string(x));
            }
        }
    }
    return finish("representation_connection", 1e-8, w);
}

CheckResult check_step_limit_above() {
    const StepPotential p{1.0, 50.0};
    const Kinematics kin = kinematics(p, 2.0);
    const Coefficients co = coefficients(kin);
    const Coefficients step = step_limit_coefficients(kin);
    Worst w;
    w.feed(std::abs(co.R - step.R), param_tag(50.0, 2.0));
    return finish("sharp_step_limit_above", 1e-3, w);
}

CheckResult check_step_limit_below() {
    const StepPotential p{1.0, 50.0};
    const Kinematics kin = kinematics(p, 0.5);
    const AmplitudeSet amp = match_below(p, 0.5);
    const AmplitudeSet step = step_limit_amplitudes(kin);
    Worst w;
    w.feed(std::abs(amp.D - step.D), param_tag(50.0, 0.5) + " D");
    w.feed(std::abs(amp.B - step.B), param_tag(50.0, 0.5) + " B");
    return finish("sharp_step_limit_below", 1e-2, w);
}

CheckResult check_continuity_matching(const CheckOptions& opt) {
    // matching at x = 0 and the Gamma-ratio amplitudes are independent
    // constructions of the same numbers
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> delta_draw(0.3, 5.0);
    std::uniform_real_distribution<double> ratio_draw(0.05, 0.95);
    Worst w;
    for (int i = 0; i < 10; ++i) {
        const double d = delta_draw(rng);
        const double r = ratio_draw(rng);
        const StepPotential p{1.0, d};
        const AmplitudeSet direct = match_below(p, r);
        const AmplitudeSet gamma =
            amplitudes_perturbed(kinematics(p, r), p, opt.perturb_gamma);
        w.feed(std::abs(direct.B - gamma.B), param_tag(d, r) + " B");
        w.feed(std::abs(direct.D - gamma.D), param_tag(d, r) + " D");
    }
    return finish("matching_vs_gamma_amplitudes", 1e-8, w);
}

CheckResult check_ode_residual(const CheckOptions& opt) {
    // psi from the hypergeometric forms must satisfy psi'' = (V-E) psi;
    // second differences at h = 1e-3 leave an O(h^2) floor well under 1e-4
    const double h = 1e-3;
    Worst w;
    for (double r : {0.5, 2.0}) {
        if (opt.below_only && r >= 1.0) continue;
        const StepPotential p{1.0, 1.0};
        const ScatteringState state(p, r);
        double scale = 0.0;
        for (double x : {-3.0, -1.0, -0.3, 0.2, 0.8, 2.0}) {
            scale = std::max(scale, std::abs(state.psi(x)));
        }
        for (double x : {-3.0, -1.0, -0.3, 0.2, 0.8, 2.0}) {
            const Complex second_diff =
                (state.psi(x + h) - 2.0 * state.psi(x) + state.psi(x - h)) /
                (h * h);
            const Complex rhs =
                (potential_value(p, x) - r) * state.psi(x);
            w.feed(std::abs(second_diff - rhs) / scale,
                   param_tag(1.0, r) + " x=" + std::to_string(x));
        }
    }
    return finish("ode_residual", 1e-4, w);
}

CheckResult check_figure_ordering() {
    // at fixed E = 2 V0 the reflection grows monotonically with the step
    // sharpness; report the smallest increment (pass when positive)
    double prev = -1.0;
    double min_gap = 1e300;
    for (double d : kAboveDeltas) {
        const StepPotential p{1.0, d};
        const double R = coefficients(kinematics(p, 2.0)).R;
        if (prev >= 0.0) min_gap = std::min(min_gap, R - prev);
        prev = R;
    }
    CheckResult r;
    r.name = "reflection_grows_with_sharpness";
    r.tolerance = 0.0;
    r.measured = min_gap;
    r.pass = min_gap > 0.0;
    r.detail = "min consecutive R increment over delta sweep at ratio 2";
    return r;
}

CheckResult check_density_peak() {
    // soft step just under the barrier: the density maximum sits inside the
    // classically forbidden side (x > 0)
    const StepPotential p{1.0, 0.5};
    const WaveSample sample = density_scan(p, 0.9, -8.0, 8.0, 801);
    const auto it =
        std::max_element(sample.density.begin(), sample.density.end());
    const double x_peak = sample.x[it - sample.density.begin()];
    CheckResult r;
    r.name = "density_peak_past_edge";
    r.tolerance = 0.0;
    r.measured = x_peak;
    r.pass = x_peak > 0.0;
    r.detail = "density argmax at delta=0.5 ratio=0.9";
    return r;
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckOptions& opt) {
    std::vector<CheckResult> rows;
    if (!opt.below_only) {
        rows.push_back(check_anchor_log2());
        rows.push_back(check_anchor_binomial());
        rows.push_back(check_anchor_gamma_magnitude());
        rows.push_back(check_unitarity_closed_form());
        rows.push_back(check_unitarity_gamma_form(opt));
        rows.push_back(check_dual_form(opt));
    }
    rows.push_back(check_total_reflection());
    rows.push_back(check_oracle(opt));
    rows.push_back(check_connection_identity(opt));
    if (!opt.below_only) rows.push_back(check_step_limit_above());
    rows.push_back(check_step_limit_below());
    rows.push_back(check_continuity_matching(opt));
    rows.push_back(check_ode_residual(opt));
    if (!opt.below_only) {
        rows.push_back(check_figure_ordering());
        rows.push_back(check_density_peak());
    }
    return rows;
}

}  // namespace checks
}  // namespace qstep
