#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qstep/checks.hpp"
#include "qstep/numerov.hpp"
#include "qstep/scattering.hpp"

namespace py = pybind11;

using namespace qstep;

PYBIND11_MODULE(_core, m) {
    m.doc() = "scattering on the smooth hyperbolic-tangent potential step";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<PoleError>(m, "PoleError", base);
    py::register_exception<InvalidCError>(m, "InvalidCError", base);
    py::register_exception<NoConvergenceError>(m, "NoConvergenceError", base);
    py::register_exception<DegenerateParametersError>(
        m, "DegenerateParametersError", base);
    py::register_exception<NonPositiveEnergyError>(m, "NonPositiveEnergyError",
                                                   base);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError",
                                                 base);
    py::register_exception<BelowRegimeError>(m, "BelowRegimeError", base);
    py::register_exception<OverflowGuardError>(m, "OverflowGuardError", base);
    py::register_exception<SingularWronskianError>(m, "SingularWronskianError",
                                                   base);
    py::register_exception<UnstableGrowthError>(m, "UnstableGrowthError", base);
    py::register_exception<IllConditionedError>(m, "IllConditionedError", base);

    py::class_<StepPotential>(m, "StepPotential")
        .def(py::init([](double v0, double delta) {
                 return StepPotential{v0, delta};
             }),
             py::arg("v0") = 1.0, py::arg("delta") = 1.0)
        .def_readwrite("v0", &StepPotential::v0)
        .def_readwrite("delta", &StepPotential::delta)
        .def("__repr__", [](const StepPotential& p) {
            return "StepPotential(v0=" + std::to_string(p.v0) +
                   ", delta=" + std::to_string(p.delta) + ")";
        });

    py::enum_<Regime>(m, "Regime")
        .value("Above", Regime::Above)
        .value("Below", Regime::Below);

    py::class_<Kinematics>(m, "Kinematics")
        .def_readonly("energy", &Kinematics::energy)
        .def_readonly("regime", &Kinematics::regime)
        .def_readonly("k", &Kinematics::k)
        .def_readonly("mu", &Kinematics::mu)
        .def_readonly("ell", &Kinematics::ell)
        .def_readonly("nu", &Kinematics::nu)
        .def_readonly("kappa", &Kinematics::kappa);

    py::class_<HypMapping>(m, "HypMapping")
        .def_readonly("alpha", &HypMapping::alpha)
        .def_readonly("beta", &HypMapping::beta)
        .def_readonly("a", &HypMapping::a)
        .def_readonly("b", &HypMapping::b)
        .def_readonly("c", &HypMapping::c);

    py::class_<AmplitudeSet>(m, "AmplitudeSet")
        .def_readonly("A", &AmplitudeSet::A)
        .def_readonly("B", &AmplitudeSet::B)
        .def_readonly("D", &AmplitudeSet::D);

    py::class_<Coefficients>(m, "Coefficients")
        .def_readonly("R", &Coefficients::R)
        .def_readonly("T", &Coefficients::T);

    py::class_<WaveSample>(m, "WaveSample")
        .def_readonly("x", &WaveSample::x)
        .def_readonly("psi", &WaveSample::psi)
        .def_readonly("density", &WaveSample::density)
        .def_readonly("current", &WaveSample::current);

    m.def("potential_value", &potential_value, py::arg("potential"),
          py::arg("x"));
    m.def("kinematics", &kinematics, py::arg("potential"), py::arg("energy"));
    m.def("hyp_mapping", &hyp_mapping, py::arg("kinematics"),
          py::arg("potential"));

    m.def("log_gamma", &log_gamma, py::arg("z"));
    m.def("gamma_abs_sq_one_plus_i_eta", &gamma_abs_sq_one_plus_i_eta,
          py::arg("eta"));
    m.def("hyp2f1", &hyp2f1, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("z"));
    m.def("hyp2f1_deriv", &hyp2f1_deriv, py::arg("a"), py::arg("b"),
          py::arg("c"), py::arg("z"));

    m.def("amplitudes", &amplitudes, py::arg("kinematics"),
          py::arg("potential"));
    m.def("amplitudes_perturbed", &amplitudes_perturbed, py::arg("kinematics"),
          py::arg("potential"), py::arg("perturb"));
    m.def("coefficients", &coefficients, py::arg("kinematics"));
    m.def("coefficients_gamma_form", &coefficients_gamma_form,
          py::arg("kinematics"), py::arg("perturb") = 0.0);
    m.def("step_limit_coefficients", &step_limit_coefficients,
          py::arg("kinematics"));
    m.def("step_limit_amplitudes", &step_limit_amplitudes,
          py::arg("kinematics"));
    m.def("match_below", &match_below, py::arg("potential"), py::arg("energy"));
    m.def("wavefunction", &wavefunction, py::arg("potential"),
          py::arg("energy"), py::arg("x"));
    m.def("density_scan", &density_scan, py::arg("potential"),
          py::arg("energy"), py::arg("x_min"), py::arg("x_max"),
          py::arg("samples"));

    py::class_<ScatteringState>(m, "ScatteringState")
        .def(py::init<const StepPotential&, double>(), py::arg("potential"),
             py::arg("energy"))
        .def("psi", &ScatteringState::psi, py::arg("x"))
        .def(
            "psi_deriv",
            [](const ScatteringState& s, double x) {
                const auto pd = s.psi_deriv(x);
                return py::make_tuple(pd.psi, pd.dpsi);
            },
            py::arg("x"), "returns (psi, dpsi/dx)")
        .def("psi_transmitted_form", &ScatteringState::psi_transmitted_form,
             py::arg("x"))
        .def("psi_left_form", &ScatteringState::psi_left_form, py::arg("x"))
        .def("scan", &ScatteringState::scan, py::arg("x_min"), py::arg("x_max"),
             py::arg("samples"))
        .def("set_asymptotic_substitution",
             &ScatteringState::set_asymptotic_substitution, py::arg("on"))
        .def_property_readonly(
            "kin", [](const ScatteringState& s) { return s.kin(); })
        .def_property_readonly(
            "mapping", [](const ScatteringState& s) { return s.mapping(); })
        .def_property_readonly("amplitude_set", [](const ScatteringState& s) {
            return s.amplitude_set();
        });

    auto nm = m.def_submodule("numerov", "independent ODE integration oracle");
    py::class_<numerov::IntegrationConfig>(nm, "IntegrationConfig")
        .def(py::init([](double x_left, double x_right, double step) {
                 return numerov::IntegrationConfig{x_left, x_right, step};
             }),
             py::arg("x_left"), py::arg("x_right"), py::arg("step") = 1e-3)
        .def_readwrite("x_left", &numerov::IntegrationConfig::x_left)
        .def_readwrite("x_right", &numerov::IntegrationConfig::x_right)
        .def_readwrite("step", &numerov::IntegrationConfig::step);
    py::class_<numerov::TailAmplitudes>(nm, "TailAmplitudes")
        .def_readonly("A", &numerov::TailAmplitudes::A)
        .def_readonly("B", &numerov::TailAmplitudes::B);
    py::class_<numerov::CompareReport>(nm, "CompareReport")
        .def_readonly("R_analytic", &numerov::CompareReport::R_analytic)
        .def_readonly("R_numeric", &numerov::CompareReport::R_numeric)
        .def_readonly("T_analytic", &numerov::CompareReport::T_analytic)
        .def_readonly("T_numeric", &numerov::CompareReport::T_numeric)
        .def_readonly("max_psi_deviation",
                      &numerov::CompareReport::max_psi_deviation);
    nm.def("default_config", &numerov::default_config, py::arg("potential"),
           py::arg("energy"));
    nm.def("integrate", &numerov::integrate, py::arg("potential"),
           py::arg("energy"), py::arg("config"));
    nm.def("extract_amplitudes", &numerov::extract_amplitudes,
           py::arg("sample"), py::arg("k"));
    nm.def("compare", &numerov::compare, py::arg("potential"),
           py::arg("energy"), py::arg("config"));

    py::class_<checks::CheckResult>(m, "CheckResult")
        .def_readonly("name", &checks::CheckResult::name)
        .def_readonly("tolerance", &checks::CheckResult::tolerance)
        .def_readonly("measured", &checks::CheckResult::measured)
        .def_readonly("pass_", &checks::CheckResult::pass)
        .def_readonly("detail", &checks::CheckResult::detail);
    py::class_<checks::CheckOptions>(m, "CheckOptions")
        .def(py::init<>())
        .def_readwrite("below_only", &checks::CheckOptions::below_only)
        .def_readwrite("perturb_gamma", &checks::CheckOptions::perturb_gamma)
        .def_readwrite("oracle_step", &checks::CheckOptions::oracle_step);
    m.def(
        "run_checks",
        [](const checks::CheckOptions& opt) { return checks::run_checks(opt); },
        py::arg("options") = checks::CheckOptions{});
}
