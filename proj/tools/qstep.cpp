// Command-line front end: tabulated potential profiles, reflection and
// transmission sweeps, wavefunction scans, the cross-validation battery and
// the sharp-step limit table, as CSV or JSON on stdout or into a file.

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qstep/checks.hpp"
#include "qstep/numerov.hpp"
#include "qstep/scattering.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

// shortest round-trip formatting, locale-independent
std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void write_table(const Table& t, const std::string& format, std::ostream& os) {
    if (format == "json") {
        ordered_json j;
        j["columns"] = t.columns;
        j["rows"] = ordered_json::array();
        for (const auto& row : t.rows) j["rows"].push_back(row);
        os << j.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        os << (i ? "," : "") << t.columns[i];
    }
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << fmt(row[i]);
        }
        os << "\n";
    }
}

// output sink selection; "-" means stdout
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Sink(const std::string& path) {
        if (path != "-") {
            file.open(path, std::ios::out | std::ios::trunc);
            if (!file) throw qstep::Error("cannot open output file: " + path);
            os = &file;
        }
    }
};

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = lo + (hi - lo) * i / static_cast<double>(n - 1);
    }
    return xs;
}

struct PotentialArgs {
    double v0 = 1.0;
    std::vector<double> deltas{0.5, 1.0, 2.0, 10.0};
    double xmin = -5.0, xmax = 5.0;
    int samples = 401;
    std::string format = "csv";
    std::string output = "-";
};

int run_potential(const PotentialArgs& a) {
    Table t;
    t.columns.push_back("x");
    for (double d : a.deltas) t.columns.push_back("V_delta_" + fmt(d));
    for (double x : linspace(a.xmin, a.xmax, a.samples)) {
        std::vector<double> row{x};
        for (double d : a.deltas) {
            row.push_back(qstep::potential_value({a.v0, d}, x));
        }
        t.rows.push_back(std::move(row));
    }
    Sink sink(a.output);
    write_table(t, a.format, *sink.os);
    return 0;
}

struct CoeffsArgs {
    double v0 = 1.0;
    std::vector<double> deltas{0.5, 1.0, 2.0, 10.0};
    std::vector<double> ratios;  // empty: default sweep 0.01..3.00
    std::string format = "csv";
    std::string output = "-";
};

int run_coeffs(const CoeffsArgs& a) {
    std::vector<double> ratios = a.ratios;
    if (ratios.empty()) {
        for (int i = 1; i <= 300; ++i) ratios.push_back(i / 100.0);
    }
    Table t;
    t.columns.push_back("ratio");
    for (double d : a.deltas) {
        t.columns.push_back("R_delta_" + fmt(d));
        t.columns.push_back("T_delta_" + fmt(d));
    }
    for (double r : ratios) {
        std::vector<double> row{r};
        for (double d : a.deltas) {
            const auto co =
                qstep::coefficients(qstep::kinematics({a.v0, d}, r * a.v0));
            row.push_back(co.R);
            row.push_back(co.T);
        }
        t.rows.push_back(std::move(row));
    }
    Sink sink(a.output);
    write_table(t, a.format, *sink.os);
    return 0;
}

struct WaveArgs {
    double v0 = 1.0;
    std::vector<double> deltas{0.5, 1.0, 2.0, 10.0};
    std::vector<double> ratios{2.0};
    std::vector<double> energies;
    int figure = 0;
    double xmin = -8.0, xmax = 8.0;
    int samples = 401;
    std::string format = "csv";
    std::string output = "-";
};

int run_wave(WaveArgs a) {
    switch (a.figure) {
        case 2:
            a.deltas = {0.5, 1.0, 2.0, 10.0};
            a.ratios = {1.0};
            break;
        case 3:
            a.deltas = {0.5, 1.0, 2.0, 10.0};
            a.ratios = {2.0};
            break;
        case 4:
            a.deltas = {0.5};
            a.ratios = {0.1, 0.2, 0.5, 0.9};
            break;
        case 5:
            a.deltas = {10.0};
            a.ratios = {0.1, 0.2, 0.5, 0.9};
            break;
        default:
            break;
    }
    if (!a.energies.empty()) {
        a.ratios.clear();
        for (double e : a.energies) a.ratios.push_back(e / a.v0);
    }
    const bool multi = a.deltas.size() * a.ratios.size() > 1;
    Table t;
    if (multi) {
        t.columns = {"delta", "ratio"};
    }
    for (const char* name : {"x", "re_psi", "im_psi", "density", "current"}) {
        t.columns.push_back(name);
    }
    for (double d : a.deltas) {
        for (double r : a.ratios) {
            const auto sample = qstep::density_scan({a.v0, d}, r * a.v0,
                                                    a.xmin, a.xmax, a.samples);
            for (std::size_t i = 0; i < sample.x.size(); ++i) {
                std::vector<double> row;
                if (multi) {
                    row.push_back(d);
                    row.push_back(r);
                }
                row.push_back(sample.x[i]);
                row.push_back(sample.psi[i].real());
                row.push_back(sample.psi[i].imag());
                row.push_back(sample.density[i]);
                row.push_back(sample.current[i]);
                t.rows.push_back(std::move(row));
            }
        }
    }
    Sink sink(a.output);
    write_table(t, a.format, *sink.os);
    return 0;
}

struct ValidateArgs {
    bool below_only = false;
    double perturb_gamma = 0.0;
    double oracle_step = 1e-3;
    std::string format = "text";  // unlike the data commands
    std::string output = "-";
};

int run_validate(const ValidateArgs& a) {
    qstep::checks::CheckOptions opt;
    opt.below_only = a.below_only;
    opt.perturb_gamma = a.perturb_gamma;
    opt.oracle_step = a.oracle_step;
    const auto rows = qstep::checks::run_checks(opt);

    Sink sink(a.output);
    std::ostream& os = *sink.os;
    bool all_pass = true;
    if (a.format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& r : rows) {
            all_pass = all_pass && r.pass;
            j.push_back({{"name", r.name},
                         {"tolerance", r.tolerance},
                         {"measured", r.measured},
                         {"pass", r.pass},
                         {"detail", r.detail}});
        }
        os << j.dump(2) << "\n";
    } else if (a.format == "csv") {
        os << "name,tolerance,measured,pass,detail\n";
        for (const auto& r : rows) {
            all_pass = all_pass && r.pass;
            os << r.name << "," << fmt(r.tolerance) << "," << fmt(r.measured)
               << "," << (r.pass ? 1 : 0) << "," << r.detail << "\n";
        }
    } else {
        for (const auto& r : rows) {
            all_pass = all_pass && r.pass;
            os << (r.pass ? "PASS " : "FAIL ") << r.name
               << " measured=" << fmt(r.measured)
               << " tol=" << fmt(r.tolerance);
            if (!r.detail.empty()) os << " (" << r.detail << ")";
            os << "\n";
        }
        os << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all_pass ? 0 : 1;
}

struct LimitArgs {
    double v0 = 1.0;
    std::vector<double> deltas{1.0, 2.0, 5.0, 10.0, 20.0, 50.0};
    double ratio = 2.0;
    double below_ratio = 0.5;
    std::string format = "csv";
    std::string output = "-";
};

int run_limit(const LimitArgs& a) {
    Table t;
    t.columns = {"delta",      "R",          "R_sharp_limit",
                 "abs_R_diff", "abs_D_diff_below", "abs_B_diff_below"};
    for (double d : a.deltas) {
        const qstep::StepPotential p{a.v0, d};
        const auto kin = qstep::kinematics(p, a.ratio * a.v0);
        const double R = qstep::coefficients(kin).R;
        const double R_sharp = qstep::step_limit_coefficients(kin).R;

        const auto kin_b = qstep::kinematics(p, a.below_ratio * a.v0);
        const auto amp = qstep::match_below(p, a.below_ratio * a.v0);
        const auto sharp = qstep::step_limit_amplitudes(kin_b);
        t.rows.push_back({d, R, R_sharp, std::abs(R - R_sharp),
                          std::abs(amp.D - sharp.D), std::abs(amp.B - sharp.B)});
    }
    Sink sink(a.output);
    write_table(t, a.format, *sink.os);
    return 0;
}

void add_format_output(CLI::App* cmd, std::string& format, std::string& output,
                       bool with_text = false) {
    auto choices = with_text
                       ? CLI::IsMember({"text", "csv", "json"})
                       : CLI::IsMember({"csv", "json"});
    cmd->add_option("--format", format, "output format")
        ->check(choices)
        ->capture_default_str();
    cmd->add_option("-o,--output", output,
                    "output file, or - for stdout")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "scattering on the smooth potential step V(x) = V0/2 (1 + tanh(delta x))"};
    app.require_subcommand(1);

    PotentialArgs pa;
    CLI::App* potential =
        app.add_subcommand("potential", "tabulate the potential profile");
    potential->add_option("--v0", pa.v0, "step height")->capture_default_str();
    potential->add_option("--delta", pa.deltas, "step sharpness values")
        ->delimiter(',')
        ->capture_default_str();
    potential->add_option("--xmin", pa.xmin, "left end")->capture_default_str();
    potential->add_option("--xmax", pa.xmax, "right end")->capture_default_str();
    potential->add_option("--samples", pa.samples, "grid points")
        ->check(CLI::Range(2, 2000000))
        ->capture_default_str();
    add_format_output(potential, pa.format, pa.output);

    CoeffsArgs ca;
    CLI::App* coeffs = app.add_subcommand(
        "coeffs", "reflection/transmission sweep over E/V0");
    coeffs->add_option("--v0", ca.v0, "step height")->capture_default_str();
    coeffs->add_option("--delta", ca.deltas, "step sharpness values")
        ->delimiter(',')
        ->capture_default_str();
    coeffs->add_option("--ratio", ca.ratios,
                       "E/V0 values (default: 0.01..3.00 in 0.01 steps)")
        ->delimiter(',');
    add_format_output(coeffs, ca.format, ca.output);

    WaveArgs wa;
    CLI::App* wave =
        app.add_subcommand("wave", "wavefunction scan at fixed energy");
    wave->add_option("--v0", wa.v0, "step height")->capture_default_str();
    auto* wave_delta =
        wave->add_option("--delta", wa.deltas, "step sharpness values")
            ->delimiter(',')
            ->capture_default_str();
    auto* wave_ratio = wave->add_option("--ratio", wa.ratios, "E/V0 values")
                           ->delimiter(',')
                           ->capture_default_str();
    auto* wave_energy =
        wave->add_option("--energy", wa.energies, "energies (overrides --ratio)")
            ->delimiter(',');
    wave_energy->excludes(wave_ratio);
    auto* wave_figure =
        wave->add_option("--figure", wa.figure,
                         "preset parameter set: 2 threshold sweep, 3 ratio-2 "
                         "sweep, 4 soft below-step, 5 sharp below-step")
            ->check(CLI::IsMember({2, 3, 4, 5}));
    wave_figure->excludes(wave_delta)
        ->excludes(wave_ratio)
        ->excludes(wave_energy);
    wave->add_option("--xmin", wa.xmin, "left end")->capture_default_str();
    wave->add_option("--xmax", wa.xmax, "right end")->capture_default_str();
    wave->add_option("--samples", wa.samples, "grid points")
        ->check(CLI::Range(2, 2000000))
        ->capture_default_str();
    add_format_output(wave, wa.format, wa.output);

    ValidateArgs va;
    CLI::App* validate = app.add_subcommand(
        "validate", "run the cross-validation battery (exit 1 on failure)");
    validate->add_flag("--below-only", va.below_only,
                       "restrict to checks touching E < V0");
    validate->add_option("--perturb-gamma", va.perturb_gamma,
                         "scale every log-Gamma by (1+x); fault injection")
        ->capture_default_str();
    validate->add_option("--oracle-step", va.oracle_step,
                         "ODE oracle grid step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format_output(validate, va.format, va.output, /*with_text=*/true);

    LimitArgs la;
    CLI::App* limit = app.add_subcommand(
        "limit", "approach to the sharp-step limit over delta");
    limit->add_option("--v0", la.v0, "step height")->capture_default_str();
    limit->add_option("--delta", la.deltas, "step sharpness values")
        ->delimiter(',')
        ->capture_default_str();
    limit->add_option("--ratio", la.ratio, "above-step E/V0 for R comparison")
        ->capture_default_str();
    limit->add_option("--below-ratio", la.below_ratio,
                      "below-step E/V0 for amplitude comparison")
        ->capture_default_str();
    add_format_output(limit, la.format, la.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*potential) return run_potential(pa);
        if (*coeffs) return run_coeffs(ca);
        if (*wave) return run_wave(wa);
        if (*validate) return run_validate(va);
        if (*limit) return run_limit(la);
    } catch (const qstep::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
