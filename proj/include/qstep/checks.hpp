#pragma once

#include <string>
#include <vector>

#include "qstep/model.hpp"

namespace qstep {
namespace checks {

struct CheckResult {
    std::string name;
    double tolerance = 0.0;
    double measured = 0.0;  // worst deviation observed, comparable to tolerance
    bool pass = false;
    std::string detail;  // where the worst deviation occurred
};

struct CheckOptions {
    bool below_only = false;      // restrict to checks that touch E < V0
    double perturb_gamma = 0.0;   // forwarded to the Gamma-form evaluations
    double oracle_step = 1e-3;    // ODE oracle grid step
};

// The cross-validation battery shared by the validate subcommand and the
// acceptance runner: unitarity, total reflection, analytic-vs-Gamma-form
// agreement, ODE oracle agreement, representation consistency, sharp-step
// limits, matching consistency, residuals and figure-level shape checks.
std::vector<CheckResult> run_checks(const CheckOptions& opt);

}  // namespace checks
}  // namespace qstep
