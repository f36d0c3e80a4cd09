#pragma once

#include <string>

#include "chowcalc/char_classes.hpp"
#include "chowcalc/format.hpp"

namespace chowcalc {

// Dispatch for the scenario-driven CLI commands: segre, fulton, csm, milnor,
// euler, invert-milnor. Throws ScenarioError on a command/kind mismatch
// (e.g. fulton on a union2 scenario) or missing scenario data.
ClassReport run_class_command(const std::string& command, const Scenario& scenario);

// invert-milnor with an inline class instead of a scenario.
ClassReport run_invert_milnor_inline(const ChowClass& milnor, int degree);

struct IdentityCheckResult {
    bool residual_segre;
    bool codim2_difference;

    bool all() const { return residual_segre && codim2_difference; }
};

// Evaluates both alternative-route identities on the configuration described
// by a union2 scenario.
IdentityCheckResult run_identity_checks(const Scenario& scenario);

std::string render_identity_checks(const IdentityCheckResult& result, OutputFormat format);

}  // namespace chowcalc
