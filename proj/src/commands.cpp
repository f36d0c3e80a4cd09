#include "chowcalc/commands.hpp"

#include <sstream>

namespace chowcalc {

namespace {

ChowClass resolved_main(const Scenario& scenario) {
    if (!scenario.singular_segre) {
        throw ScenarioError("scenario is missing its singular_segre entry");
    }
    return scenario.singular_segre->resolve(scenario.ambient.dim);
}

ClassReport segre_report(const Scenario& scenario) {
    const int n = scenario.ambient.dim;
    ClassReport report(n);
    switch (scenario.kind) {
        case ScenarioKind::hypersurface: {
            const ChowClass s_y = resolved_main(scenario);
            report.add("segre_X", segre_ci(scenario.degrees, n));
            report.add("segre_sing", s_y);
            report.add("sm_segre", sm_segre_hypersurface(scenario.degrees[0], s_y, n));
            break;
        }
        case ScenarioKind::global_ci:
            report.add("segre_X", segre_ci(scenario.degrees, n));
            report.add("segre_sing", resolved_main(scenario));
            break;
        case ScenarioKind::union2: {
            const int d1 = scenario.degrees[0];
            const int d2 = scenario.degrees[1];
            report.add("segre_1", segre_ci({d1}, n));
            report.add("segre_2", segre_ci({d2}, n));
            report.add("segre_X", segre_ci({d1, d2}, n));
            report.add("segre_union", segre_ci({d1 + d2}, n));
            break;
        }
    }
    return report;
}

ClassReport fulton_report(const Scenario& scenario) {
    ClassReport report(scenario.ambient.dim);
    report.add("fulton", fulton_class(scenario));
    return report;
}

ClassReport csm_report(const Scenario& scenario) {
    const int n = scenario.ambient.dim;
    ClassReport report(n);
    switch (scenario.kind) {
        case ScenarioKind::hypersurface: {
            const ChowClass s_y = resolved_main(scenario);
            report.add("sm_segre", sm_segre_hypersurface(scenario.degrees[0], s_y, n));
            report.add("csm", csm_hypersurface(scenario.degrees[0], s_y, n));
            break;
        }
        case ScenarioKind::global_ci:
            report.add("csm", fulton_class(scenario) + milnor_signed(scenario));
            break;
        case ScenarioKind::union2: {
            const Union2Classes classes = union2_pipeline(scenario);
            report.add("csm", classes.csm_union);
            report.add("csm_1", classes.csm_1);
            report.add("csm_2", classes.csm_2);
            report.add("csm_intersection", classes.csm_intersection);
            break;
        }
    }
    return report;
}

ClassReport milnor_report(const Scenario& scenario) {
    const int n = scenario.ambient.dim;
    ClassReport report(n);
    if (scenario.kind == ScenarioKind::union2) {
        const Union2Classes classes = union2_pipeline(scenario);
        report.add("milnor_raw", classes.milnor_union);
        report.add("milnor_signed", classes.milnor_union);
    } else {
        report.add("milnor_raw", milnor_ci_raw(scenario));
        report.add("milnor_signed", milnor_signed(scenario));
    }
    return report;
}

ClassReport euler_report(const Scenario& scenario) {
    const int n = scenario.ambient.dim;
    ClassReport report(n);
    ChowClass csm(n);
    switch (scenario.kind) {
        case ScenarioKind::hypersurface:
            csm = csm_hypersurface(scenario.degrees[0], resolved_main(scenario), n);
            break;
        case ScenarioKind::global_ci:
            csm = fulton_class(scenario) + milnor_signed(scenario);
            break;
        case ScenarioKind::union2:
            csm = union2_pipeline(scenario).csm_union;
            break;
    }
    report.add("euler", euler_characteristic(csm));
    return report;
}

ClassReport invert_milnor_report(const Scenario& scenario) {
    const int n = scenario.ambient.dim;
    ClassReport report(n);
    if (scenario.kind == ScenarioKind::hypersurface) {
        const ChowClass milnor =
            milnor_hypersurface(scenario.degrees[0], resolved_main(scenario), n);
        report.add("milnor_signed", milnor);
        report.add("segre_sing", invert_milnor_to_segre(milnor, scenario.degrees[0], n));
        return report;
    }
    if (scenario.kind == ScenarioKind::union2) {
        const Union2Classes classes = union2_pipeline(scenario);
        report.add("milnor_signed", classes.milnor_union);
        report.add("segre_sing", classes.segre_union_singular_recovered);
        return report;
    }
    throw ScenarioError(
        "invert-milnor needs a single hypersurface degree; pass a hypersurface or "
        "union2 scenario, or an inline class with --class/--degree/--dim");
}

}  // namespace

ClassReport run_class_command(const std::string& command, const Scenario& scenario) {
    if (command == "segre") return segre_report(scenario);
    if (command == "fulton") return fulton_report(scenario);
    if (command == "csm") return csm_report(scenario);
    if (command == "milnor") return milnor_report(scenario);
    if (command == "euler") return euler_report(scenario);
    if (command == "invert-milnor") return invert_milnor_report(scenario);
    throw ScenarioError("unknown command: " + command);
}

ClassReport run_invert_milnor_inline(const ChowClass& milnor, int degree) {
    ClassReport report(milnor.ambient_dim());
    report.add("segre_sing", invert_milnor_to_segre(milnor, degree, milnor.ambient_dim()));
    return report;
}

IdentityCheckResult run_identity_checks(const Scenario& scenario) {
    if (scenario.kind != ScenarioKind::union2) {
        throw ScenarioError("check-identities expects a union2 scenario");
    }
    const int n = scenario.ambient.dim;
    const int d1 = scenario.degrees[0];
    const int d2 = scenario.degrees[1];

    const ChowClass s_x = segre_ci({d1, d2}, n);
    IdentityCheckResult result{};
    result.residual_segre = residual_segre_identity_holds(
        s_x, segre_ci({d1}, n), segre_ci({d2}, n), segre_ci({d1 + d2}, n), d1, d2);

    const Union2Classes classes = union2_pipeline(scenario);
    const ChowClass s_xbar = scenario.singular_segre_union
                                 ? scenario.singular_segre_union->resolve(n)
                                 : classes.segre_union_singular_recovered;
    result.codim2_difference = codim2_difference_identity_holds(
        scenario.singular_segre_1->resolve(n), scenario.singular_segre_2->resolve(n), s_xbar,
        s_x, d1, d2, classes.milnor_intersection, scenario.ambient);
    return result;
}

std::string render_identity_checks(const IdentityCheckResult& result, OutputFormat format) {
    (void)format;  // both modes share the exact same stable rendering
    std::ostringstream out;
    out << "residual_segre: " << (result.residual_segre ? "pass" : "fail") << '\n';
    out << "codim2_difference: " << (result.codim2_difference ? "pass" : "fail") << '\n';
    return out.str();
}

}  // namespace chowcalc
