// chowcalc: exact characteristic classes of (possibly singular)
// hypersurfaces and global complete intersections in projective space.
//
// Exit codes: 0 success, 1 computation/validation error, 2 usage error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "chowcalc/commands.hpp"
#include "chowcalc/golden_suite.hpp"
#include "chowcalc/scenario_io.hpp"

namespace {

using namespace chowcalc;

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "machine") return OutputFormat::machine;
    throw ScenarioError("unknown output format: " + name + " (expected text or machine)");
}

struct Options {
    std::string command;
    std::string scenario_path;
    std::string format_name = "text";
    std::string class_csv;
    int degree = 0;
    int dim = 0;
};

int dispatch(const Options& opt) {
    const OutputFormat format = parse_format(opt.format_name);

    if (opt.command == "verify-paper") {
        const auto items = run_golden_suite();
        std::cout << render_golden_report(items, format);
        return all_passed(items) ? 0 : 1;
    }

    if (opt.command == "check-identities") {
        const Scenario scenario = parse_scenario_file(opt.scenario_path);
        const IdentityCheckResult result = run_identity_checks(scenario);
        std::cout << render_identity_checks(result, format);
        return result.all() ? 0 : 1;
    }

    if (opt.command == "invert-milnor" && opt.scenario_path.empty()) {
        const ChowClass milnor = parse_class_csv(opt.class_csv, opt.dim);
        std::cout << render(run_invert_milnor_inline(milnor, opt.degree), format);
        return 0;
    }

    const Scenario scenario = parse_scenario_file(opt.scenario_path);
    std::cout << render(run_class_command(opt.command, scenario), format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact characteristic classes (Segre, Fulton, CSM, Milnor) of possibly "
                 "singular hypersurfaces and complete intersections in P^n"};
    app.require_subcommand(1);

    Options opt;
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format_name, "output format: text or machine")
            ->check(CLI::IsMember({"text", "machine"}));
    };

    for (const char* name : {"segre", "fulton", "csm", "milnor", "euler"}) {
        CLI::App* cmd = app.add_subcommand(name, std::string("compute the ") + name +
                                                     " data of a scenario");
        cmd->add_option("--scenario", opt.scenario_path, "scenario file (JSON)")->required();
        add_format(cmd);
        cmd->callback([&opt, name] { opt.command = name; });
    }

    CLI::App* invert = app.add_subcommand(
        "invert-milnor", "recover the singular-scheme Segre class from a Milnor class");
    invert->add_option("--scenario", opt.scenario_path,
                       "hypersurface or union2 scenario to invert");
    invert->add_option("--class", opt.class_csv,
                       "inline Milnor class: comma-separated rationals by codimension");
    invert->add_option("--degree", opt.degree, "hypersurface degree for the inline class");
    invert->add_option("--dim", opt.dim, "ambient dimension for the inline class");
    add_format(invert);
    invert->callback([&opt, invert] {
        opt.command = "invert-milnor";
        const bool inline_form = invert->count("--class") > 0;
        if (inline_form == (invert->count("--scenario") > 0)) {
            throw CLI::ValidationError("invert-milnor",
                                       "pass exactly one of --scenario or --class");
        }
        if (inline_form && (invert->count("--degree") == 0 || invert->count("--dim") == 0)) {
            throw CLI::ValidationError("invert-milnor",
                                       "--class requires --degree and --dim");
        }
    });

    CLI::App* check = app.add_subcommand("check-identities",
                                         "evaluate the residual-Segre and codimension-two "
                                         "difference identities on a union2 scenario");
    check->add_option("--scenario", opt.scenario_path, "union2 scenario file")->required();
    add_format(check);
    check->callback([&opt] { opt.command = "check-identities"; });

    CLI::App* verify = app.add_subcommand(
        "verify-paper", "run the built-in worked-example suite and report each item");
    add_format(verify);
    verify->callback([&opt] { opt.command = "verify-paper"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(opt);
    } catch (const std::exception& e) {
        std::cerr << "chowcalc: error: " << e.what() << '\n';
        return 1;
    }
}
