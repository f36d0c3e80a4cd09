// Acceptance suite: exercises each end-to-end requirement once, prints one
// PASS/FAIL line per criterion, and exits nonzero if any fails.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "chowcalc/commands.hpp"
#include "chowcalc/golden_suite.hpp"
#include "chowcalc/scenario_io.hpp"
#include "random_classes.hpp"

using namespace chowcalc;

namespace {

ChowClass cls(int n, std::vector<Rational> coeffs) {
    return ChowClass(n, std::move(coeffs));
}

struct ProcessResult {
    int exit_code = -1;
    std::string output;
};

ProcessResult run_cli(const std::string& args) {
    const std::string command = std::string(CHOWCALC_CLI_PATH) + " " + args + " 2>&1";
    ProcessResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[4096];
    size_t read = 0;
    while ((read = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, read);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// X = Q cap H in P^4, Q the singular quadric cone, H a hyperplane.
bool criterion_intersection_example() {
    const Scenario scenario =
        make_global_ci_scenario(4, {1}, 2, SingularSchemeSegre::linear_subspace(1));
    const ChowClass milnor = milnor_signed(scenario);
    if (milnor != ChowClass::hyperplane_power(4, 3)) return false;
    const ChowClass csm = fulton_class(scenario) + milnor;
    return euler_characteristic(csm) == 4;
}

// Recover s(Z_s, P^4) from the inclusion-exclusion Milnor class of the
// degree-3 union Z = Q cup H.
bool criterion_union_example() {
    const int n = 4;
    const ChowClass csm_q = csm_hypersurface(2, segre_linear_subspace(1, n), n);
    const ChowClass csm_h = csm_hypersurface(1, ChowClass(n), n);
    const Scenario intersection =
        make_global_ci_scenario(n, {1}, 2, SingularSchemeSegre::linear_subspace(1));
    const ChowClass csm_x = fulton_class(intersection) + milnor_signed(intersection);
    const ChowClass fulton_z =
        fulton_class(make_hypersurface_scenario(n, 3, SingularSchemeSegre::zero()));

    const ChowClass milnor_z = csm_inclusion_exclusion2(csm_q, csm_h, csm_x) - fulton_z;
    if (milnor_z != cls(n, {0, 0, 2, -4, 10})) return false;

    const ChowClass recovered = invert_milnor_to_segre(milnor_z, 3, n);
    if (recovered != cls(n, {0, 0, 2, -4, 0})) return false;
    if (milnor_hypersurface(3, recovered, n) != milnor_z) return false;
    return euler_characteristic(fulton_z + milnor_z) == 4;
}

// The k = 1 complete-intersection formula reduces to the hypersurface one.
bool criterion_codim1_reduction() {
    std::mt19937 rng(1001);
    for (int n = 2; n <= 6; ++n) {
        for (int d = 1; d <= 4; ++d) {
            for (int trial = 0; trial < 50; ++trial) {
                const ChowClass s_y = testgen::random_class(rng, n);
                const Scenario scenario =
                    make_global_ci_scenario(n, {}, d, SingularSchemeSegre::explicit_class(s_y));
                if (milnor_ci_raw(scenario) != milnor_hypersurface(d, s_y, n)) return false;
            }
        }
    }
    return true;
}

// The operation-calculus identities, 200 randomized instances each.
bool criterion_calculus_properties() {
    std::mt19937 rng(1002);
    const auto random_bundle = [&rng](int n) {
        const int count = testgen::random_int(rng, 0, 4);
        std::vector<int> twists(static_cast<size_t>(count));
        for (int& a : twists) a = testgen::random_int(rng, -5, 5);
        return SplitBundle(n, std::move(twists));
    };

    for (int trial = 0; trial < 200; ++trial) {
        const int n = testgen::random_int(rng, 0, 8);
        const ChowClass a = testgen::random_class(rng, n);
        const SplitBundle e = random_bundle(n);
        const LineBundle line(n, testgen::random_int(rng, -5, 5));

        if (!dual_cap_identity_holds(e, a)) return false;
        if (!tensor_cap_identity_holds(e, a, line)) return false;
        if (!tensor_cap_identity_holds(e.with_virtual_rank(testgen::random_int(rng, -2, 6)), a,
                                       line)) {
            return false;
        }
        if (dual(dual(a)) != a) return false;

        const int deg_b = testgen::random_int(rng, -5, 5);
        if (tensor_line(tensor_line(a, line), LineBundle(n, deg_b)) !=
            tensor_line(a, LineBundle(n, line.degree() + deg_b))) {
            return false;
        }
        if (dual(tensor_line(a, line)) != tensor_line(dual(a), LineBundle(n, -line.degree()))) {
            return false;
        }

        const int codim = testgen::random_int(rng, 0, 4);
        if (tensor_shifted(a, line, codim) !=
            power(line.total_chern(), codim) * tensor_line(a, line)) {
            return false;
        }

        const ChowClass s_x = testgen::random_class(rng, n);
        const LineBundle positive(n, testgen::random_int(rng, 1, 5));
        if (segre_complement_compact(s_x, a, positive) !=
            segre_complement_expanded(s_x, a, positive)) {
            return false;
        }
    }
    return true;
}

bool criterion_roundtrip() {
    std::mt19937 rng(1003);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = testgen::random_int(rng, 1, 8);
        const int d = testgen::random_int(rng, 1, 5);
        const ChowClass s_y = testgen::random_class(rng, n);
        if (invert_milnor_to_segre(milnor_hypersurface(d, s_y, n), d, n) != s_y) return false;
    }
    return true;
}

bool criterion_identity_checks() {
    const int n = 4;
    const ChowClass s_x = segre_ci({2, 1}, n);
    const ChowClass s_1 = segre_ci({2}, n);
    const ChowClass s_2 = segre_ci({1}, n);
    const ChowClass s_12 = segre_ci({3}, n);
    if (!residual_segre_identity_holds(s_x, s_1, s_2, s_12, 2, 1)) return false;

    const ChowClass s_y1(n);
    const ChowClass s_y2 = segre_linear_subspace(1, n);
    const ChowClass s_xbar = cls(n, {0, 0, 2, -4, 0});
    const ChowClass s_x12 = segre_ci({1, 2}, n);
    const ChowClass milnor_x = ChowClass::hyperplane_power(n, 3);
    const AmbientSpace p4 = AmbientSpace::projective(n);
    if (!codim2_difference_identity_holds(s_y1, s_y2, s_xbar, s_x12, 1, 2, milnor_x, p4)) {
        return false;
    }
    if (milnor_m_class(milnor_x, p4) != cls(n, {0, 0, 0, 1, -5})) return false;

    // Negative controls: every single-coefficient perturbation must be caught.
    for (int i = 0; i <= n; ++i) {
        auto perturbed = s_x.coefficients();
        perturbed[static_cast<size_t>(i)] += 1;
        if (residual_segre_identity_holds(ChowClass(n, perturbed), s_1, s_2, s_12, 2, 1)) {
            return false;
        }
        auto perturbed_bar = s_xbar.coefficients();
        perturbed_bar[static_cast<size_t>(i)] += 1;
        if (codim2_difference_identity_holds(s_y1, s_y2, ChowClass(n, perturbed_bar), s_x12, 1,
                                             2, milnor_x, p4)) {
            return false;
        }
    }
    return true;
}

bool criterion_smooth_degeneration() {
    for (int n = 2; n <= 6; ++n) {
        for (int d = 1; d <= 4; ++d) {
            const ChowClass zero(n);
            const Scenario hyper = make_hypersurface_scenario(n, d, SingularSchemeSegre::zero());
            if (!milnor_hypersurface(d, zero, n).is_zero()) return false;
            if (!milnor_ci_raw(hyper).is_zero()) return false;
            if (csm_hypersurface(d, zero, n) != fulton_class(hyper)) return false;
            if (d <= n - 1) {
                const Scenario ci =
                    make_global_ci_scenario(n, {d}, d + 1, SingularSchemeSegre::zero());
                if (!milnor_signed(ci).is_zero()) return false;
                if (fulton_class(ci) + milnor_signed(ci) != fulton_class(ci)) return false;
            }
        }
    }
    for (int n = 0; n <= 8; ++n) {
        const AmbientSpace space = AmbientSpace::projective(n);
        if (euler_characteristic(space.tangent_chern) != n + 1) return false;
    }
    return true;
}

bool criterion_cli_verify_paper() {
    const ProcessResult verify = run_cli("verify-paper");
    if (verify.exit_code != 0) return false;
    if (verify.output.find("FAIL") != std::string::npos) return false;
    if (verify.output.find("PASS") == std::string::npos) return false;

    const ProcessResult machine_a = run_cli("verify-paper --format machine");
    const ProcessResult machine_b = run_cli("verify-paper --format machine");
    if (machine_a.exit_code != 0 || machine_b.exit_code != 0) return false;
    if (machine_a.output != machine_b.output) return false;
    if (machine_a.output.find("fail") != std::string::npos) return false;

    // A scenario-driven command must also be byte-deterministic.
    const auto path = std::filesystem::temp_directory_path() / "chowcalc_acceptance_union.json";
    {
        std::ofstream out(path);
        out << R"({
  "ambient": {"dim": 4},
  "kind": "union2",
  "degrees": [2, 1],
  "singular_segre": {"kind": "linear_subspace", "dim": 1},
  "singular_segre_1": {"kind": "linear_subspace", "dim": 1},
  "singular_segre_2": {"kind": "zero"}
})";
    }
    const std::string command = "invert-milnor --scenario " + path.string() + " --format machine";
    const ProcessResult run_a = run_cli(command);
    const ProcessResult run_b = run_cli(command);
    std::filesystem::remove(path);
    if (run_a.exit_code != 0 || run_a.output != run_b.output) return false;
    return run_a.output.find("segre_sing: 0,0,2,-4,0") != std::string::npos;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
        {"1 intersection example: signed Milnor class is [P^1], euler 4",
         criterion_intersection_example},
        {"2 union example: Milnor class 2[P^2]-4[P^1]+10[P^0], recovered Segre 2[P^2]-4[P^1]",
         criterion_union_example},
        {"3 codimension-one reduction on 1000 random scenarios", criterion_codim1_reduction},
        {"4 dual/tensor calculus identities on 200 random instances each",
         criterion_calculus_properties},
        {"5 invert-milnor round trip on 100 random triples", criterion_roundtrip},
        {"6 residual and difference identities, with negative controls",
         criterion_identity_checks},
        {"7 smooth degeneration: zero Milnor class, csm = fulton, euler(P^n) = n+1",
         criterion_smooth_degeneration},
        {"8 CLI verify-paper passes and machine output is byte-deterministic",
         criterion_cli_verify_paper},
    };

    bool all_ok = true;
    for (const auto& [name, run] : criteria) {
        bool ok = false;
        try {
            ok = run();
        } catch (const std::exception& e) {
            std::cout << "FAIL criterion " << name << " (exception: " << e.what() << ")\n";
            all_ok = false;
            continue;
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << name << '\n';
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
