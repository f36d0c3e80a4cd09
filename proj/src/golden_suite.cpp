#include "chowcalc/golden_suite.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "chowcalc/char_classes.hpp"

namespace chowcalc {

GoldenItem golden_class_check(std::string name, const ChowClass& expected,
                              const ChowClass& computed) {
    return GoldenItem{std::move(name), expected == computed, pretty(expected), pretty(computed)};
}

GoldenItem golden_number_check(std::string name, const Rational& expected,
                               const Rational& computed) {
    return GoldenItem{std::move(name), expected == computed, to_string(expected),
                      to_string(computed)};
}

GoldenItem golden_flag_check(std::string name, bool holds) {
    return GoldenItem{std::move(name), holds, "true", holds ? "true" : "false"};
}

std::vector<GoldenItem> run_golden_suite() {
    const int n = 4;
    const auto cls = [n](std::vector<Rational> coeffs) { return ChowClass(n, std::move(coeffs)); };

    // The running configuration: in P^4, the quadric cone Q (degree 2,
    // singular along a line), the hyperplane Hs (degree 1, smooth), their
    // intersection X = Q cap Hs, and the union Z = Q cup Hs (degree 3, whose
    // singular scheme carries the Segre class this suite recovers).
    const ChowClass s_line = segre_linear_subspace(1, n);
    const Scenario intersection = make_global_ci_scenario(
        n, {1}, 2, SingularSchemeSegre::linear_subspace(1));

    std::vector<GoldenItem> items;

    // Intersection scenario: Milnor class [P^1], Euler characteristic 4.
    const ChowClass milnor_x_raw = milnor_ci_raw(intersection);
    const ChowClass milnor_x = milnor_signed(intersection);
    const ChowClass fulton_x = fulton_class(intersection);
    const ChowClass csm_x = fulton_x + milnor_x;
    items.push_back(golden_class_check("quadric-cap-hyperplane/milnor-raw",
                                       cls({0, 0, 0, -1, 0}), milnor_x_raw));
    items.push_back(golden_class_check("quadric-cap-hyperplane/milnor-signed",
                                       cls({0, 0, 0, 1, 0}), milnor_x));
    items.push_back(golden_class_check("quadric-cap-hyperplane/csm", cls({0, 0, 2, 5, 4}), csm_x));
    items.push_back(golden_number_check("quadric-cap-hyperplane/euler", Rational(4),
                                        euler_characteristic(csm_x)));

    // Constituent CSM classes and the union's Fulton class.
    const ChowClass csm_q = csm_hypersurface(2, s_line, n);
    const ChowClass csm_h = csm_hypersurface(1, ChowClass(n), n);
    const ChowClass fulton_z =
        fulton_class(make_hypersurface_scenario(n, 3, SingularSchemeSegre::zero()));
    items.push_back(golden_class_check("union-degree-3/csm-quadric", cls({0, 2, 6, 7, 4}), csm_q));
    items.push_back(
        golden_class_check("union-degree-3/csm-hyperplane", cls({0, 1, 4, 6, 4}), csm_h));
    items.push_back(
        golden_class_check("union-degree-3/fulton", cls({0, 3, 6, 12, -6}), fulton_z));

    // Milnor class of the union by inclusion-exclusion, then the recovered
    // Segre class of its singular scheme, and the round trip back.
    const ChowClass csm_z = csm_inclusion_exclusion2(csm_q, csm_h, csm_x);
    const ChowClass milnor_z = csm_z - fulton_z;
    const ChowClass segre_zs = invert_milnor_to_segre(milnor_z, 3, n);
    items.push_back(golden_class_check("union-degree-3/csm", cls({0, 3, 8, 8, 4}), csm_z));
    items.push_back(
        golden_class_check("union-degree-3/milnor", cls({0, 0, 2, -4, 10}), milnor_z));
    items.push_back(golden_number_check("union-degree-3/euler", Rational(4),
                                        euler_characteristic(csm_z)));
    items.push_back(golden_class_check("union-degree-3/segre-singular-recovered",
                                       cls({0, 0, 2, -4, 0}), segre_zs));
    items.push_back(golden_class_check(
        "union-degree-3/milnor-from-recovered-segre", milnor_z,
        milnor_hypersurface(3, segre_zs, n)));

    // The two alternative-route identities on the same configuration.
    items.push_back(golden_flag_check(
        "identities/residual-segre",
        residual_segre_identity_holds(segre_ci({2, 1}, n), segre_ci({2}, n), segre_ci({1}, n),
                                      segre_ci({3}, n), 2, 1)));
    items.push_back(golden_flag_check(
        "identities/codim2-difference",
        codim2_difference_identity_holds(ChowClass(n), s_line, segre_zs, segre_ci({1, 2}, n), 1,
                                         2, milnor_x, AmbientSpace::projective(n))));

    std::sort(items.begin(), items.end(),
              [](const GoldenItem& a, const GoldenItem& b) { return a.name < b.name; });
    return items;
}

bool all_passed(const std::vector<GoldenItem>& items) {
    return std::all_of(items.begin(), items.end(),
                       [](const GoldenItem& item) { return item.passed; });
}

std::string render_golden_report(const std::vector<GoldenItem>& items, OutputFormat format) {
    std::ostringstream out;
    size_t passed = 0;
    for (const auto& item : items) {
        if (item.passed) ++passed;
        if (format == OutputFormat::text) {
            out << (item.passed ? "PASS " : "FAIL ") << item.name;
            if (item.passed) {
                out << ": " << item.computed;
            } else {
                out << ": expected " << item.expected << ", computed " << item.computed;
            }
            out << '\n';
        } else {
            out << item.name << ": " << (item.passed ? "pass" : "fail") << '\n';
        }
    }
    out << "verify-paper: " << passed << '/' << items.size() << " passed\n";
    return out.str();
}

}  // namespace chowcalc
