#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "chowcalc/golden_suite.hpp"

using namespace chowcalc;

TEST_CASE("every built-in worked example passes") {
    const auto items = run_golden_suite();
    CHECK(items.size() >= 12);
    CHECK(all_passed(items));
    for (const auto& item : items) {
        CAPTURE(item.name);
        CHECK(item.passed);
        CHECK(item.expected == item.computed);
    }
    CHECK(std::is_sorted(items.begin(), items.end(),
                         [](const GoldenItem& a, const GoldenItem& b) { return a.name < b.name; }));
}

TEST_CASE("the harness reports mismatches instead of swallowing them") {
    const ChowClass expected(4, {Rational(0), 0, 0, 1, 0});
    const ChowClass flipped(4, {Rational(0), 0, 0, -1, 0});
    const GoldenItem item = golden_class_check("negative-control", expected, flipped);
    CHECK_FALSE(item.passed);
    CHECK(item.expected == "1[P^1]");
    CHECK(item.computed == "-1[P^1]");
    CHECK_FALSE(all_passed({item}));

    const std::string text = render_golden_report({item}, OutputFormat::text);
    CHECK(text.find("FAIL negative-control") != std::string::npos);
    CHECK(text.find("expected 1[P^1], computed -1[P^1]") != std::string::npos);
    CHECK(text.find("0/1 passed") != std::string::npos);

    const std::string machine = render_golden_report({item}, OutputFormat::machine);
    CHECK(machine.find("negative-control: fail") != std::string::npos);
}

TEST_CASE("report rendering is byte-deterministic") {
    const auto items = run_golden_suite();
    CHECK(render_golden_report(items, OutputFormat::machine) ==
          render_golden_report(run_golden_suite(), OutputFormat::machine));
    CHECK(render_golden_report(items, OutputFormat::text) ==
          render_golden_report(run_golden_suite(), OutputFormat::text));
}
