#pragma once

#include <string>
#include <vector>

#include "chowcalc/chow_class.hpp"
#include "chowcalc/format.hpp"

namespace chowcalc {

// One item of the built-in worked-example verification suite.
struct GoldenItem {
    std::string name;
    bool passed;
    std::string expected;
    std::string computed;
};

GoldenItem golden_class_check(std::string name, const ChowClass& expected,
                              const ChowClass& computed);
GoldenItem golden_number_check(std::string name, const Rational& expected,
                               const Rational& computed);
GoldenItem golden_flag_check(std::string name, bool holds);

// Recomputes every built-in worked example (the singular quadric cut by a
// hyperplane in P^4, and the degree-3 union it sits inside) and compares
// against the frozen reference values. Items come back sorted by name.
std::vector<GoldenItem> run_golden_suite();

bool all_passed(const std::vector<GoldenItem>& items);

// One line per item plus a summary line; byte-deterministic.
std::string render_golden_report(const std::vector<GoldenItem>& items, OutputFormat format);

}  // namespace chowcalc
