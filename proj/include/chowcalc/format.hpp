#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "chowcalc/chow_class.hpp"

namespace chowcalc {

enum class OutputFormat { text, machine };

// Dimension-labeled rendering, e.g. "2[P^2] - 4[P^1]"; the zero class is "0".
std::string pretty(const ChowClass& value);

// Codimension-ordered exact coefficient vector, e.g. "0,0,2,-4,0".
std::string machine(const ChowClass& value);

std::ostream& operator<<(std::ostream& os, const ChowClass& value);

// Parses a comma-separated coefficient vector (by codimension, at most
// ambient_dim + 1 entries; missing trailing entries are zero).
ChowClass parse_class_csv(std::string_view csv, int ambient_dim);

// An ordered, uniquely labeled collection of computed classes and numbers,
// all sharing one ambient space.
class ClassReport {
public:
    using Value = std::variant<ChowClass, Rational>;

    explicit ClassReport(int ambient_dim) : ambient_dim_(ambient_dim) {}

    int ambient_dim() const { return ambient_dim_; }
    void add(std::string label, ChowClass value);
    void add(std::string label, Rational value);
    const std::vector<std::pair<std::string, Value>>& entries() const { return entries_; }

private:
    int ambient_dim_;
    std::vector<std::pair<std::string, Value>> entries_;
};

// One "label: value" line per entry, in insertion order.
std::string render(const ClassReport& report, OutputFormat format);

}  // namespace chowcalc
