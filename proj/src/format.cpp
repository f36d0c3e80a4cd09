#include "chowcalc/format.hpp"

#include <sstream>
#include <stdexcept>

namespace chowcalc {

std::string pretty(const ChowClass& value) {
    const int n = value.ambient_dim();
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= n; ++i) {
        const Rational& q = value.coefficient(i);
        if (q == 0) continue;
        if (first) {
            if (q < 0) out << '-';
            first = false;
        } else {
            out << (q < 0 ? " - " : " + ");
        }
        out << to_string(abs(q)) << "[P^" << (n - i) << ']';
    }
    if (first) return "0";
    return out.str();
}

std::string machine(const ChowClass& value) {
    std::ostringstream out;
    const int n = value.ambient_dim();
    for (int i = 0; i <= n; ++i) {
        if (i > 0) out << ',';
        out << to_string(value.coefficient(i));
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const ChowClass& value) {
    return os << '[' << machine(value) << " in P^" << value.ambient_dim() << ']';
}

ChowClass parse_class_csv(std::string_view csv, int ambient_dim) {
    std::vector<Rational> coeffs;
    size_t start = 0;
    while (true) {
        const size_t comma = csv.find(',', start);
        const std::string_view piece =
            comma == std::string_view::npos ? csv.substr(start) : csv.substr(start, comma - start);
        coeffs.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ChowClass(ambient_dim, std::move(coeffs));
}

void ClassReport::add(std::string label, ChowClass value) {
    if (value.ambient_dim() != ambient_dim_) {
        throw AmbientMismatch("report for P^" + std::to_string(ambient_dim_) +
                              " cannot hold a class from P^" +
                              std::to_string(value.ambient_dim()) + " (label " + label + ")");
    }
    for (const auto& [existing, _] : entries_) {
        if (existing == label) throw ChowError("duplicate report label: " + label);
    }
    entries_.emplace_back(std::move(label), std::move(value));
}

void ClassReport::add(std::string label, Rational value) {
    for (const auto& [existing, _] : entries_) {
        if (existing == label) throw ChowError("duplicate report label: " + label);
    }
    entries_.emplace_back(std::move(label), std::move(value));
}

std::string render(const ClassReport& report, OutputFormat format) {
    std::ostringstream out;
    for (const auto& [label, value] : report.entries()) {
        out << label << ": ";
        if (const auto* cls = std::get_if<ChowClass>(&value)) {
            out << (format == OutputFormat::text ? pretty(*cls) : machine(*cls));
        } else {
            out << to_string(std::get<Rational>(value));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace chowcalc
