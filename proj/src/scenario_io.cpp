#include "chowcalc/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace chowcalc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& field,
                       const std::string& message) {
    throw ScenarioError(origin + ": " + field + ": " + message);
}

// Byte offset -> "line L, column C" for parse diagnostics.
std::string locate(const std::string& text, size_t byte) {
    size_t line = 1;
    size_t column = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

int require_int(const json& value, const std::string& origin, const std::string& field) {
    if (!value.is_number_integer()) {
        fail(origin, field, "expected an integer (floating-point values are rejected)");
    }
    const auto wide = value.get<long long>();
    if (wide < -1000000 || wide > 1000000) {
        fail(origin, field, "value out of supported range");
    }
    return static_cast<int>(wide);
}

Rational coefficient_from(const json& value, const std::string& origin,
                          const std::string& field) {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(origin, field, e.what());
        }
    }
    fail(origin, field, "expected an integer or a rational string \"p/q\"");
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> known,
                         const std::string& origin, const std::string& field) {
    for (const auto& [key, _] : object.items()) {
        bool found = false;
        for (const char* k : known) {
            if (key == k) {
                found = true;
                break;
            }
        }
        if (!found) fail(origin, field, "unknown field \"" + key + "\"");
    }
}

SingularSchemeSegre singular_from(const json& value, int ambient_dim, const std::string& origin,
                                  const std::string& field) {
    if (!value.is_object()) fail(origin, field, "expected an object with a \"kind\" field");
    if (!value.contains("kind") || !value.at("kind").is_string()) {
        fail(origin, field, "missing string field \"kind\"");
    }
    const std::string kind = value.at("kind").get<std::string>();
    if (kind == "zero") {
        reject_unknown_keys(value, {"kind"}, origin, field);
        return SingularSchemeSegre::zero();
    }
    if (kind == "linear_subspace") {
        reject_unknown_keys(value, {"kind", "dim"}, origin, field);
        if (!value.contains("dim")) fail(origin, field + ".dim", "missing field");
        const int dim = require_int(value.at("dim"), origin, field + ".dim");
        if (dim < 0 || dim >= ambient_dim) {
            fail(origin, field + ".dim",
                 "linear subspace dimension must satisfy 0 <= dim < " +
                     std::to_string(ambient_dim));
        }
        return SingularSchemeSegre::linear_subspace(dim);
    }
    if (kind == "coefficients") {
        reject_unknown_keys(value, {"kind", "by_codim"}, origin, field);
        if (!value.contains("by_codim") || !value.at("by_codim").is_array()) {
            fail(origin, field + ".by_codim", "missing coefficient array");
        }
        const auto& array = value.at("by_codim");
        if (array.size() > static_cast<size_t>(ambient_dim) + 1) {
            fail(origin, field + ".by_codim",
                 "at most " + std::to_string(ambient_dim + 1) + " coefficients fit in P^" +
                     std::to_string(ambient_dim) + ", got " + std::to_string(array.size()));
        }
        std::vector<Rational> coeffs;
        coeffs.reserve(array.size());
        for (size_t i = 0; i < array.size(); ++i) {
            coeffs.push_back(coefficient_from(array.at(i), origin,
                                              field + ".by_codim[" + std::to_string(i) + "]"));
        }
        return SingularSchemeSegre::explicit_class(ChowClass(ambient_dim, std::move(coeffs)));
    }
    fail(origin, field + ".kind",
         "unknown kind \"" + kind + "\" (expected zero, linear_subspace, or coefficients)");
}

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(origin + ": malformed document at " + locate(text, e.byte) + ": " +
                            e.what());
    }
    if (!doc.is_object()) fail(origin, "$", "expected a JSON object");
    reject_unknown_keys(doc,
                        {"ambient", "kind", "degrees", "singular_segre", "singular_segre_1",
                         "singular_segre_2", "singular_segre_union"},
                        origin, "$");

    if (!doc.contains("ambient") || !doc.at("ambient").is_object() ||
        !doc.at("ambient").contains("dim")) {
        fail(origin, "$.ambient.dim", "missing field (the ambient dimension is mandatory)");
    }
    reject_unknown_keys(doc.at("ambient"), {"dim"}, origin, "$.ambient");
    const int ambient_dim = require_int(doc.at("ambient").at("dim"), origin, "$.ambient.dim");
    if (ambient_dim < 1) fail(origin, "$.ambient.dim", "ambient dimension must be at least 1");

    if (!doc.contains("kind") || !doc.at("kind").is_string()) {
        fail(origin, "$.kind", "missing string field");
    }
    const std::string kind_text = doc.at("kind").get<std::string>();
    ScenarioKind kind;
    if (kind_text == "hypersurface") {
        kind = ScenarioKind::hypersurface;
    } else if (kind_text == "global_ci") {
        kind = ScenarioKind::global_ci;
    } else if (kind_text == "union2") {
        kind = ScenarioKind::union2;
    } else {
        fail(origin, "$.kind",
             "unknown kind \"" + kind_text +
                 "\" (expected hypersurface, global_ci, or union2)");
    }

    if (!doc.contains("degrees") || !doc.at("degrees").is_array() || doc.at("degrees").empty()) {
        fail(origin, "$.degrees", "expected a non-empty array of positive integers");
    }
    std::vector<int> degrees;
    for (size_t i = 0; i < doc.at("degrees").size(); ++i) {
        const std::string field = "$.degrees[" + std::to_string(i) + "]";
        const int d = require_int(doc.at("degrees").at(i), origin, field);
        if (d < 1) fail(origin, field, "degrees must be positive, got " + std::to_string(d));
        degrees.push_back(d);
    }

    Scenario scenario{AmbientSpace::projective(ambient_dim),
                      kind,
                      std::move(degrees),
                      std::nullopt,
                      std::nullopt,
                      std::nullopt,
                      std::nullopt};

    const auto read_singular = [&](const char* key) -> std::optional<SingularSchemeSegre> {
        if (!doc.contains(key)) return std::nullopt;
        return singular_from(doc.at(key), ambient_dim, origin, std::string("$.") + key);
    };
    scenario.singular_segre = read_singular("singular_segre");
    scenario.singular_segre_1 = read_singular("singular_segre_1");
    scenario.singular_segre_2 = read_singular("singular_segre_2");
    scenario.singular_segre_union = read_singular("singular_segre_union");

    try {
        scenario.validate();
    } catch (const ScenarioError& e) {
        throw ScenarioError(origin + ": " + e.what());
    }
    return scenario;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScenarioError(path + ": cannot open scenario file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str(), path);
}

}  // namespace chowcalc
