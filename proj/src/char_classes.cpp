#include "chowcalc/char_classes.hpp"

#include <string>
#include <utility>

namespace chowcalc {

namespace {

void require_positive_degrees(const std::vector<int>& degrees) {
    for (int d : degrees) {
        if (d < 1) {
            throw ChowError("hypersurface degrees must be positive integers, got " +
                            std::to_string(d));
        }
    }
}

const char* kind_name(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::hypersurface: return "hypersurface";
        case ScenarioKind::global_ci: return "global_ci";
        case ScenarioKind::union2: return "union2";
    }
    return "?";
}

ChowClass resolve_required(const std::optional<SingularSchemeSegre>& s, int ambient_dim,
                           const char* field, const char* context) {
    if (!s) {
        throw ScenarioError(std::string(context) + ": scenario field " + field + " is required");
    }
    return s->resolve(ambient_dim);
}

}  // namespace

ChowClass segre_ci(const std::vector<int>& degrees, int ambient_dim) {
    const int n = ambient_dim;
    const int k = static_cast<int>(degrees.size());
    if (k > n) {
        throw DimensionError("complete intersection of codimension " + std::to_string(k) +
                             " does not fit in P^" + std::to_string(n));
    }
    require_positive_degrees(degrees);
    ChowClass normal_chern = ChowClass::unit(n);
    Rational degree_product = 1;
    for (int d : degrees) {
        normal_chern *= LineBundle(n, d).total_chern();
        degree_product *= d;
    }
    return degree_product * (ChowClass::hyperplane_power(n, k) * invert_unit(normal_chern));
}

ChowClass segre_linear_subspace(int subspace_dim, int ambient_dim) {
    const int n = ambient_dim;
    if (subspace_dim < 0 || subspace_dim >= n) {
        throw DimensionError("linear subspace dimension " + std::to_string(subspace_dim) +
                             " out of range for P^" + std::to_string(n) +
                             " (need 0 <= dim < n)");
    }
    const int codim = n - subspace_dim;
    return ChowClass::hyperplane_power(n, codim) *
           power(LineBundle(n, 1).total_chern(), -codim);
}

SingularSchemeSegre SingularSchemeSegre::zero() {
    return SingularSchemeSegre();
}

SingularSchemeSegre SingularSchemeSegre::linear_subspace(int dim) {
    SingularSchemeSegre result;
    result.value_ = Linear{dim};
    return result;
}

SingularSchemeSegre SingularSchemeSegre::explicit_class(ChowClass value) {
    SingularSchemeSegre result;
    result.value_ = std::move(value);
    return result;
}

ChowClass SingularSchemeSegre::resolve(int ambient_dim) const {
    if (std::holds_alternative<Zero>(value_)) {
        return ChowClass(ambient_dim);
    }
    if (const auto* linear = std::get_if<Linear>(&value_)) {
        return segre_linear_subspace(linear->dim, ambient_dim);
    }
    const auto& value = std::get<ChowClass>(value_);
    if (value.ambient_dim() != ambient_dim) {
        throw AmbientMismatch("singular-scheme Segre class lives in P^" +
                              std::to_string(value.ambient_dim()) + ", scenario ambient is P^" +
                              std::to_string(ambient_dim));
    }
    return value;
}

void Scenario::validate() const {
    const int n = ambient.dim;
    if (n < 1) {
        throw ScenarioError("scenario ambient dimension must be at least 1, got " +
                            std::to_string(n));
    }
    if (degrees.empty()) {
        throw ScenarioError("scenario has empty degrees");
    }
    for (int d : degrees) {
        if (d < 1) {
            throw ScenarioError("scenario degrees must be positive integers, got " +
                                std::to_string(d));
        }
    }
    switch (kind) {
        case ScenarioKind::hypersurface:
            if (degrees.size() != 1) {
                throw ScenarioError("hypersurface scenario needs exactly one degree, got " +
                                    std::to_string(degrees.size()));
            }
            break;
        case ScenarioKind::global_ci:
            if (static_cast<int>(degrees.size()) > n) {
                throw ScenarioError("complete intersection of codimension " +
                                    std::to_string(degrees.size()) + " does not fit in P^" +
                                    std::to_string(n));
            }
            break;
        case ScenarioKind::union2:
            if (degrees.size() != 2) {
                throw ScenarioError("union2 scenario needs exactly two degrees, got " +
                                    std::to_string(degrees.size()));
            }
            break;
    }
    if (kind != ScenarioKind::union2) {
        if (!singular_segre) {
            throw ScenarioError(std::string(kind_name(kind)) +
                                " scenario requires a singular_segre entry");
        }
        if (singular_segre_1 || singular_segre_2 || singular_segre_union) {
            throw ScenarioError("constituent/union singular_segre entries are only meaningful "
                                "for union2 scenarios");
        }
    }
    // Resolve every entry now so range errors show up at validation time.
    for (const auto& entry :
         {&singular_segre, &singular_segre_1, &singular_segre_2, &singular_segre_union}) {
        if (entry->has_value()) (*entry)->resolve(n);
    }
}

Scenario make_hypersurface_scenario(int ambient_dim, int degree, SingularSchemeSegre singular) {
    Scenario s{AmbientSpace::projective(ambient_dim), ScenarioKind::hypersurface,
               {degree},       std::move(singular),
               std::nullopt,   std::nullopt,
               std::nullopt};
    s.validate();
    return s;
}

Scenario make_global_ci_scenario(int ambient_dim, std::vector<int> smooth_degrees,
                                 int last_degree, SingularSchemeSegre singular) {
    smooth_degrees.push_back(last_degree);
    Scenario s{AmbientSpace::projective(ambient_dim), ScenarioKind::global_ci,
               std::move(smooth_degrees), std::move(singular),
               std::nullopt,  std::nullopt,
               std::nullopt};
    s.validate();
    return s;
}

Scenario make_union2_scenario(int ambient_dim, int degree1, int degree2,
                              std::optional<SingularSchemeSegre> singular_intersection,
                              std::optional<SingularSchemeSegre> singular_1,
                              std::optional<SingularSchemeSegre> singular_2,
                              std::optional<SingularSchemeSegre> singular_union) {
    Scenario s{AmbientSpace::projective(ambient_dim), ScenarioKind::union2,
               {degree1, degree2},        std::move(singular_intersection),
               std::move(singular_1),     std::move(singular_2),
               std::move(singular_union)};
    s.validate();
    return s;
}

ChowClass fulton_class(const Scenario& scenario) {
    if (scenario.kind == ScenarioKind::union2) {
        throw ScenarioError("fulton_class expects a hypersurface or global_ci scenario; a union "
                            "is not presented as a complete intersection here");
    }
    return scenario.ambient.tangent_chern * segre_ci(scenario.degrees, scenario.ambient.dim);
}

ChowClass sm_segre_hypersurface(int degree, const ChowClass& singular_segre, int ambient_dim) {
    return segre_complement_compact(segre_ci({degree}, ambient_dim), singular_segre,
                                    LineBundle(ambient_dim, degree));
}

ChowClass csm_hypersurface(int degree, const ChowClass& singular_segre, int ambient_dim) {
    return AmbientSpace::projective(ambient_dim).tangent_chern *
           sm_segre_hypersurface(degree, singular_segre, ambient_dim);
}

ChowClass milnor_hypersurface(int degree, const ChowClass& singular_segre, int ambient_dim) {
    const int n = ambient_dim;
    require_positive_degrees({degree});
    const LineBundle line(n, degree);
    return AmbientSpace::projective(n).tangent_chern * invert_unit(line.total_chern()) *
           tensor_line(dual(singular_segre), line);
}

ChowClass milnor_ci_raw(const Scenario& scenario) {
    if (scenario.kind == ScenarioKind::union2) {
        throw ScenarioError("milnor_ci_raw expects a hypersurface or global_ci scenario");
    }
    if (scenario.degrees.empty()) {
        throw ScenarioError("milnor_ci_raw: empty degrees");
    }
    const int n = scenario.ambient.dim;
    const ChowClass s_y =
        resolve_required(scenario.singular_segre, n, "singular_segre", "milnor_ci_raw");
    const LineBundle last(n, scenario.degrees.back());
    const SplitBundle bundle(n, scenario.degrees);
    return scenario.ambient.tangent_chern * invert_unit(bundle.total_chern()) *
           chern_after_twist(dual_bundle(bundle), last) * tensor_line(dual(s_y), last);
}

ChowClass milnor_signed(const Scenario& scenario) {
    const ChowClass raw = milnor_ci_raw(scenario);
    const bool flip = scenario.degrees.size() % 2 == 0;  // (-1)^(k-1)
    return flip ? -raw : raw;
}

ChowClass milnor_m_class(const ChowClass& milnor, const AmbientSpace& ambient) {
    return invert_unit(ambient.tangent_chern) * milnor;
}

ChowClass invert_milnor_to_segre(const ChowClass& milnor, int degree, int ambient_dim) {
    const int n = ambient_dim;
    require_positive_degrees({degree});
    const LineBundle line(n, degree);
    const ChowClass inner = line.total_chern() *
                            invert_unit(AmbientSpace::projective(n).tangent_chern) * milnor;
    return tensor_line(dual(inner), line);
}

ChowClass csm_inclusion_exclusion2(const ChowClass& csm_1, const ChowClass& csm_2,
                                   const ChowClass& csm_12) {
    return csm_1 + csm_2 - csm_12;
}

ChowClass sm_segre_union2(const ChowClass& sm_1, const ChowClass& sm_2, const ChowClass& sm_12) {
    return sm_1 + sm_2 - sm_12;
}

bool residual_segre_identity_holds(const ChowClass& s_x, const ChowClass& s_1,
                                   const ChowClass& s_2, const ChowClass& s_12, int degree1,
                                   int degree2) {
    require_positive_degrees({degree1, degree2});
    const LineBundle both(s_x.ambient_dim(), degree1 + degree2);
    const ChowClass rhs =
        s_1 + s_2 - s_12 - invert_unit(both.total_chern()) * tensor_line(dual(s_x), both);
    return s_x == rhs;
}

bool codim2_difference_identity_holds(const ChowClass& s_y1, const ChowClass& s_y2,
                                      const ChowClass& s_xbar, const ChowClass& s_x, int degree1,
                                      int degree2, const ChowClass& milnor_signed_value,
                                      const AmbientSpace& ambient) {
    require_positive_degrees({degree1, degree2});
    const int n = ambient.dim;
    const auto term = [n](const ChowClass& s, int degree) {
        const LineBundle line(n, degree);
        return invert_unit(line.total_chern()) * tensor_line(dual(s), line);
    };
    const ChowClass rhs =
        term(s_y1, degree1) + term(s_y2, degree2) - term(s_xbar - s_x, degree1 + degree2);
    return milnor_m_class(milnor_signed_value, ambient) == rhs;
}

Rational euler_characteristic(const ChowClass& csm) {
    return csm.integral();
}

Union2Classes union2_pipeline(const Scenario& scenario) {
    if (scenario.kind != ScenarioKind::union2) {
        throw ScenarioError("union2_pipeline expects a union2 scenario, got " +
                            std::string(kind_name(scenario.kind)));
    }
    const int n = scenario.ambient.dim;
    const int d1 = scenario.degrees[0];
    const int d2 = scenario.degrees[1];
    const ChowClass s_y1 = resolve_required(scenario.singular_segre_1, n, "singular_segre_1",
                                            "union2 inclusion-exclusion");
    const ChowClass s_y2 = resolve_required(scenario.singular_segre_2, n, "singular_segre_2",
                                            "union2 inclusion-exclusion");
    const ChowClass s_yx = resolve_required(scenario.singular_segre, n, "singular_segre",
                                            "union2 inclusion-exclusion");

    // The intersection's Milnor class needs a smooth constituent to play the
    // role of the smooth partial intersection; the other one carries L.
    int smooth_degree = 0;
    int last_degree = 0;
    if (s_y1.is_zero()) {
        smooth_degree = d1;
        last_degree = d2;
    } else if (s_y2.is_zero()) {
        smooth_degree = d2;
        last_degree = d1;
    } else {
        throw ScenarioError("union2 inclusion-exclusion requires at least one smooth constituent "
                            "(a zero singular_segre_1 or singular_segre_2)");
    }

    const Scenario intersection = make_global_ci_scenario(
        n, {smooth_degree}, last_degree, SingularSchemeSegre::explicit_class(s_yx));

    Union2Classes out{
        csm_hypersurface(d1, s_y1, n),
        csm_hypersurface(d2, s_y2, n),
        fulton_class(intersection),
        milnor_signed(intersection),
        ChowClass(n),
        ChowClass(n),
        ChowClass(n),
        ChowClass(n),
        ChowClass(n),
        d1 + d2,
    };
    out.csm_intersection = out.fulton_intersection + out.milnor_intersection;
    out.fulton_union =
        fulton_class(make_hypersurface_scenario(n, d1 + d2, SingularSchemeSegre::zero()));
    out.csm_union = csm_inclusion_exclusion2(out.csm_1, out.csm_2, out.csm_intersection);
    out.milnor_union = out.csm_union - out.fulton_union;
    out.segre_union_singular_recovered = invert_milnor_to_segre(out.milnor_union, d1 + d2, n);
    return out;
}

}  // namespace chowcalc
