#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "chowcalc/chow_class.hpp"
#include "chowcalc/tensor_dual.hpp"

namespace chowcalc {

// A scenario file failed to parse or violates a scenario invariant.
struct ScenarioError : ChowError {
    using ChowError::ChowError;
};

// s(X, M) for X the complete intersection of hypersurfaces of the given
// degrees in P^n: (prod d_i) H^k capped with the inverse total Chern class of
// the normal bundle (+) O(d_i). Components below codimension k vanish.
ChowClass segre_ci(const std::vector<int>& degrees, int ambient_dim);

// s(P^k, P^n) = H^{n-k} (1+H)^{-(n-k)}, for 0 <= k < n.
ChowClass segre_linear_subspace(int subspace_dim, int ambient_dim);

// The Segre class of the singular scheme of a scenario's object. Either a
// built-in shape (smooth: zero; a linear subspace of given dimension) or an
// explicit class supplied by the caller.
class SingularSchemeSegre {
public:
    static SingularSchemeSegre zero();
    static SingularSchemeSegre linear_subspace(int dim);
    static SingularSchemeSegre explicit_class(ChowClass value);

    // The class in A_*(P^n). Built-in forms are evaluated here; an explicit
    // class must already live in P^n.
    ChowClass resolve(int ambient_dim) const;

private:
    struct Zero {};
    struct Linear {
        int dim;
    };
    std::variant<Zero, Linear, ChowClass> value_;

    SingularSchemeSegre() : value_(Zero{}) {}
};

enum class ScenarioKind { hypersurface, global_ci, union2 };

// A described geometric situation in P^n. Degrees are listed as in the
// scenario file: one for a hypersurface; for a global complete intersection
// all k of them, the last being the degree of the designated bundle L (the
// first k-1 hypersurfaces are declared to cut out a smooth intersection -
// that hypothesis is trusted, not checked); two for a union of hypersurfaces.
//
// singular_segre is the singular scheme of the scenario's object; for a
// union2 scenario the object whose Milnor class drives the computation is the
// intersection M1 cap M2, so singular_segre describes that intersection,
// while singular_segre_1 / _2 describe the constituents and
// singular_segre_union the union itself (all three optional).
struct Scenario {
    AmbientSpace ambient;
    ScenarioKind kind;
    std::vector<int> degrees;
    std::optional<SingularSchemeSegre> singular_segre;
    std::optional<SingularSchemeSegre> singular_segre_1;
    std::optional<SingularSchemeSegre> singular_segre_2;
    std::optional<SingularSchemeSegre> singular_segre_union;

    // Throws ScenarioError when a field is missing, out of range, or not
    // meaningful for the kind.
    void validate() const;
};

Scenario make_hypersurface_scenario(int ambient_dim, int degree, SingularSchemeSegre singular);
Scenario make_global_ci_scenario(int ambient_dim, std::vector<int> smooth_degrees,
                                 int last_degree, SingularSchemeSegre singular);
Scenario make_union2_scenario(int ambient_dim, int degree1, int degree2,
                              std::optional<SingularSchemeSegre> singular_intersection,
                              std::optional<SingularSchemeSegre> singular_1,
                              std::optional<SingularSchemeSegre> singular_2,
                              std::optional<SingularSchemeSegre> singular_union);

// c_F(X) = c(TM) cap s(X, M) for a hypersurface or complete-intersection
// scenario. Union scenarios are rejected: the union is not described by a
// normal-bundle presentation here.
ChowClass fulton_class(const Scenario& scenario);

// s°(X, M) = s(X, M) + c(O(d))^{-1} cap (sY^dual tensor O(d)): the class
// whose cap with c(TM) is the CSM class of the degree-d hypersurface X with
// singular-scheme Segre class sY.
ChowClass sm_segre_hypersurface(int degree, const ChowClass& singular_segre, int ambient_dim);

// c_SM(X) = c(TM) cap s°(X, M); its integral is the topological Euler
// characteristic.
ChowClass csm_hypersurface(int degree, const ChowClass& singular_segre, int ambient_dim);

// The Milnor class of a degree-d hypersurface:
//   c(TM)/c(O(d)) cap (sY^dual tensor O(d)),
// which equals c_SM - c_F for the same hypersurface.
ChowClass milnor_hypersurface(int degree, const ChowClass& singular_segre, int ambient_dim);

// The Milnor class of a global complete intersection cut out by (+) O(d_i),
// with L = O(d_k) the designated last factor:
//   c(TM)/c(E) cap (c(E^dual tensor L) cap (sY^dual tensor L)).
// This is the raw right-hand side, before any sign convention; for k = 1 it
// reduces exactly to milnor_hypersurface. Accepts hypersurface scenarios as
// the k = 1 case.
ChowClass milnor_ci_raw(const Scenario& scenario);

// (-1)^(k-1) times milnor_ci_raw: the convention under which the Milnor
// class equals c_SM - c_F whenever both are known.
ChowClass milnor_signed(const Scenario& scenario);

// The unique class m with c(TM) cap m = milnor.
ChowClass milnor_m_class(const ChowClass& milnor, const AmbientSpace& ambient);

// Recovers the singular-scheme Segre class of a degree-d hypersurface from
// its Milnor class:
//   sY = ((c(O(d))/c(TM)) cap milnor)^dual tensor O(d).
// Exact inverse of milnor_hypersurface for every input.
ChowClass invert_milnor_to_segre(const ChowClass& milnor, int degree, int ambient_dim);

// Inclusion-exclusion for two hypersurfaces: the CSM (resp. SM-Segre) class
// of the union from the constituents and their intersection.
ChowClass csm_inclusion_exclusion2(const ChowClass& csm_1, const ChowClass& csm_2,
                                   const ChowClass& csm_12);
ChowClass sm_segre_union2(const ChowClass& sm_1, const ChowClass& sm_2, const ChowClass& sm_12);

// Residual-intersection identity for X = M1 cap M2 (degrees d1, d2):
//   s(X,M) = s(M1,M) + s(M2,M) - s(M1 cup M2, M)
//            - c(O(d1+d2))^{-1} cap (s(X,M)^dual tensor O(d1+d2)).
// Evaluates both sides and reports equality.
bool residual_segre_identity_holds(const ChowClass& s_x, const ChowClass& s_1,
                                   const ChowClass& s_2, const ChowClass& s_12, int degree1,
                                   int degree2);

// Codimension-two difference identity: with Y_i the singular schemes of the
// constituents, Xbar that of the union, and X = M1 cap M2,
//   c(TM)^{-1} cap M(X) = c(O(d1))^{-1} cap (sY1^dual tensor O(d1))
//                       + c(O(d2))^{-1} cap (sY2^dual tensor O(d2))
//                       - c(O(d1+d2))^{-1} cap ((sXbar - sX)^dual tensor O(d1+d2)).
// Evaluates both sides (the left from the supplied signed Milnor class) and
// reports equality.
bool codim2_difference_identity_holds(const ChowClass& s_y1, const ChowClass& s_y2,
                                      const ChowClass& s_xbar, const ChowClass& s_x, int degree1,
                                      int degree2, const ChowClass& milnor_signed_value,
                                      const AmbientSpace& ambient);

// The integral of a CSM class.
Rational euler_characteristic(const ChowClass& csm);

// Everything the inclusion-exclusion route computes for a union of two
// hypersurfaces. Requires singular_segre (the intersection), singular_segre_1
// and singular_segre_2; at least one constituent must be smooth (zero class)
// to designate the bundle L of the intersection's Milnor-class formula.
struct Union2Classes {
    ChowClass csm_1;
    ChowClass csm_2;
    ChowClass fulton_intersection;
    ChowClass milnor_intersection;  // signed
    ChowClass csm_intersection;
    ChowClass fulton_union;
    ChowClass csm_union;
    ChowClass milnor_union;
    ChowClass segre_union_singular_recovered;  // from inverting milnor_union
    int union_degree;
};

Union2Classes union2_pipeline(const Scenario& scenario);

}  // namespace chowcalc
