#pragma once

#include "chowcalc/bundles.hpp"
#include "chowcalc/chow_class.hpp"

namespace chowcalc {

// The dual of a class: the codimension-i component is scaled by (-1)^i.
// An involution, and it matches c(E) -> c(E dual) on total Chern classes.
ChowClass dual(const ChowClass& a);

// The Picard-group action of a line bundle L on a class: the codimension-i
// component is divided by c(L)^i. Acting by O(a) then O(b) equals acting by
// O(a+b).
ChowClass tensor_line(const ChowClass& a, const LineBundle& l);

// The tensor action taken inside a codimension-d regularly embedded
// subvariety, pushed to the ambient space:
//   c(L)^d cap (a tensor L).
ChowClass tensor_shifted(const ChowClass& a, const LineBundle& l, int codim);

// Does (c(E) cap a)^dual == c(E dual) cap a^dual hold? Always true; exposed
// so the calculus can be checked on arbitrary inputs.
bool dual_cap_identity_holds(const SplitBundle& e, const ChowClass& a);

// Does (c(E) cap a) tensor L == c(E tensor L) / c(L)^r cap (a tensor L)
// hold, with r the virtual rank of E? The three-argument form derives
// c(E tensor L) from the bundle itself (see chern_after_twist); the
// four-argument form takes it from the caller, for Grothendieck-group
// difference classes described by an explicit Chern class.
bool tensor_cap_identity_holds(const SplitBundle& e, const ChowClass& a, const LineBundle& l);
bool tensor_cap_identity_holds(const SplitBundle& e, const ChowClass& a, const LineBundle& l,
                               const ChowClass& chern_e_tensor_l);

// The Segre class of a hypersurface X minus the locus described by sY, in
// two algebraically equal forms. sX is s(X, M), sY the Segre class of the
// subscheme being removed, and l the line bundle O(X).
//
// Compact form:   sX + c(L)^{-1} cap (sY^dual tensor L).
// Expanded form, dimension by dimension with d = deg X:
//   result_c = sX_c + (-1)^c * sum_{j=0..c} C(c, j) d^j sY_{c-j}
// (indices are codimensions; the d^j factor is the j-fold self-intersection
// of the divisor class of X).
ChowClass segre_complement_compact(const ChowClass& s_x, const ChowClass& s_y,
                                   const LineBundle& l);
ChowClass segre_complement_expanded(const ChowClass& s_x, const ChowClass& s_y,
                                    const LineBundle& l);

}  // namespace chowcalc
