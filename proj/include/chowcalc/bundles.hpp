#pragma once

#include <optional>
#include <vector>

#include "chowcalc/chow_class.hpp"

namespace chowcalc {

// The line bundle O(d) on P^n. Determined by its first Chern class dH.
class LineBundle {
public:
    LineBundle(int ambient_dim, int degree);

    int ambient_dim() const { return ambient_dim_; }
    int degree() const { return degree_; }

    // 1 + dH.
    ChowClass total_chern() const;

private:
    int ambient_dim_;
    int degree_;
};

// A direct sum of line bundles O(a_1) + ... + O(a_r) on P^n. The virtual rank
// defaults to the number of twists; overriding it models a class in the
// Grothendieck group that differs from the honest sum by copies of the
// trivial bundle (which leave every Chern class unchanged).
class SplitBundle {
public:
    SplitBundle(int ambient_dim, std::vector<int> twists);

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<int>& twists() const { return twists_; }
    int virtual_rank() const;

    SplitBundle with_virtual_rank(int rank) const;

    // Product of (1 + a_i H) over the twists, truncated.
    ChowClass total_chern() const;

private:
    int ambient_dim_;
    std::vector<int> twists_;
    std::optional<int> virtual_rank_override_;
};

// Negates every twist: c_1 of each summand flips sign.
SplitBundle dual_bundle(const SplitBundle& e);

// Tensoring by a line bundle adds its degree to every twist.
SplitBundle twist_bundle(const SplitBundle& e, const LineBundle& l);

// c(E tensor L) as a class. For an honest sum this is the product of
// (1 + (a_i + d)H); a virtual-rank override contributes the factor
// (1 + dH)^(rank - #twists) from the implied trivial summands.
ChowClass chern_after_twist(const SplitBundle& e, const LineBundle& l);

}  // namespace chowcalc
