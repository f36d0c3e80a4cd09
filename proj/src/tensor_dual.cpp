#include "chowcalc/tensor_dual.hpp"

#include <string>
#include <utility>
#include <vector>

namespace chowcalc {

namespace {

void require_same_ambient(const ChowClass& a, int other, const char* what) {
    if (a.ambient_dim() != other) {
        throw AmbientMismatch(std::string(what) + ": ambient spaces differ, P^" +
                              std::to_string(a.ambient_dim()) + " vs P^" + std::to_string(other));
    }
}

void require_positive_degree(const LineBundle& l, const char* what) {
    if (l.degree() < 1) {
        throw ChowError(std::string(what) + ": the hypersurface bundle must be O(d) with d >= 1, got O(" +
                        std::to_string(l.degree()) + ")");
    }
}

}  // namespace

ChowClass dual(const ChowClass& a) {
    const int n = a.ambient_dim();
    std::vector<Rational> coeffs = a.coefficients();
    for (int i = 1; i <= n; i += 2) coeffs[static_cast<size_t>(i)] = -coeffs[static_cast<size_t>(i)];
    return ChowClass(n, std::move(coeffs));
}

ChowClass tensor_line(const ChowClass& a, const LineBundle& l) {
    require_same_ambient(a, l.ambient_dim(), "tensor_line");
    const int n = a.ambient_dim();
    const ChowClass inv_chern = invert_unit(l.total_chern());
    ChowClass result(n);
    ChowClass inv_power = ChowClass::unit(n);
    for (int i = 0; i <= n; ++i) {
        if (i > 0) inv_power *= inv_chern;
        if (a.coefficient(i) == 0) continue;
        result += a.coefficient(i) * (ChowClass::hyperplane_power(n, i) * inv_power);
    }
    return result;
}

ChowClass tensor_shifted(const ChowClass& a, const LineBundle& l, int codim) {
    if (codim < 0) {
        throw DimensionError("tensor_shifted: embedding codimension must be non-negative, got " +
                             std::to_string(codim));
    }
    return power(l.total_chern(), codim) * tensor_line(a, l);
}

bool dual_cap_identity_holds(const SplitBundle& e, const ChowClass& a) {
    const ChowClass lhs = dual(e.total_chern() * a);
    const ChowClass rhs = dual_bundle(e).total_chern() * dual(a);
    return lhs == rhs;
}

bool tensor_cap_identity_holds(const SplitBundle& e, const ChowClass& a, const LineBundle& l) {
    return tensor_cap_identity_holds(e, a, l, chern_after_twist(e, l));
}

bool tensor_cap_identity_holds(const SplitBundle& e, const ChowClass& a, const LineBundle& l,
                               const ChowClass& chern_e_tensor_l) {
    const ChowClass lhs = tensor_line(e.total_chern() * a, l);
    const ChowClass rhs =
        chern_e_tensor_l * power(l.total_chern(), -e.virtual_rank()) * tensor_line(a, l);
    return lhs == rhs;
}

ChowClass segre_complement_compact(const ChowClass& s_x, const ChowClass& s_y,
                                   const LineBundle& l) {
    require_same_ambient(s_x, l.ambient_dim(), "segre_complement");
    require_same_ambient(s_y, l.ambient_dim(), "segre_complement");
    require_positive_degree(l, "segre_complement");
    return s_x + invert_unit(l.total_chern()) * tensor_line(dual(s_y), l);
}

ChowClass segre_complement_expanded(const ChowClass& s_x, const ChowClass& s_y,
                                    const LineBundle& l) {
    require_same_ambient(s_x, l.ambient_dim(), "segre_complement");
    require_same_ambient(s_y, l.ambient_dim(), "segre_complement");
    require_positive_degree(l, "segre_complement");
    const int n = s_x.ambient_dim();
    const Rational d(l.degree());
    std::vector<Rational> out(static_cast<size_t>(n) + 1);
    for (int c = 0; c <= n; ++c) {
        Rational acc = 0;
        Rational d_power = 1;
        for (int j = 0; j <= c; ++j) {
            acc += Rational(binomial_coefficient(c, j)) * d_power * s_y.coefficient(c - j);
            d_power *= d;
        }
        if (c % 2 != 0) acc = -acc;
        out[static_cast<size_t>(c)] = s_x.coefficient(c) + acc;
    }
    return ChowClass(n, std::move(out));
}

}  // namespace chowcalc
