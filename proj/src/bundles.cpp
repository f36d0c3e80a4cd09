#include "chowcalc/bundles.hpp"

#include <string>
#include <utility>

namespace chowcalc {

namespace {

ChowClass line_chern(int ambient_dim, int degree) {
    std::vector<Rational> coeffs{Rational(1)};
    if (ambient_dim >= 1) coeffs.emplace_back(degree);
    return ChowClass(ambient_dim, std::move(coeffs));
}

void require_same_ambient(int a, int b, const char* what) {
    if (a != b) {
        throw AmbientMismatch(std::string(what) + ": ambient spaces differ, P^" +
                              std::to_string(a) + " vs P^" + std::to_string(b));
    }
}

}  // namespace

LineBundle::LineBundle(int ambient_dim, int degree) : ambient_dim_(ambient_dim), degree_(degree) {
    if (ambient_dim < 0) {
        throw DimensionError("ambient dimension must be non-negative, got " +
                             std::to_string(ambient_dim));
    }
}

ChowClass LineBundle::total_chern() const {
    return line_chern(ambient_dim_, degree_);
}

SplitBundle::SplitBundle(int ambient_dim, std::vector<int> twists)
    : ambient_dim_(ambient_dim), twists_(std::move(twists)) {
    if (ambient_dim < 0) {
        throw DimensionError("ambient dimension must be non-negative, got " +
                             std::to_string(ambient_dim));
    }
}

int SplitBundle::virtual_rank() const {
    return virtual_rank_override_.value_or(static_cast<int>(twists_.size()));
}

SplitBundle SplitBundle::with_virtual_rank(int rank) const {
    SplitBundle result(*this);
    result.virtual_rank_override_ = rank;
    return result;
}

ChowClass SplitBundle::total_chern() const {
    ChowClass result = ChowClass::unit(ambient_dim_);
    for (int a : twists_) result *= line_chern(ambient_dim_, a);
    return result;
}

SplitBundle dual_bundle(const SplitBundle& e) {
    std::vector<int> twists = e.twists();
    for (int& a : twists) a = -a;
    SplitBundle result(e.ambient_dim(), std::move(twists));
    if (e.virtual_rank() != static_cast<int>(e.twists().size())) {
        result = result.with_virtual_rank(e.virtual_rank());
    }
    return result;
}

SplitBundle twist_bundle(const SplitBundle& e, const LineBundle& l) {
    require_same_ambient(e.ambient_dim(), l.ambient_dim(), "twist_bundle");
    std::vector<int> twists = e.twists();
    for (int& a : twists) a += l.degree();
    SplitBundle result(e.ambient_dim(), std::move(twists));
    if (e.virtual_rank() != static_cast<int>(e.twists().size())) {
        result = result.with_virtual_rank(e.virtual_rank());
    }
    return result;
}

ChowClass chern_after_twist(const SplitBundle& e, const LineBundle& l) {
    require_same_ambient(e.ambient_dim(), l.ambient_dim(), "chern_after_twist");
    ChowClass result = twist_bundle(e, l).total_chern();
    const int trivial_summands = e.virtual_rank() - static_cast<int>(e.twists().size());
    if (trivial_summands != 0) {
        result *= power(l.total_chern(), trivial_summands);
    }
    return result;
}

}  // namespace chowcalc
