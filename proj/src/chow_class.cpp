#include "chowcalc/chow_class.hpp"

#include <string>
#include <utility>

namespace chowcalc {

namespace {

int checked_dim(int ambient_dim) {
    if (ambient_dim < 0) {
        throw DimensionError("ambient dimension must be non-negative, got " +
                             std::to_string(ambient_dim));
    }
    return ambient_dim;
}

void require_same_ambient(const ChowClass& a, const ChowClass& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw AmbientMismatch("classes live in different ambient spaces: P^" +
                              std::to_string(a.ambient_dim()) + " vs P^" +
                              std::to_string(b.ambient_dim()));
    }
}

}  // namespace

ChowClass::ChowClass(int ambient_dim)
    : dim_(checked_dim(ambient_dim)), coeffs_(static_cast<size_t>(ambient_dim) + 1) {}

ChowClass::ChowClass(int ambient_dim, std::vector<Rational> coeffs)
    : dim_(checked_dim(ambient_dim)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > static_cast<size_t>(dim_) + 1) {
        throw DimensionError("a class in P^" + std::to_string(dim_) + " has at most " +
                             std::to_string(dim_ + 1) + " coefficients, got " +
                             std::to_string(coeffs_.size()));
    }
    coeffs_.resize(static_cast<size_t>(dim_) + 1);
}

ChowClass ChowClass::unit(int ambient_dim) {
    return hyperplane_power(ambient_dim, 0);
}

ChowClass ChowClass::hyperplane_power(int ambient_dim, int codim) {
    ChowClass result(ambient_dim);
    if (codim < 0 || codim > ambient_dim) {
        throw DimensionError("codimension " + std::to_string(codim) + " out of range in P^" +
                             std::to_string(ambient_dim));
    }
    result.coeffs_[static_cast<size_t>(codim)] = 1;
    return result;
}

const Rational& ChowClass::coefficient(int codim) const {
    if (codim < 0 || codim > dim_) {
        throw DimensionError("codimension " + std::to_string(codim) + " out of range in P^" +
                             std::to_string(dim_));
    }
    return coeffs_[static_cast<size_t>(codim)];
}

ChowClass ChowClass::component(int codim) const {
    ChowClass result(dim_);
    result.coeffs_[static_cast<size_t>(codim)] = coefficient(codim);
    return result;
}

bool ChowClass::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

ChowClass ChowClass::operator-() const {
    ChowClass result(*this);
    for (auto& c : result.coeffs_) c = -c;
    return result;
}

ChowClass& ChowClass::operator+=(const ChowClass& rhs) {
    require_same_ambient(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& rhs) {
    require_same_ambient(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

ChowClass operator*(const ChowClass& lhs, const ChowClass& rhs) {
    require_same_ambient(lhs, rhs);
    const int n = lhs.dim_;
    std::vector<Rational> out(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const Rational& a = lhs.coeffs_[static_cast<size_t>(i)];
        if (a == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            const Rational& b = rhs.coeffs_[static_cast<size_t>(j)];
            if (b == 0) continue;
            out[static_cast<size_t>(i + j)] += a * b;
        }
    }
    return ChowClass(n, std::move(out));
}

ChowClass& ChowClass::operator*=(const ChowClass& rhs) {
    *this = *this * rhs;
    return *this;
}

ChowClass operator*(const Rational& scalar, const ChowClass& rhs) {
    ChowClass result(rhs);
    for (auto& c : result.coeffs_) c *= scalar;
    return result;
}

ChowClass invert_unit(const ChowClass& a) {
    const auto& c = a.coefficients();
    if (c[0] == 0) {
        throw NotInvertible("cannot invert a class with zero codimension-0 coefficient");
    }
    const int n = a.ambient_dim();
    std::vector<Rational> b(static_cast<size_t>(n) + 1);
    b[0] = Rational(1) / c[0];
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += c[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)];
        b[static_cast<size_t>(k)] = -acc / c[0];
    }
    return ChowClass(n, std::move(b));
}

ChowClass power(const ChowClass& a, int exponent) {
    if (exponent < 0) return power(invert_unit(a), -exponent);
    ChowClass result = ChowClass::unit(a.ambient_dim());
    ChowClass base = a;
    unsigned e = static_cast<unsigned>(exponent);
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e != 0) base *= base;
    }
    return result;
}

AmbientSpace AmbientSpace::projective(int n) {
    checked_dim(n);
    std::vector<Rational> coeffs{Rational(1)};
    if (n >= 1) coeffs.emplace_back(1);  // 1 + H; P^0 has no H
    return AmbientSpace{n, power(ChowClass(n, std::move(coeffs)), n + 1)};
}

}  // namespace chowcalc
