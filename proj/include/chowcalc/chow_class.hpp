#pragma once

#include <stdexcept>
#include <vector>

#include "chowcalc/rational.hpp"

namespace chowcalc {

struct ChowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two classes from different ambient projective spaces were combined.
struct AmbientMismatch : ChowError {
    using ChowError::ChowError;
};

// A codimension index or coefficient count does not fit the ambient space.
struct DimensionError : ChowError {
    using ChowError::ChowError;
};

// Attempt to invert a class whose codimension-0 coefficient is zero.
struct NotInvertible : ChowError {
    using ChowError::ChowError;
};

// A class in the Chow group of P^n: exact rational coefficients of
// H^0, ..., H^n, where H is the hyperplane class. H^{n+1} = 0, so every
// operation truncates components of codimension above n. Immutable after
// construction; all operations return new values.
class ChowClass {
public:
    // The zero class.
    explicit ChowClass(int ambient_dim);

    // Coefficients listed by codimension starting at 0; missing trailing
    // entries are zero. More than ambient_dim + 1 entries is a DimensionError.
    ChowClass(int ambient_dim, std::vector<Rational> coeffs);

    static ChowClass unit(int ambient_dim);
    static ChowClass hyperplane_power(int ambient_dim, int codim);

    int ambient_dim() const { return dim_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& coefficient(int codim) const;

    // The class with every grade other than `codim` zeroed.
    ChowClass component(int codim) const;

    // Degree of the codimension-n part, i.e. the coefficient of H^n.
    Rational integral() const { return coeffs_.back(); }

    bool is_zero() const;

    friend bool operator==(const ChowClass&, const ChowClass&) = default;

    ChowClass operator-() const;
    ChowClass& operator+=(const ChowClass& rhs);
    ChowClass& operator-=(const ChowClass& rhs);
    ChowClass& operator*=(const ChowClass& rhs);

    friend ChowClass operator+(ChowClass lhs, const ChowClass& rhs) { return lhs += rhs; }
    friend ChowClass operator-(ChowClass lhs, const ChowClass& rhs) { return lhs -= rhs; }
    friend ChowClass operator*(const ChowClass& lhs, const ChowClass& rhs);
    friend ChowClass operator*(const Rational& scalar, const ChowClass& rhs);

private:
    int dim_;
    std::vector<Rational> coeffs_;  // exactly dim_ + 1 entries
};

// Formal power-series inverse, truncated at codimension n. The codimension-0
// coefficient must be nonzero.
ChowClass invert_unit(const ChowClass& a);

// Integer power; negative exponents go through invert_unit.
ChowClass power(const ChowClass& a, int exponent);

// P^n together with c(TP^n) = (1+H)^{n+1}, truncated.
struct AmbientSpace {
    int dim;
    ChowClass tangent_chern;

    static AmbientSpace projective(int n);
};

}  // namespace chowcalc
