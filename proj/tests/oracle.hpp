#pragma once

// Test-only series oracle. Expands H^shift * prod_i (1 + a_i H)^{e_i}
// directly from generalized binomial coefficients and naive convolution,
// independently of the library's recurrence-based arithmetic.

#include <vector>

#include "chowcalc/chow_class.hpp"
#include "chowcalc/rational.hpp"

namespace oracle {

using chowcalc::ChowClass;
using chowcalc::Rational;

// C(e, k) for integer e of either sign: e(e-1)...(e-k+1)/k!.
inline Rational gen_binomial(long long e, int k) {
    Rational result = 1;
    for (int t = 0; t < k; ++t) result *= Rational(e - t, t + 1);
    return result;
}

// Coefficients [c_0 .. c_n] of (1 + aH)^e.
inline std::vector<Rational> binomial_series(int a, long long e, int n) {
    std::vector<Rational> out(static_cast<size_t>(n) + 1);
    Rational a_power = 1;
    for (int k = 0; k <= n; ++k) {
        out[static_cast<size_t>(k)] = gen_binomial(e, k) * a_power;
        a_power *= a;
    }
    return out;
}

inline std::vector<Rational> convolve(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b, int n) {
    std::vector<Rational> out(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            out[static_cast<size_t>(i + j)] +=
                a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
        }
    }
    return out;
}

struct Factor {
    int twist;
    long long exponent;
};

inline ChowClass expand(int shift, const std::vector<Factor>& factors, int n) {
    std::vector<Rational> out(static_cast<size_t>(n) + 1);
    if (shift <= n) out[static_cast<size_t>(shift)] = 1;
    for (const auto& f : factors) out = convolve(out, binomial_series(f.twist, f.exponent, n), n);
    return ChowClass(n, std::move(out));
}

}  // namespace oracle
