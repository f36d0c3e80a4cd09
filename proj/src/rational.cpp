#include "chowcalc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace chowcalc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("not a rational number: \"" + std::string(text) +
                                "\" (expected \"p\" or \"p/q\" with positive q)");
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    std::string_view num = s;
    std::string_view den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    bool negative = false;
    if (!num.empty() && num.front() == '-') {
        negative = true;
        num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) bad(text);
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) bad(text);
    if (negative) n = -n;
    return Rational(n, d);
}

std::string to_string(const Rational& q) {
    return q.str();
}

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

Integer binomial_coefficient(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

}  // namespace chowcalc
