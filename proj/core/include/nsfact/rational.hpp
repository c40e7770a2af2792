#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace nsfact {

// Exact nonnegative fraction, kept in lowest terms. Enough arithmetic for
// elasticities; not a general rational type.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        auto g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
};

} // namespace nsfact
