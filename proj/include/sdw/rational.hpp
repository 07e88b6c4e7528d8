#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace sdw {

// Exact rational over int64, always normalized (gcd 1, positive denominator).
// Used for Folner defects and density ratios so convergence tables reproduce
// bit-for-bit.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        assert(d != 0);
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // denominators positive, products stay well inside int64 at desk scale
        return a.num * b.den <=> b.num * a.den;
    }
};

}  // namespace sdw
