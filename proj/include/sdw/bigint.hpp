#pragma once

#include <cassert>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sdw {

// Arbitrary-precision unsigned integer, base 2^32 limbs, little-endian.
// Pattern counts must never overflow, so every counting path returns one
// of these instead of a machine word.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) {
        if (v) {
            limbs_.push_back(static_cast<std::uint32_t>(v));
            if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
        }
    }

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& o) {
        if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }
    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        if (a.is_zero() || b.is_zero()) return {};
        BigUint r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] +
                                    std::uint64_t(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            for (std::size_t k = i + b.limbs_.size(); carry; ++k) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
        }
        r.trim();
        return r;
    }

    BigUint& mul_small(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            std::uint64_t cur = std::uint64_t(l) * m + carry;
            l = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        trim();
        return *this;
    }

    // Quotient in place, returns remainder. d must be nonzero.
    std::uint32_t divmod_small(std::uint32_t d) {
        assert(d != 0);
        std::uint64_t rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<std::uint32_t>(rem);
    }

    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() <=> b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
        return std::strong_ordering::equal;
    }
    friend bool operator==(const BigUint& a, const BigUint& b) = default;

    static BigUint pow(std::uint32_t base, std::uint64_t exp) {
        BigUint r{1};
        for (std::uint64_t i = 0; i < exp; ++i) r.mul_small(base);
        return r;
    }

    // Number of significant bits; 0 for zero.
    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint32_t top = limbs_.back();
        std::size_t b = (limbs_.size() - 1) * 32;
        while (top) { ++b; top >>= 1; }
        return b;
    }

    bool bit(std::size_t i) const {
        std::size_t limb = i / 32;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 32)) & 1u;
    }

    // True iff the value equals 2^k for some k (single set bit).
    bool is_power_of_two() const {
        if (limbs_.empty()) return false;
        int set = 0;
        for (auto l : limbs_)
            for (std::uint32_t v = l; v; v &= v - 1) if (++set > 1) return false;
        return set == 1;
    }

    // Natural logarithm; -inf for zero. Accurate to double precision using
    // the top 64 bits of the mantissa.
    double ln() const {
        if (limbs_.empty()) return -std::numeric_limits<double>::infinity();
        std::size_t bl = bit_length();
        if (bl <= 63) {
            std::uint64_t v = limbs_[0];
            if (limbs_.size() > 1) v |= std::uint64_t(limbs_[1]) << 32;
            return std::log(static_cast<double>(v));
        }
        // mantissa = top 64 bits, value = mantissa * 2^(bl-64)
        std::uint64_t mant = 0;
        for (std::size_t i = 0; i < 64; ++i)
            mant |= std::uint64_t(bit(bl - 1 - i)) << (63 - i);
        return std::log(static_cast<double>(mant)) +
               static_cast<double>(bl - 64) * M_LN2;
    }

    std::string to_string() const {
        if (limbs_.empty()) return "0";
        BigUint tmp = *this;
        std::string out;
        while (!tmp.is_zero()) {
            std::uint32_t r = tmp.divmod_small(1000000000u);
            std::string chunk = std::to_string(r);
            if (!tmp.is_zero()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        return out;
    }

    // Fits in uint64? (convenience for tests and small tables)
    bool fits_u64() const { return bit_length() <= 64; }
    std::uint64_t as_u64() const {
        assert(fits_u64());
        std::uint64_t v = limbs_.empty() ? 0 : limbs_[0];
        if (limbs_.size() > 1) v |= std::uint64_t(limbs_[1]) << 32;
        return v;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<std::uint32_t> limbs_;
};

}  // namespace sdw
