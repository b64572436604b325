#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ternary5 {

/// Arbitrary-precision natural number.
///
/// Thin wrapper over boost::multiprecision::cpp_int restricted to values
/// >= 0. Subtraction below zero throws instead of producing a negative.
/// The backing type keeps its limb representation canonical.
class BigNat {
public:
    BigNat() = default;

    template <std::unsigned_integral T>
    BigNat(T v) : mag_(v) {}

    template <std::signed_integral T>
    BigNat(T v) : mag_(v) {
        if (v < 0) throw std::invalid_argument("BigNat: negative value");
    }

    static BigNat from_decimal(std::string_view s);
    std::string to_decimal() const;

    bool is_zero() const { return mag_.is_zero(); }

    /// Number of significant bits; 0 for zero.
    uint64_t bit_length() const;

    bool fits_u64() const;
    uint64_t to_u64() const;  // throws std::overflow_error when too large

    BigNat& operator+=(const BigNat& o) {
        mag_ += o.mag_;
        return *this;
    }
    BigNat& operator-=(const BigNat& o);
    BigNat& operator*=(const BigNat& o) {
        mag_ *= o.mag_;
        return *this;
    }

    friend BigNat operator+(BigNat a, const BigNat& b) {
        a += b;
        return a;
    }
    friend BigNat operator-(BigNat a, const BigNat& b) {
        a -= b;
        return a;
    }
    friend BigNat operator*(BigNat a, const BigNat& b) {
        a *= b;
        return a;
    }

    /// Floor division with remainder; the divisor must be nonzero.
    friend std::pair<BigNat, BigNat> divmod(const BigNat& num, const BigNat& den);

    /// In-place division by a machine word; returns the remainder.
    uint64_t divmod_u64(uint64_t d);
    uint64_t mod_u64(uint64_t d) const;

    bool operator==(const BigNat&) const = default;
    std::strong_ordering operator<=>(const BigNat& o) const {
        if (mag_ < o.mag_) return std::strong_ordering::less;
        if (mag_ > o.mag_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    boost::multiprecision::cpp_int mag_;
};

/// base^exponent by binary exponentiation; pow(0, 0) = 1 (empty product).
BigNat pow(const BigNat& base, uint64_t exponent);

/// Integer k-th root: the unique r with r^k <= n < (r+1)^k, k >= 1.
/// Newton iteration seeded from the bit length; a final correction loop
/// enforces the bracketing contract.
BigNat integer_root(const BigNat& n, uint64_t k);

std::ostream& operator<<(std::ostream& os, const BigNat& n);

}  // namespace ternary5
