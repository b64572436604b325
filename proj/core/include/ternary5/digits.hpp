#pragma once

#include <cstdint>
#include <vector>

#include "ternary5/bignat.hpp"

namespace ternary5 {

/// Positional expansion of a natural number, least-significant digit first.
/// Zero is the empty digit sequence; otherwise the top digit is nonzero.
struct RadixExpansion {
    uint32_t radix = 3;
    std::vector<uint32_t> digits;

    bool operator==(const RadixExpansion&) const = default;
};

/// Reference conversion: repeated divmod by the radix, one digit at a time.
RadixExpansion to_radix(const BigNat& n, uint32_t radix);

/// Block conversion: divides by the largest radix power fitting a 64-bit
/// word, then unpacks each word with scalar arithmetic. Output is identical
/// to to_radix; the two paths cross-check each other in tests and in the
/// scan engine's spot checks.
RadixExpansion to_radix_blocked(const BigNat& n, uint32_t radix);

/// Inverse of to_radix: sum of digits[i] * radix^i (Horner evaluation).
/// Rejects digits outside [0, radix).
BigNat from_digits(const RadixExpansion& e);

struct DigitStats {
    uint64_t digit_count = 0;    // floor(log_radix n) + 1, exact; 0 for n = 0
    uint64_t nonzero_count = 0;  // gamma
};

/// Digit count and nonzero-digit count in one pass (block path, no storage).
DigitStats digit_stats(const BigNat& n, uint32_t radix);

/// Count of nonzero digits of n in the given radix (gamma_3 when radix = 3).
uint64_t gamma(const BigNat& n, uint32_t radix = 3);

/// Same count through the reference conversion path; used by spot checks.
uint64_t gamma_reference(const BigNat& n, uint32_t radix = 3);

}  // namespace ternary5
