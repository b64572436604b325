#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "ternary5/bignat.hpp"

namespace ternary5 {

enum class Parity : uint8_t { even, odd };

/// Parity pair for the exponents (a, b) of 3^a + 3^b + 2.
struct ParityCase {
    Parity a = Parity::even;
    Parity b = Parity::even;

    auto operator<=>(const ParityCase&) const = default;
};

inline constexpr ParityCase kEvenEven{Parity::even, Parity::even};
inline constexpr ParityCase kEvenOdd{Parity::even, Parity::odd};
inline constexpr ParityCase kOddEven{Parity::odd, Parity::even};
inline constexpr ParityCase kOddOdd{Parity::odd, Parity::odd};

constexpr std::array<ParityCase, 4> all_parity_cases() {
    return {kEvenEven, kEvenOdd, kOddEven, kOddOdd};
}

std::string to_string(ParityCase c);

/// Set of residues modulo a fixed modulus; members lie in [0, modulus).
struct ResidueSet {
    uint64_t modulus = 2;
    std::set<uint64_t> members;

    bool operator==(const ResidueSet&) const = default;
};

std::string to_string(const ResidueSet& s);  // "{0, 1, 3, 5, 7}"

/// { n^exponent mod modulus : n in [0, modulus) }, by direct enumeration.
ResidueSet power_residues(uint64_t modulus, uint64_t exponent);

/// Residues of 3^a + 3^b + 2 mod modulus over a > b >= 1 with a, b bounded
/// by exponent_cap and the parities of (a, b) fixed by the case. Sums are
/// formed with exact big-integer arithmetic before reduction.
ResidueSet lhs_residues(ParityCase c, uint64_t modulus, uint32_t exponent_cap);

/// Outcome of one parity case: the equation is insoluble in that case
/// exactly when the two residue sets are disjoint.
struct ObstructionVerdict {
    ParityCase parity;
    ResidueSet lhs_residues;
    ResidueSet power_residues;
    bool insoluble = false;
};

ObstructionVerdict verdict(ParityCase c, uint64_t modulus = 8, uint64_t exponent = 5,
                           uint32_t exponent_cap = 20);

/// The n = 6j + 2 filter: any solution base must have this form. Returns j
/// when n = 6j + 2, empty otherwise. Accepts n = 2 (j = 0, the known
/// solution); range policy belongs to the scan engine.
std::optional<BigNat> candidate_sieve(const BigNat& n);

}  // namespace ternary5
