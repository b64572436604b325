#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "ternary5/bignat.hpp"
#include "ternary5/obstructions.hpp"

namespace ternary5 {

/// Coefficient pattern for the family 2^d1 3^a + 2^d2 3^b + 2^d3 = n^q.
/// The pattern (0, 0, 1) is the three-term equation 3^a + 3^b + 2 = n^q.
struct DeltaPattern {
    uint8_t d1 = 0;
    uint8_t d2 = 0;
    uint8_t d3 = 1;

    bool operator==(const DeltaPattern&) const = default;

    /// Parses "d1,d2,d3" with each component 0 or 1.
    static DeltaPattern parse(std::string_view text);
};

/// A solution (a, b, n) with a > b >= 1, re-verified exactly on construction
/// against the equation that produced it.
struct SolutionTriple {
    uint32_t a = 0;
    uint32_t b = 0;
    BigNat n;

    bool operator==(const SolutionTriple&) const = default;
};

/// Enumerates a in [2, a_max], b in [1, a), forms S = 2^d1 3^a + 2^d2 3^b +
/// 2^d3 exactly, and keeps (a, b, n) when S is a perfect q-th power with
/// root n. Output is sorted by (a, b). Every kept triple is re-verified by
/// a fresh big-integer evaluation, and n must not be divisible by 3 (it
/// cannot be; a violation is an internal error).
std::vector<SolutionTriple> solve_delta_family(DeltaPattern pattern, uint32_t a_max, uint32_t q);

/// The three-term equation 3^a + 3^b + 2 = n^q, i.e. pattern (0, 0, 1).
std::vector<SolutionTriple> solve_three_term(uint32_t a_max, uint32_t q);

/// Buckets solutions by the parity of (a, b). All four cases are present in
/// the result, zero-valued when unpopulated.
std::map<ParityCase, uint64_t> classify_solutions(const std::vector<SolutionTriple>& solutions);

}  // namespace ternary5
