#include "ternary5/oracle.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace ternary5 {

DeltaPattern DeltaPattern::parse(std::string_view text) {
    std::array<uint8_t, 3> d{};
    size_t field = 0;
    size_t pos = 0;
    while (field < 3) {
        const size_t comma = text.find(',', pos);
        const std::string_view part =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (part == "0") {
            d[field] = 0;
        } else if (part == "1") {
            d[field] = 1;
        } else {
            throw std::invalid_argument("pattern: expected d1,d2,d3 with each component 0 or 1");
        }
        ++field;
        if (comma == std::string_view::npos) {
            pos = std::string_view::npos;
            break;
        }
        pos = comma + 1;
    }
    if (field != 3 || pos != std::string_view::npos) {
        throw std::invalid_argument("pattern: expected three comma-separated components");
    }
    return DeltaPattern{d[0], d[1], d[2]};
}

namespace {

// Fresh evaluation, independent of the enumeration's cached powers.
void verify_triple(const DeltaPattern& p, uint32_t a, uint32_t b, const BigNat& n, uint32_t q) {
    if (b < 1 || a <= b) throw std::logic_error("oracle: enumeration emitted a <= b");
    const BigNat lhs = BigNat{uint64_t{1} << p.d1} * pow(BigNat{3u}, a) +
                       BigNat{uint64_t{1} << p.d2} * pow(BigNat{3u}, b) +
                       BigNat{uint64_t{1} << p.d3};
    if (pow(n, q) != lhs) throw std::logic_error("oracle: solution failed re-verification");
    if (n.mod_u64(3) == 0) throw std::logic_error("oracle: solution base divisible by 3");
}

}  // namespace

std::vector<SolutionTriple> solve_delta_family(DeltaPattern pattern, uint32_t a_max, uint32_t q) {
    if (pattern.d1 > 1 || pattern.d2 > 1 || pattern.d3 > 1) {
        throw std::invalid_argument("solve_delta_family: pattern components must be 0 or 1");
    }
    if (a_max < 2) throw std::invalid_argument("solve_delta_family: a_max must be >= 2");
    if (q < 2) throw std::invalid_argument("solve_delta_family: q must be >= 2");

    std::vector<BigNat> power_of_3(a_max + 1);
    power_of_3[0] = BigNat{1u};
    for (uint32_t k = 1; k <= a_max; ++k) power_of_3[k] = power_of_3[k - 1] * BigNat{3u};

    const BigNat c1{uint64_t{1} << pattern.d1};
    const BigNat c2{uint64_t{1} << pattern.d2};
    const BigNat c3{uint64_t{1} << pattern.d3};

    std::vector<SolutionTriple> out;
    for (uint32_t a = 2; a <= a_max; ++a) {
        for (uint32_t b = 1; b < a; ++b) {
            const BigNat sum = c1 * power_of_3[a] + c2 * power_of_3[b] + c3;
            BigNat root = integer_root(sum, q);
            if (pow(root, q) == sum) {
                verify_triple(pattern, a, b, root, q);
                out.push_back(SolutionTriple{a, b, std::move(root)});
            }
        }
    }
    return out;
}

std::vector<SolutionTriple> solve_three_term(uint32_t a_max, uint32_t q) {
    return solve_delta_family(DeltaPattern{0, 0, 1}, a_max, q);
}

std::map<ParityCase, uint64_t> classify_solutions(const std::vector<SolutionTriple>& solutions) {
    std::map<ParityCase, uint64_t> counts;
    for (ParityCase c : all_parity_cases()) counts[c] = 0;
    for (const SolutionTriple& s : solutions) {
        const ParityCase c{s.a % 2 == 0 ? Parity::even : Parity::odd,
                           s.b % 2 == 0 ? Parity::even : Parity::odd};
        ++counts[c];
    }
    return counts;
}

}  // namespace ternary5
