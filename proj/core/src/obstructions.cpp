#include "ternary5/obstructions.hpp"

#include <stdexcept>
#include <vector>

namespace ternary5 {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t base, uint64_t exponent, uint64_t m) {
    uint64_t result = 1 % m;
    uint64_t square = base % m;
    for (uint64_t e = exponent; e != 0; e >>= 1) {
        if (e & 1) result = mulmod(result, square, m);
        if (e > 1) square = mulmod(square, square, m);
    }
    return result;
}

Parity parity_of(uint32_t v) { return v % 2 == 0 ? Parity::even : Parity::odd; }

}  // namespace

std::string to_string(ParityCase c) {
    auto name = [](Parity p) { return p == Parity::even ? "even" : "odd"; };
    return std::string("(") + name(c.a) + ", " + name(c.b) + ")";
}

std::string to_string(const ResidueSet& s) {
    std::string out = "{";
    bool first = true;
    for (uint64_t m : s.members) {
        if (!first) out += ", ";
        out += std::to_string(m);
        first = false;
    }
    return out + "}";
}

ResidueSet power_residues(uint64_t modulus, uint64_t exponent) {
    if (modulus < 2) throw std::invalid_argument("power_residues: modulus must be >= 2");
    if (exponent == 0) throw std::invalid_argument("power_residues: exponent must be >= 1");
    ResidueSet out{modulus, {}};
    for (uint64_t n = 0; n < modulus; ++n) {
        out.members.insert(powmod(n, exponent, modulus));
    }
    return out;
}

ResidueSet lhs_residues(ParityCase c, uint64_t modulus, uint32_t exponent_cap) {
    if (modulus < 2) throw std::invalid_argument("lhs_residues: modulus must be >= 2");
    if (exponent_cap < 4) throw std::invalid_argument("lhs_residues: exponent_cap must be >= 4");

    std::vector<BigNat> power_of_3(exponent_cap + 1);
    power_of_3[0] = BigNat{1u};
    for (uint32_t k = 1; k <= exponent_cap; ++k) power_of_3[k] = power_of_3[k - 1] * BigNat{3u};

    ResidueSet out{modulus, {}};
    for (uint32_t a = 2; a <= exponent_cap; ++a) {
        if (parity_of(a) != c.a) continue;
        for (uint32_t b = 1; b < a; ++b) {
            if (parity_of(b) != c.b) continue;
            const BigNat sum = power_of_3[a] + power_of_3[b] + BigNat{2u};
            out.members.insert(sum.mod_u64(modulus));
        }
    }
    if (out.members.empty()) {
        throw std::invalid_argument("lhs_residues: no (a, b) pair of the requested parity under the cap");
    }
    return out;
}

ObstructionVerdict verdict(ParityCase c, uint64_t modulus, uint64_t exponent,
                           uint32_t exponent_cap) {
    ObstructionVerdict v{c, lhs_residues(c, modulus, exponent_cap),
                         power_residues(modulus, exponent), false};
    bool disjoint = true;
    for (uint64_t m : v.lhs_residues.members) {
        if (v.power_residues.members.count(m) != 0) {
            disjoint = false;
            break;
        }
    }
    v.insoluble = disjoint;
    return v;
}

std::optional<BigNat> candidate_sieve(const BigNat& n) {
    if (n.is_zero()) throw std::invalid_argument("candidate_sieve: n must be >= 1");
    if (n.mod_u64(6) != 2) return std::nullopt;
    BigNat j = n;
    j -= BigNat{2u};
    j.divmod_u64(6);
    return j;
}

}  // namespace ternary5
