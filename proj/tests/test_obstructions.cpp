#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "properties.hpp"
#include "ternary5/obstructions.hpp"

using namespace ternary5;

TEST_CASE("power residues mod 8 and small moduli") {
    CHECK(power_residues(8, 5).members == std::set<uint64_t>{0, 1, 3, 5, 7});
    CHECK(power_residues(2, 5).members == std::set<uint64_t>{0, 1});
    CHECK(power_residues(3, 5).members == std::set<uint64_t>{0, 1, 2});
    CHECK(power_residues(8, 2).members == std::set<uint64_t>{0, 1, 4});
    CHECK_THROWS_AS(power_residues(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(power_residues(8, 0), std::invalid_argument);
}

TEST_CASE("power residues match an independently structured enumeration") {
    // Second route: iterated multiplication, no modular exponentiation.
    for (uint64_t m = 2; m <= 64; ++m) {
        for (uint64_t e = 1; e <= 8; ++e) {
            std::set<uint64_t> expected;
            for (uint64_t n = 0; n < m; ++n) {
                uint64_t r = 1 % m;
                for (uint64_t i = 0; i < e; ++i) r = r * n % m;
                expected.insert(r);
            }
            REQUIRE(power_residues(m, e).members == expected);
        }
    }
}

TEST_CASE("lhs residues by parity case") {
    CHECK(lhs_residues(kEvenEven, 8, 20).members == std::set<uint64_t>{4});
    CHECK(lhs_residues(kEvenOdd, 8, 20).members == std::set<uint64_t>{6});
    CHECK(lhs_residues(kOddEven, 8, 20).members == std::set<uint64_t>{6});
    CHECK(lhs_residues(kOddOdd, 8, 20).members == std::set<uint64_t>{0});
    // any cap >= 4 is already exhaustive (3^k mod 8 has period 2)
    for (uint32_t cap : {4u, 5u, 9u, 40u}) {
        CHECK(lhs_residues(kEvenEven, 8, cap).members == std::set<uint64_t>{4});
    }
    CHECK_THROWS_AS(lhs_residues(kEvenEven, 8, 3), std::invalid_argument);
    CHECK_THROWS_AS(lhs_residues(kEvenEven, 1, 20), std::invalid_argument);
}

TEST_CASE("verdicts reproduce the case split") {
    CHECK(verdict(kEvenEven).insoluble);
    CHECK(verdict(kEvenOdd).insoluble);
    CHECK(verdict(kOddEven).insoluble);
    CHECK_FALSE(verdict(kOddOdd).insoluble);  // (3, 1, 2) lives here

    const ObstructionVerdict v = verdict(kEvenEven);
    CHECK(v.lhs_residues.members == std::set<uint64_t>{4});
    CHECK(v.power_residues.members == std::set<uint64_t>{0, 1, 3, 5, 7});
    CHECK(to_string(v.lhs_residues) == "{4}");
    CHECK(to_string(v.power_residues) == "{0, 1, 3, 5, 7}");
    CHECK(to_string(kEvenOdd) == "(even, odd)");
}

TEST_CASE("property: parity well-definedness of the lhs mod 8") {
    const auto err = ternary5::testing::prop_parity_well_defined();
    CHECK_MESSAGE(!err, err.value_or(""));
}

TEST_CASE("candidate sieve examples") {
    CHECK(candidate_sieve(BigNat{2u}) == BigNat{0u});
    CHECK(candidate_sieve(BigNat{8u}) == BigNat{1u});
    CHECK(candidate_sieve(BigNat{14u}) == BigNat{2u});
    CHECK_FALSE(candidate_sieve(BigNat{5u}).has_value());
    CHECK_FALSE(candidate_sieve(BigNat{7u}).has_value());
    CHECK_THROWS_AS(candidate_sieve(BigNat{0u}), std::invalid_argument);
    // big input stays exact
    const BigNat big = pow(BigNat{10u}, 40) * BigNat{6u} + BigNat{2u};
    CHECK(candidate_sieve(big) == pow(BigNat{10u}, 40));
}

TEST_CASE("property: sieve soundness over [1, 10^4]") {
    for (uint64_t n = 1; n <= 10000; ++n) {
        const auto j = candidate_sieve(BigNat{n});
        const bool expected = n % 3 == 2 && n % 2 == 0;
        REQUIRE(j.has_value() == expected);
        if (j) REQUIRE(*j * BigNat{6u} + BigNat{2u} == BigNat{n});
    }
}
