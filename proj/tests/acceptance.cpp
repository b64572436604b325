// Acceptance suite: runs the eight headline checks end to end, one line of
// output per criterion, nonzero exit when any of them fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "properties.hpp"
#include "ternary5/digits.hpp"
#include "ternary5/obstructions.hpp"
#include "ternary5/oracle.hpp"
#include "ternary5/scan.hpp"

using namespace ternary5;
using ternary5::testing::run_cli;
namespace fs = std::filesystem;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

fs::path work_dir() {
    const fs::path dir = fs::temp_directory_path() / "ternary5_acceptance";
    fs::create_directories(dir);
    return dir;
}

// 1. The mod-8 lemma verification: exact residue sets, empty intersections,
//    CLI confirms with exit 0, in under a second.
void criterion_1(Check& c) {
    const auto t0 = std::chrono::steady_clock::now();
    c.require(power_residues(8, 5).members == std::set<uint64_t>{0, 1, 3, 5, 7},
              "power_residues(8,5) != {0,1,3,5,7}");
    c.require(lhs_residues(kEvenEven, 8, 20).members == std::set<uint64_t>{4},
              "(even,even) residues != {4}");
    c.require(lhs_residues(kEvenOdd, 8, 20).members == std::set<uint64_t>{6},
              "(even,odd) residues != {6}");
    c.require(lhs_residues(kOddEven, 8, 20).members == std::set<uint64_t>{6},
              "(odd,even) residues != {6}");
    c.require(verdict(kEvenEven).insoluble && verdict(kEvenOdd).insoluble &&
                  verdict(kOddEven).insoluble,
              "an obstructed case did not verify");
    c.require(!verdict(kOddOdd).insoluble, "(odd,odd) must report no obstruction");
    c.require(run_cli("verify-lemmas").exit_code == 0, "CLI verify-lemmas exit != 0");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < 1.0, "took " + std::to_string(secs) + " s, limit 1 s");
}

// 2. The known solution: gamma(32, 3) = 3 and the solver returns exactly
//    (3, 1, 2) up to a = 120, in under five seconds.
void criterion_2(Check& c) {
    const auto t0 = std::chrono::steady_clock::now();
    c.require(gamma(BigNat{32u}, 3) == 3, "gamma(32, 3) != 3");
    const auto r = run_cli("solve --a-max 120");
    c.require(r.exit_code == 0, "solve exit != 0");
    c.require(r.contains("1 solution(s)"), "solve did not report exactly one solution");
    c.require(r.contains("(a, b, n) = (3, 1, 2)"), "solve did not print (3, 1, 2)");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < 5.0, "took " + std::to_string(secs) + " s, limit 5 s");
}

// 3. The Theorem B touchstone: 13^3 = 2197 has three nonzero ternary digits.
void criterion_3(Check& c) { c.require(gamma(BigNat{2197u}, 3) == 3, "gamma(2197, 3) != 3"); }

// 4. Desk-scale Theorem 1: j in [1, 10^5], single-threaded, min gamma > 3,
//    zero threshold hits, exit 0, under 60 s.
void criterion_4(Check& c, const std::string& csv_path) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r =
        run_cli("scan --j-start 1 --j-end 100000 --workers 1 --out " + csv_path);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(r.exit_code == 0, "scan exit != 0");
    const CsvContents csv = read_scan_csv(csv_path);
    c.require(csv.complete, "CSV has no summary footer");
    c.require(csv.records.size() == 100000, "expected 100000 records");
    c.require(csv.footer_min_gamma > 3, "min gamma not > 3");
    c.require(csv.footer_hits == 0, "threshold hits nonzero");
    c.require(secs < 60.0, "took " + std::to_string(secs) + " s, limit 60 s");
}

// 5. Full Theorem 1: j in [1, 10^6] with 8 workers, zero threshold hits.
void criterion_5(Check& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string path = (work_dir() / "full_million.csv").string();
    const auto r = run_cli("scan --j-start 1 --j-end 1000000 --workers 8 --out " + path);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(r.exit_code == 0, "scan exit != 0");
    const CsvContents csv = read_scan_csv(path);
    c.require(csv.complete, "CSV has no summary footer");
    c.require(csv.records.size() == 1000000, "expected 1000000 records");
    c.require(csv.footer_hits == 0, "threshold hits nonzero");
    c.require(csv.footer_min_gamma > 3, "min gamma not > 3");
    c.require(secs < 900.0, "took " + std::to_string(secs) + " s, limit 900 s");
}

// 6. Envelope diagnostics over the criterion-4 CSV: no lower-envelope
//    violation, j = 1 among the upper violations, and the rigorous digit
//    bound without exception.
void criterion_6(Check& c, const std::string& csv_path) {
    const CsvContents csv = read_scan_csv(csv_path);
    c.require(csv.records.size() == 100000, "criterion-4 CSV missing");
    bool saw_upper_violation_at_1 = false;
    for (const SearchRecord& r : csv.records) {
        if (static_cast<double>(r.gamma) <= r.lower_env) {
            c.require(false, "lower-envelope violation at j = " + std::to_string(r.j));
            return;
        }
        if (static_cast<double>(r.gamma) >= r.upper_env && r.j == 1) {
            saw_upper_violation_at_1 = true;
        }
        if (r.gamma > r.rigorous_digits) {
            c.require(false, "rigorous digit bound failed at j = " + std::to_string(r.j));
            return;
        }
    }
    c.require(saw_upper_violation_at_1, "gamma(8^5) = 10 >= 9.4639 not flagged at j = 1");
}

// 7. Property suites, exactly as the unit tests run them.
void criterion_7(Check& c) {
    if (auto err = ternary5::testing::prop_radix_round_trip(10000)) c.require(false, *err);
    if (auto err = ternary5::testing::prop_gamma_scale_invariance()) c.require(false, *err);
    if (auto err = ternary5::testing::prop_root_bracketing(10000)) c.require(false, *err);
    if (auto err = ternary5::testing::prop_parity_well_defined()) c.require(false, *err);
    if (auto err = ternary5::testing::prop_scan_determinism(20000)) c.require(false, *err);
}

// 8. Cross-module consistency: sieve accepts every oracle solution; the
//    obstructed parity classes stay empty up to a = 200; every non-(0,0,1)
//    delta pattern is empty up to a = 40.
void criterion_8(Check& c) {
    const auto sols = solve_three_term(200, 5);
    for (const SolutionTriple& s : sols) {
        c.require(candidate_sieve(s.n).has_value(),
                  "solution n failed the sieve: " + s.n.to_decimal());
    }
    const auto counts = classify_solutions(sols);
    c.require(counts.at(kEvenEven) == 0 && counts.at(kEvenOdd) == 0 && counts.at(kOddEven) == 0,
              "a solution landed in an obstructed parity class");
    for (uint8_t d1 : {0, 1}) {
        for (uint8_t d2 : {0, 1}) {
            for (uint8_t d3 : {0, 1}) {
                const DeltaPattern p{d1, d2, d3};
                if (p == DeltaPattern{0, 0, 1}) continue;
                c.require(solve_delta_family(p, 40, 5).empty(),
                          "unexpected solution for pattern " + std::to_string(d1) + "," +
                              std::to_string(d2) + "," + std::to_string(d3));
            }
        }
    }
}

}  // namespace

int main() {
    const std::string scan_csv = (work_dir() / "desk_scale.csv").string();

    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"lemma verification (mod-8 residue sets, CLI exit 0, < 1 s)", criterion_1},
        {"known solution (gamma(32,3) = 3; solve finds exactly (3,1,2), < 5 s)", criterion_2},
        {"touchstone gamma(2197,3) = 3", criterion_3},
        {"desk-scale scan j in [1,1e5]: min gamma > 3, no hits, < 60 s single-threaded",
         [&](Check& c) { criterion_4(c, scan_csv); }},
        {"full scan j in [1,1e6]: no hits, 8 workers, < 15 min", criterion_5},
        {"envelope diagnostics: no lower violation, j = 1 upper violation, digit bound exact",
         [&](Check& c) { criterion_6(c, scan_csv); }},
        {"property suites (round trip, scale invariance, root bracket, parity, determinism)",
         criterion_7},
        {"cross-module consistency (sieve, parity classes, delta patterns)", criterion_8},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (check.ok) {
            std::printf("[PASS] criterion %zu: %s (%.2f s)\n", i + 1, criteria[i].first.c_str(),
                        secs);
        } else {
            std::printf("[FAIL] criterion %zu: %s — %s\n", i + 1, criteria[i].first.c_str(),
                        check.detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("acceptance: %d criteria FAILED\n", failures);
    }
    return failures;
}
