#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ternary5/bignat.hpp"

namespace ternary5 {

/// File-system or file-format failure; the CLI maps this to exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double ln_3() { return std::log(3.0); }

/// Supremum of the admissible range 0 < c < 1/ln 3 for the conjectured
/// lower envelope gamma > c ln(n^q).
inline double default_lower_c() { return 1.0 / (3.0 * std::log(3.0)); }

struct EnvelopeConfig {
    double c = default_lower_c();
};

struct ScanConfig {
    uint64_t j_start = 1;  // j = 0 (the known solution) only with include_known
    uint64_t j_end = 0;    // inclusive
    uint32_t q = 5;
    uint32_t radix = 3;
    uint64_t threshold = 3;
    unsigned worker_count = 1;
    std::string output_path;
    bool include_known = false;
    bool resume = false;            // continue from an existing partial CSV
    double lower_c = default_lower_c();
    uint64_t block_size = 4096;     // j-values per work unit
    uint64_t spot_checks = 1000;    // reference-path samples per run
};

/// One scan row. The envelope values are double precision; rigorous_digits
/// is the exact digit count of n^q in the radix and is the one bound the
/// engine asserts (gamma <= rigorous_digits, always).
struct SearchRecord {
    uint64_t j = 0;
    uint64_t n = 0;         // 6j + 2
    uint64_t gamma = 0;     // nonzero digits of n^q
    double lower_env = 0;   // q ln n / (3 ln 3)
    double upper_env = 0;   // q ln n / ln 3
    uint64_t rigorous_digits = 0;
    bool below_threshold = false;  // gamma <= threshold
};

struct ScanSummary {
    ScanConfig config;
    uint64_t records_evaluated = 0;
    uint64_t min_gamma = 0;
    uint64_t argmin_j = 0;  // smallest j attaining min_gamma
    std::vector<uint64_t> threshold_hits;
    std::vector<uint64_t> lower_env_violations;  // gamma <= c ln(n^q)
    std::vector<uint64_t> upper_env_violations;  // gamma >= q ln n / ln 3
    uint64_t spot_checks_passed = 0;
    double wall_time_seconds = 0;
};

/// Evaluates one point: n = 6j + 2, N = n^q exactly, gamma and the exact
/// digit count via the digit machinery, envelopes in double precision.
SearchRecord evaluate_point(uint64_t j, uint32_t q, uint32_t radix, uint64_t threshold = 3);

/// Diagnostics, not assertions: lower_ok = gamma > c ln(n^q);
/// upper_ok = gamma < q ln n / ln 3. The strict upper bound fails at
/// j = 1 (gamma(8^5) = 10 > 9.4639); only gamma <= rigorous_digits is
/// asserted by the engine.
std::pair<bool, bool> check_envelopes(const SearchRecord& record, const EnvelopeConfig& env);

/// Runs the scan over [j_start, j_end], writing one CSV row per j in
/// ascending order plus a summary footer. Deterministic: byte-identical
/// output for identical config regardless of worker_count. The range is
/// split into fixed-size blocks handed to workers; a single writer merges
/// completed blocks in block order.
ScanSummary scan(const ScanConfig& config);

inline constexpr const char* kCsvHeader = "j,n,gamma,lower_env,upper_env,rigorous_digits,below_threshold";

std::string format_csv_row(const SearchRecord& r);
std::string format_csv_footer(uint64_t min_gamma, uint64_t argmin_j, uint64_t hit_count);

/// Parsed contents of a scan CSV. A file is complete only when the summary
/// footer is present; clean_bytes marks the end of the last parseable line
/// so an interrupted write (torn_tail) can be truncated and resumed.
struct CsvContents {
    std::vector<SearchRecord> records;
    bool complete = false;
    uint64_t footer_min_gamma = 0;
    uint64_t footer_argmin_j = 0;
    uint64_t footer_hits = 0;
    uint64_t clean_bytes = 0;
    bool torn_tail = false;
};

CsvContents read_scan_csv(const std::string& path);

}  // namespace ternary5
