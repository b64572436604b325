#include "ternary5/scan.hpp"

#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_set>

#include "ternary5/digits.hpp"

namespace ternary5 {

namespace {

constexpr uint64_t kMaxJ = (std::numeric_limits<uint64_t>::max() - 2) / 6;

void validate(const ScanConfig& c) {
    if (c.j_start == 0 && !c.include_known) {
        throw std::invalid_argument("scan: j_start must be >= 1 (j = 0 needs include_known)");
    }
    if (c.j_end < c.j_start) throw std::invalid_argument("scan: empty range (j_end < j_start)");
    if (c.j_end > kMaxJ) throw std::invalid_argument("scan: j_end too large for 6j + 2");
    if (c.q < 2) throw std::invalid_argument("scan: q must be >= 2");
    if (c.radix < 2) throw std::invalid_argument("scan: radix must be >= 2");
    if (c.worker_count < 1) throw std::invalid_argument("scan: worker_count must be >= 1");
    if (c.block_size < 1) throw std::invalid_argument("scan: block_size must be >= 1");
    if (c.output_path.empty()) throw std::invalid_argument("scan: output path required");
    if (!(c.lower_c > 0.0 && c.lower_c < 1.0 / ln_3())) {
        throw std::invalid_argument("scan: lower_c must lie in (0, 1/ln 3)");
    }
}

// Summary statistics built row-by-row in ascending-j order.
struct Aggregate {
    double lower_c = 0;
    bool lower_is_default = true;
    uint64_t records = 0;
    uint64_t min_gamma = std::numeric_limits<uint64_t>::max();
    uint64_t argmin_j = 0;
    std::vector<uint64_t> hits;
    std::vector<uint64_t> lower_violations;
    std::vector<uint64_t> upper_violations;

    void add(const SearchRecord& r) {
        ++records;
        if (r.gamma < min_gamma) {
            min_gamma = r.gamma;
            argmin_j = r.j;
        }
        if (r.below_threshold) hits.push_back(r.j);
        // At the default c the lower bound is the record's lower_env itself.
        const double lower_bound =
            lower_is_default ? r.lower_env : lower_c * (r.upper_env * ln_3());
        if (static_cast<double>(r.gamma) <= lower_bound) lower_violations.push_back(r.j);
        if (static_cast<double>(r.gamma) >= r.upper_env) upper_violations.push_back(r.j);
    }
};

ScanSummary make_summary(const ScanConfig& config, Aggregate&& agg, uint64_t spot_passed,
                         std::chrono::steady_clock::time_point t0) {
    ScanSummary s;
    s.config = config;
    s.records_evaluated = agg.records;
    s.min_gamma = agg.min_gamma;
    s.argmin_j = agg.argmin_j;
    s.threshold_hits = std::move(agg.hits);
    s.lower_env_violations = std::move(agg.lower_violations);
    s.upper_env_violations = std::move(agg.upper_violations);
    s.spot_checks_passed = spot_passed;
    s.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return s;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

bool parse_u64(std::string_view s, uint64_t& out) {
    if (s.empty()) return false;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

bool parse_f64(std::string_view s, double& out) {
    if (s.empty()) return false;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

bool parse_row(std::string_view line, SearchRecord& r) {
    std::array<std::string_view, 7> field;
    size_t pos = 0;
    for (size_t i = 0; i < 7; ++i) {
        const size_t comma = line.find(',', pos);
        if (i < 6) {
            if (comma == std::string_view::npos) return false;
            field[i] = line.substr(pos, comma - pos);
            pos = comma + 1;
        } else {
            if (comma != std::string_view::npos) return false;
            field[i] = line.substr(pos);
        }
    }
    if (!parse_u64(field[0], r.j) || !parse_u64(field[1], r.n) || !parse_u64(field[2], r.gamma) ||
        !parse_f64(field[3], r.lower_env) || !parse_f64(field[4], r.upper_env) ||
        !parse_u64(field[5], r.rigorous_digits)) {
        return false;
    }
    if (field[6] == "true") {
        r.below_threshold = true;
    } else if (field[6] == "false") {
        r.below_threshold = false;
    } else {
        return false;
    }
    // Row sanity; failures mean the file is not a scan CSV (or is corrupt).
    if (r.j > kMaxJ || r.n != 6 * r.j + 2 || r.gamma > r.rigorous_digits) return false;
    return true;
}

bool parse_footer(std::string_view line, CsvContents& out) {
    constexpr std::string_view prefix = "# summary: min_gamma=";
    if (line.substr(0, prefix.size()) != prefix) return false;
    std::string_view rest = line.substr(prefix.size());

    const size_t sp1 = rest.find(' ');
    if (sp1 == std::string_view::npos) return false;
    if (!parse_u64(rest.substr(0, sp1), out.footer_min_gamma)) return false;
    rest = rest.substr(sp1 + 1);

    constexpr std::string_view tag_argmin = "argmin_j=";
    if (rest.substr(0, tag_argmin.size()) != tag_argmin) return false;
    rest = rest.substr(tag_argmin.size());
    const size_t sp2 = rest.find(' ');
    if (sp2 == std::string_view::npos) return false;
    if (!parse_u64(rest.substr(0, sp2), out.footer_argmin_j)) return false;
    rest = rest.substr(sp2 + 1);

    constexpr std::string_view tag_hits = "hits=";
    if (rest.substr(0, tag_hits.size()) != tag_hits) return false;
    return parse_u64(rest.substr(tag_hits.size()), out.footer_hits);
}

}  // namespace

SearchRecord evaluate_point(uint64_t j, uint32_t q, uint32_t radix, uint64_t threshold) {
    if (q < 2) throw std::invalid_argument("evaluate_point: q must be >= 2");
    if (radix < 2) throw std::invalid_argument("evaluate_point: radix must be >= 2");
    if (j > kMaxJ) throw std::invalid_argument("evaluate_point: j too large for 6j + 2");

    SearchRecord r;
    r.j = j;
    r.n = 6 * j + 2;
    const DigitStats stats = digit_stats(pow(BigNat{r.n}, q), radix);
    r.gamma = stats.nonzero_count;
    r.rigorous_digits = stats.digit_count;
    const double ln_n = std::log(static_cast<double>(r.n));
    r.lower_env = q * ln_n / (3.0 * ln_3());
    r.upper_env = q * ln_n / ln_3();
    r.below_threshold = r.gamma <= threshold;
    if (r.gamma > r.rigorous_digits) {
        throw std::logic_error("evaluate_point: nonzero count exceeded digit count");
    }
    return r;
}

std::pair<bool, bool> check_envelopes(const SearchRecord& record, const EnvelopeConfig& env) {
    if (!(env.c > 0.0 && env.c < 1.0 / ln_3())) {
        throw std::invalid_argument("check_envelopes: c must lie in (0, 1/ln 3)");
    }
    const double ln_nq = record.upper_env * ln_3();  // q ln n
    const bool lower_ok = static_cast<double>(record.gamma) > env.c * ln_nq;
    const bool upper_ok = static_cast<double>(record.gamma) < record.upper_env;
    return {lower_ok, upper_ok};
}

std::string format_csv_row(const SearchRecord& r) {
    char buf[192];
    const int len = std::snprintf(
        buf, sizeof buf, "%llu,%llu,%llu,%.6f,%.6f,%llu,%s",
        static_cast<unsigned long long>(r.j), static_cast<unsigned long long>(r.n),
        static_cast<unsigned long long>(r.gamma), r.lower_env, r.upper_env,
        static_cast<unsigned long long>(r.rigorous_digits),
        r.below_threshold ? "true" : "false");
    return std::string(buf, static_cast<size_t>(len));
}

std::string format_csv_footer(uint64_t min_gamma, uint64_t argmin_j, uint64_t hit_count) {
    char buf[128];
    const int len = std::snprintf(buf, sizeof buf, "# summary: min_gamma=%llu argmin_j=%llu hits=%llu",
                                  static_cast<unsigned long long>(min_gamma),
                                  static_cast<unsigned long long>(argmin_j),
                                  static_cast<unsigned long long>(hit_count));
    return std::string(buf, static_cast<size_t>(len));
}

CsvContents read_scan_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scan CSV: " + path);
    std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};

    CsvContents out;
    bool saw_header = false;
    size_t pos = 0;
    while (pos < content.size()) {
        const size_t eol = content.find('\n', pos);
        const bool has_newline = eol != std::string::npos;
        const size_t line_end = has_newline ? eol + 1 : content.size();
        const std::string_view line(content.data() + pos, (has_newline ? eol : content.size()) - pos);

        if (!saw_header) {
            if (!has_newline || line != kCsvHeader) {
                throw IoError("not a scan CSV (unexpected header): " + path);
            }
            saw_header = true;
        } else if (out.complete) {
            // Anything after the footer is an interrupted or foreign tail.
            out.torn_tail = true;
            break;
        } else if (!line.empty() && line.front() == '#') {
            if (!has_newline || !parse_footer(line, out)) {
                out.torn_tail = true;
                break;
            }
            out.complete = true;
        } else {
            SearchRecord r;
            if (!has_newline || !parse_row(line, r)) {
                out.torn_tail = true;
                break;
            }
            out.records.push_back(r);
        }
        out.clean_bytes = line_end;
        pos = line_end;
    }
    if (!saw_header) throw IoError("not a scan CSV (missing header): " + path);
    return out;
}

ScanSummary scan(const ScanConfig& config) {
    validate(config);
    const auto t0 = std::chrono::steady_clock::now();

    Aggregate agg;
    agg.lower_c = config.lower_c;
    agg.lower_is_default = config.lower_c == default_lower_c();
    uint64_t first_j = config.j_start;
    bool append = false;

    // An existing zero-byte file is a scan that died before its header.
    if (config.resume && std::filesystem::exists(config.output_path) &&
        std::filesystem::file_size(config.output_path) > 0) {
        CsvContents existing = read_scan_csv(config.output_path);
        for (size_t i = 0; i < existing.records.size(); ++i) {
            if (existing.records[i].j != config.j_start + i) {
                throw IoError("resume: existing rows are not contiguous from j_start");
            }
            if (existing.records[i].j > config.j_end) {
                throw IoError("resume: existing rows extend beyond j_end");
            }
        }
        if (existing.complete) {
            if (existing.records.empty() || existing.records.back().j != config.j_end) {
                throw IoError("resume: file has a summary footer but covers a different range");
            }
            if (existing.torn_tail) {
                std::filesystem::resize_file(config.output_path, existing.clean_bytes);
            }
            for (const SearchRecord& r : existing.records) agg.add(r);
            return make_summary(config, std::move(agg), 0, t0);
        }
        if (existing.torn_tail) {
            std::filesystem::resize_file(config.output_path, existing.clean_bytes);
        }
        for (const SearchRecord& r : existing.records) agg.add(r);
        first_j = existing.records.empty() ? config.j_start : existing.records.back().j + 1;
        append = true;
    }

    std::ofstream out(config.output_path,
                      std::ios::binary | (append ? std::ios::app : std::ios::trunc));
    if (!out) throw IoError("cannot open output file: " + config.output_path);
    if (!append) out << kCsvHeader << '\n';

    const uint64_t remaining = first_j > config.j_end ? 0 : config.j_end - first_j + 1;

    // Deterministic spot-check plan: sampled j-values are recomputed through
    // the reference conversion path and must agree exactly.
    std::unordered_set<uint64_t> spot_js;
    if (remaining > 0 && config.spot_checks > 0) {
        const uint64_t want = std::min(config.spot_checks, remaining);
        if (want == remaining) {
            for (uint64_t j = first_j; j <= config.j_end; ++j) spot_js.insert(j);
        } else {
            uint64_t seed = 0;
            for (uint64_t v : {config.j_start, config.j_end, uint64_t{config.q}, uint64_t{config.radix}}) {
                seed = splitmix64(seed ^ v);
            }
            std::mt19937_64 rng(seed);
            while (spot_js.size() < want) spot_js.insert(first_j + rng() % remaining);
        }
    }
    std::atomic<uint64_t> spot_passed{0};

    const uint64_t block_count =
        remaining == 0 ? 0 : (remaining + config.block_size - 1) / config.block_size;
    std::atomic<uint64_t> next_block{0};
    std::atomic<bool> failed{false};
    std::mutex mu;
    std::condition_variable cv;
    std::map<uint64_t, std::vector<SearchRecord>> finished;
    std::exception_ptr first_error;

    auto record_error = [&](std::exception_ptr e) {
        {
            std::lock_guard<std::mutex> lock(mu);
            if (!first_error) first_error = std::move(e);
        }
        failed.store(true, std::memory_order_relaxed);
        cv.notify_all();
    };

    auto worker = [&]() {
        try {
            for (;;) {
                if (failed.load(std::memory_order_relaxed)) return;
                const uint64_t b = next_block.fetch_add(1, std::memory_order_relaxed);
                if (b >= block_count) return;
                const uint64_t lo = first_j + b * config.block_size;
                const uint64_t hi = std::min(config.j_end, lo + (config.block_size - 1));
                std::vector<SearchRecord> rows;
                rows.reserve(hi - lo + 1);
                for (uint64_t j = lo; j <= hi; ++j) {
                    SearchRecord r = evaluate_point(j, config.q, config.radix, config.threshold);
                    if (spot_js.count(j) != 0) {
                        const RadixExpansion ref = to_radix(pow(BigNat{r.n}, config.q), config.radix);
                        uint64_t ref_gamma = 0;
                        for (uint32_t d : ref.digits) {
                            if (d != 0) ++ref_gamma;
                        }
                        if (ref_gamma != r.gamma || ref.digits.size() != r.rigorous_digits) {
                            throw std::logic_error(
                                "scan: conversion paths disagree at j = " + std::to_string(j));
                        }
                        spot_passed.fetch_add(1, std::memory_order_relaxed);
                    }
                    rows.push_back(r);
                }
                {
                    std::lock_guard<std::mutex> lock(mu);
                    finished.emplace(b, std::move(rows));
                }
                cv.notify_all();
            }
        } catch (...) {
            record_error(std::current_exception());
        }
    };

    std::vector<std::thread> threads;
    if (block_count > 0) {
        const unsigned n_workers = static_cast<unsigned>(
            std::min<uint64_t>(config.worker_count, block_count));
        threads.reserve(n_workers);
        for (unsigned i = 0; i < n_workers; ++i) threads.emplace_back(worker);
    }

    // Single writer (this thread) keeps the file in ascending-j order.
    std::string buffer;
    for (uint64_t b = 0; b < block_count; ++b) {
        std::vector<SearchRecord> rows;
        {
            std::unique_lock<std::mutex> lock(mu);
            cv.wait(lock, [&] {
                return finished.count(b) != 0 || failed.load(std::memory_order_relaxed);
            });
            const auto it = finished.find(b);
            if (it == finished.end()) break;  // a worker failed before b
            rows = std::move(it->second);
            finished.erase(it);
        }
        buffer.clear();
        for (const SearchRecord& r : rows) {
            agg.add(r);
            buffer += format_csv_row(r);
            buffer += '\n';
        }
        out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        if (!out) {
            record_error(std::make_exception_ptr(IoError("write failed: " + config.output_path)));
            break;
        }
    }
    for (std::thread& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);

    out << format_csv_footer(agg.min_gamma, agg.argmin_j, agg.hits.size()) << '\n';
    out.flush();
    if (!out) throw IoError("write failed: " + config.output_path);

    return make_summary(config, std::move(agg), spot_passed.load(), t0);
}

}  // namespace ternary5
