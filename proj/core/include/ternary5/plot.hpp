#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ternary5/scan.hpp"

namespace ternary5 {

/// Static SVG scatter of a scan CSV: gamma vs j, optional envelope curves,
/// optional horizontal threshold line. Output is byte-identical for
/// identical input.
struct PlotSpec {
    std::string input_path;
    std::string output_path;
    std::optional<uint64_t> j_min;  // default: first j in the file
    std::optional<uint64_t> j_max;  // default: last j in the file
    bool show_gamma = true;
    bool show_lower_env = true;
    bool show_upper_env = true;
    bool show_threshold_line = true;
    uint64_t threshold = 3;     // y-position of the horizontal line
    uint64_t max_points = 10000;  // downsample beyond this many rows
};

/// Renders the SVG text. Throws IoError for a missing or malformed CSV and
/// std::invalid_argument for an invalid spec (no series enabled, empty or
/// inverted j-window).
std::string render_scan_svg(const PlotSpec& spec);

/// render_scan_svg plus the file write.
void write_scan_svg(const PlotSpec& spec);

}  // namespace ternary5
