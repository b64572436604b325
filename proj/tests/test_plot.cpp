#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ternary5/plot.hpp"
#include "ternary5/scan.hpp"

using namespace ternary5;
namespace fs = std::filesystem;

namespace {

fs::path test_dir() {
    const fs::path dir = fs::temp_directory_path() / "ternary5_plot_tests";
    fs::create_directories(dir);
    return dir;
}

std::string make_scan_csv(uint64_t j_start, uint64_t j_end, const char* name) {
    const fs::path out = test_dir() / name;
    ScanConfig config;
    config.j_start = j_start;
    config.j_end = j_end;
    config.worker_count = 2;
    config.output_path = out.string();
    scan(config);
    return out.string();
}

size_t count_occurrences(const std::string& text, const std::string& needle) {
    size_t count = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("plot renders a scan CSV deterministically") {
    PlotSpec spec;
    spec.input_path = make_scan_csv(1, 50, "fifty.csv");
    const std::string svg1 = render_scan_svg(spec);
    const std::string svg2 = render_scan_svg(spec);
    CHECK(svg1 == svg2);
    CHECK(svg1.starts_with("<?xml"));
    CHECK(svg1.find("</svg>") != std::string::npos);
    CHECK(svg1.find("<polyline") != std::string::npos);
    CHECK(svg1.find("stroke-dasharray") != std::string::npos);  // threshold line
    // 50 gamma points; j = 1 violates the strict upper envelope so it is
    // drawn in the violation group, the rest in the base group
    CHECK(count_occurrences(svg1, "<circle") == 50);
    CHECK(count_occurrences(svg1, "<g fill=\"#ff7f0e\">") == 1);
}

TEST_CASE("plot of a one-row CSV is a valid single-point SVG") {
    PlotSpec spec;
    spec.input_path = make_scan_csv(2, 2, "one.csv");
    const std::string svg = render_scan_svg(spec);
    CHECK(count_occurrences(svg, "<circle") == 1);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("downsampling keeps every stride-th point plus all flagged points") {
    PlotSpec spec;
    spec.input_path = make_scan_csv(1, 25000, "big.csv");
    const std::string svg = render_scan_svg(spec);
    // stride = ceil(25000 / 10000) = 3 -> indices 0, 3, ..., 24999 = 8334
    // points; the one violation (j = 1, index 0) is on the stride already.
    CHECK(count_occurrences(svg, "<circle") == 8334);

    spec.max_points = 100;  // stride 250; violation j = 1 still kept
    const std::string coarse = render_scan_svg(spec);
    CHECK(count_occurrences(coarse, "<circle") == 100);
}

TEST_CASE("series toggles and the j-window") {
    PlotSpec spec;
    spec.input_path = make_scan_csv(1, 30, "toggles.csv");

    spec.show_lower_env = false;
    spec.show_upper_env = false;
    const std::string no_env = render_scan_svg(spec);
    CHECK(count_occurrences(no_env, "<polyline") == 0);

    spec.show_gamma = false;
    spec.show_threshold_line = false;
    CHECK_THROWS_AS(render_scan_svg(spec), std::invalid_argument);

    spec.show_gamma = true;
    spec.j_min = 10;
    spec.j_max = 20;
    const std::string window = render_scan_svg(spec);
    CHECK(count_occurrences(window, "<circle") == 11);

    spec.j_min = 21;
    spec.j_max = 20;
    CHECK_THROWS_AS(render_scan_svg(spec), std::invalid_argument);

    spec.j_min = 4000;
    spec.j_max = 5000;  // outside the data
    CHECK_THROWS_AS(render_scan_svg(spec), std::invalid_argument);
}

TEST_CASE("plot input errors") {
    PlotSpec spec;
    spec.input_path = (test_dir() / "missing.csv").string();
    CHECK_THROWS_AS(render_scan_svg(spec), IoError);

    const fs::path garbage = test_dir() / "garbage.csv";
    std::ofstream(garbage) << "this is not a scan csv\n";
    spec.input_path = garbage.string();
    CHECK_THROWS_AS(render_scan_svg(spec), IoError);

    const fs::path empty = test_dir() / "empty_rows.csv";
    std::ofstream(empty) << kCsvHeader << "\n";
    spec.input_path = empty.string();
    CHECK_THROWS_AS(render_scan_svg(spec), IoError);

    const fs::path torn = test_dir() / "torn_plot.csv";
    std::ofstream(torn) << kCsvHeader << "\n1,8,10,3.154649,9.463946,10,false\n2,14,7";
    spec.input_path = torn.string();
    CHECK_THROWS_AS(render_scan_svg(spec), IoError);
}

TEST_CASE("write_scan_svg writes the rendered bytes") {
    PlotSpec spec;
    spec.input_path = make_scan_csv(1, 10, "write.csv");
    spec.output_path = (test_dir() / "write.svg").string();
    write_scan_svg(spec);

    std::ifstream in(spec.output_path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == render_scan_svg(spec));

    spec.output_path = "/nonexistent_dir_ternary5/x.svg";
    CHECK_THROWS_AS(write_scan_svg(spec), IoError);
}
