#include "ternary5/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <vector>

namespace ternary5 {

namespace {

// Canvas geometry, fixed so output bytes depend only on the data.
constexpr double kWidth = 960.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 936.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 544.0;

std::string fmt(double v) {
    char buf[48];
    const int len = std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf, static_cast<size_t>(len));
}

struct Classified {
    const SearchRecord* r;
    bool hit;        // below_threshold
    bool violation;  // outside the envelope band
};

}  // namespace

std::string render_scan_svg(const PlotSpec& spec) {
    if (!spec.show_gamma && !spec.show_lower_env && !spec.show_upper_env &&
        !spec.show_threshold_line) {
        throw std::invalid_argument("plot: at least one series must be enabled");
    }
    if (spec.j_min && spec.j_max && *spec.j_min > *spec.j_max) {
        throw std::invalid_argument("plot: j_min exceeds j_max");
    }

    const CsvContents csv = read_scan_csv(spec.input_path);
    if (csv.torn_tail) throw IoError("plot: CSV has a torn or foreign tail: " + spec.input_path);
    if (csv.records.empty()) throw IoError("plot: CSV contains no records: " + spec.input_path);

    std::vector<const SearchRecord*> in_window;
    for (const SearchRecord& r : csv.records) {
        if (spec.j_min && r.j < *spec.j_min) continue;
        if (spec.j_max && r.j > *spec.j_max) continue;
        in_window.push_back(&r);
    }
    if (in_window.empty()) throw std::invalid_argument("plot: no records in the j-window");

    // Downsample: every stride-th point, plus every violation and hit.
    const uint64_t stride =
        in_window.size() <= spec.max_points
            ? 1
            : (in_window.size() + spec.max_points - 1) / spec.max_points;
    std::vector<Classified> kept;
    for (size_t i = 0; i < in_window.size(); ++i) {
        const SearchRecord& r = *in_window[i];
        const bool violation = static_cast<double>(r.gamma) <= r.lower_env ||
                               static_cast<double>(r.gamma) >= r.upper_env;
        const bool hit = r.below_threshold;
        if (i % stride == 0 || violation || hit) kept.push_back({&r, hit, violation});
    }

    const uint64_t j_lo = in_window.front()->j;
    const uint64_t j_hi = in_window.back()->j;
    double y_max = 1.0;
    for (const Classified& c : kept) {
        if (spec.show_gamma) y_max = std::max(y_max, static_cast<double>(c.r->gamma));
        if (spec.show_lower_env) y_max = std::max(y_max, c.r->lower_env);
        if (spec.show_upper_env) y_max = std::max(y_max, c.r->upper_env);
    }
    if (spec.show_threshold_line) y_max = std::max(y_max, static_cast<double>(spec.threshold));
    y_max *= 1.05;

    const double j_span = j_hi > j_lo ? static_cast<double>(j_hi - j_lo) : 1.0;
    auto x_of = [&](uint64_t j) {
        return kLeft + (kRight - kLeft) * (static_cast<double>(j - j_lo) / j_span);
    };
    auto y_of = [&](double v) { return kBottom - (kBottom - kTop) * (v / y_max); };

    std::string svg;
    svg.reserve(1 << 16);
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"600\" "
           "viewBox=\"0 0 960 600\">\n";
    svg += "<rect width=\"960\" height=\"600\" fill=\"#ffffff\"/>\n";

    // Axes.
    svg += "<g stroke=\"#000000\" stroke-width=\"1\">\n";
    svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" + fmt(kRight) +
           "\" y2=\"" + fmt(kBottom) + "\"/>\n";
    svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(kLeft) +
           "\" y2=\"" + fmt(kBottom) + "\"/>\n";
    svg += "</g>\n";

    svg += "<g font-family=\"monospace\" font-size=\"12\" fill=\"#000000\">\n";
    constexpr int kTicks = 5;
    for (int i = 0; i <= kTicks; ++i) {
        const uint64_t tj =
            j_lo + static_cast<uint64_t>((static_cast<double>(j_hi - j_lo) * i) / kTicks + 0.5);
        const double x = x_of(tj);
        svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" + fmt(x) +
               "\" y2=\"" + fmt(kBottom + 5) + "\" stroke=\"#000000\"/>\n";
        svg += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(kBottom + 20) +
               "\" text-anchor=\"middle\">" + std::to_string(tj) + "</text>\n";

        const double tv = y_max * i / kTicks;
        const double y = y_of(tv);
        svg += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(kLeft) +
               "\" y2=\"" + fmt(y) + "\" stroke=\"#000000\"/>\n";
        char tvbuf[48];
        std::snprintf(tvbuf, sizeof tvbuf, "%.1f", tv);
        svg += "<text x=\"" + fmt(kLeft - 9) + "\" y=\"" + fmt(y + 4) +
               "\" text-anchor=\"end\">" + tvbuf + "</text>\n";
    }
    svg += "<text x=\"" + fmt((kLeft + kRight) / 2) + "\" y=\"" + fmt(kHeight - 14) +
           "\" text-anchor=\"middle\">j</text>\n";
    svg += "<text x=\"18\" y=\"" + fmt((kTop + kBottom) / 2) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " + fmt((kTop + kBottom) / 2) +
           ")\">nonzero digits</text>\n";

    // Legend.
    double lx = kLeft;
    auto legend = [&](const char* color, const char* label) {
        svg += "<rect x=\"" + fmt(lx) + "\" y=\"14\" width=\"10\" height=\"10\" fill=\"" + color +
               "\"/>\n";
        svg += "<text x=\"" + fmt(lx + 14) + "\" y=\"23\">" + label + "</text>\n";
        lx += 14 + 8.0 * (std::char_traits<char>::length(label) + 3);
    };
    if (spec.show_gamma) legend("#1f77b4", "gamma");
    if (spec.show_lower_env) legend("#2ca02c", "lower envelope");
    if (spec.show_upper_env) legend("#d62728", "upper envelope");
    if (spec.show_threshold_line) legend("#7f7f7f", "threshold");
    svg += "</g>\n";

    auto polyline = [&](const char* color, auto value_of) {
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const Classified& c : kept) {
            if (!first) svg += ' ';
            svg += fmt(x_of(c.r->j)) + "," + fmt(y_of(value_of(*c.r)));
            first = false;
        }
        svg += "\"/>\n";
    };
    if (spec.show_lower_env) polyline("#2ca02c", [](const SearchRecord& r) { return r.lower_env; });
    if (spec.show_upper_env) polyline("#d62728", [](const SearchRecord& r) { return r.upper_env; });

    if (spec.show_threshold_line) {
        const double y = y_of(static_cast<double>(spec.threshold));
        svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(kRight) +
               "\" y2=\"" + fmt(y) +
               "\" stroke=\"#7f7f7f\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
    }

    if (spec.show_gamma) {
        svg += "<g fill=\"#1f77b4\">\n";
        for (const Classified& c : kept) {
            if (c.hit || c.violation) continue;
            svg += "<circle cx=\"" + fmt(x_of(c.r->j)) + "\" cy=\"" +
                   fmt(y_of(static_cast<double>(c.r->gamma))) + "\" r=\"2\"/>\n";
        }
        svg += "</g>\n";
        // Envelope violations and threshold hits stay visible at any stride.
        svg += "<g fill=\"#ff7f0e\">\n";
        for (const Classified& c : kept) {
            if (!c.violation || c.hit) continue;
            svg += "<circle cx=\"" + fmt(x_of(c.r->j)) + "\" cy=\"" +
                   fmt(y_of(static_cast<double>(c.r->gamma))) + "\" r=\"3\"/>\n";
        }
        svg += "</g>\n";
        svg += "<g fill=\"#d62728\">\n";
        for (const Classified& c : kept) {
            if (!c.hit) continue;
            svg += "<circle cx=\"" + fmt(x_of(c.r->j)) + "\" cy=\"" +
                   fmt(y_of(static_cast<double>(c.r->gamma))) + "\" r=\"3.5\"/>\n";
        }
        svg += "</g>\n";
    }

    svg += "</svg>\n";
    return svg;
}

void write_scan_svg(const PlotSpec& spec) {
    const std::string svg = render_scan_svg(spec);
    std::ofstream out(spec.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file: " + spec.output_path);
    out.write(svg.data(), static_cast<std::streamsize>(svg.size()));
    out.flush();
    if (!out) throw IoError("write failed: " + spec.output_path);
}

}  // namespace ternary5
