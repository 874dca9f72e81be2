#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "wellpath/errors.hpp"

namespace wellpath::chart {

enum class ChartKind { vd_vs_hd, north_vs_east, hookload_profile, pct_difference };

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;  // (x, y)
};

struct ChartSpec {
    ChartKind kind = ChartKind::vd_vs_hd;
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

namespace detail {

inline std::string fmt2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::string fmt_tick(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

inline const char* series_color(size_t i) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b"};
    return palette[i % 6];
}

}  // namespace detail

// Self-contained static SVG, fixed 800x600 canvas, coordinates quantized to
// two decimals so repeated renders are byte-identical. Depth charts
// (vd_vs_hd) draw depth increasing downward.
inline std::string render_svg(const ChartSpec& spec) {
    if (spec.series.empty()) throw DomainError("render_svg: no series");
    for (const auto& s : spec.series) {
        if (s.points.empty()) throw DomainError("render_svg: empty series '" + s.name + "'");
        if (spec.kind == ChartKind::hookload_profile || spec.kind == ChartKind::pct_difference)
            for (size_t i = 1; i < s.points.size(); ++i)
                if (s.points[i].first <= s.points[i - 1].first)
                    throw DomainError("render_svg: profile series x must be monotone");
    }

    constexpr double W = 800.0, H = 600.0;
    constexpr double ml = 90.0, mr = 30.0, mt = 50.0, mb = 70.0;
    const double pw = W - ml - mr, ph = H - mt - mb;

    double xmin = spec.series[0].points[0].first, xmax = xmin;
    double ymin = spec.series[0].points[0].second, ymax = ymin;
    for (const auto& s : spec.series)
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x); xmax = std::max(xmax, x);
            ymin = std::min(ymin, y); ymax = std::max(ymax, y);
        }
    if (xmax == xmin) { xmax += 1.0; xmin -= 1.0; }
    if (ymax == ymin) { ymax += 1.0; ymin -= 1.0; }

    const bool y_down = (spec.kind == ChartKind::vd_vs_hd);
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) {
        const double f = (y - ymin) / (ymax - ymin);
        return y_down ? mt + f * ph : mt + (1.0 - f) * ph;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    svg += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    svg += "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"18\">" + spec.title + "</text>\n";

    // frame
    svg += "<rect x=\"" + detail::fmt2(ml) + "\" y=\"" + detail::fmt2(mt) + "\" width=\"" +
           detail::fmt2(pw) + "\" height=\"" + detail::fmt2(ph) +
           "\" fill=\"none\" stroke=\"black\"/>\n";

    // axis labels and min/max ticks
    svg += "<text x=\"400\" y=\"585\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">" + spec.x_label + "</text>\n";
    svg += "<text x=\"20\" y=\"300\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\" transform=\"rotate(-90 20 300)\">" + spec.y_label + "</text>\n";
    svg += "<text x=\"" + detail::fmt2(ml) + "\" y=\"" + detail::fmt2(H - mb + 20.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           detail::fmt_tick(xmin) + "</text>\n";
    svg += "<text x=\"" + detail::fmt2(W - mr) + "\" y=\"" + detail::fmt2(H - mb + 20.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           detail::fmt_tick(xmax) + "</text>\n";
    const double ytop_val = y_down ? ymin : ymax;
    const double ybot_val = y_down ? ymax : ymin;
    svg += "<text x=\"" + detail::fmt2(ml - 8.0) + "\" y=\"" + detail::fmt2(mt + 4.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
           detail::fmt_tick(ytop_val) + "</text>\n";
    svg += "<text x=\"" + detail::fmt2(ml - 8.0) + "\" y=\"" + detail::fmt2(H - mb + 4.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
           detail::fmt_tick(ybot_val) + "</text>\n";

    for (size_t si = 0; si < spec.series.size(); ++si) {
        const auto& s = spec.series[si];
        std::string pts;
        for (const auto& [x, y] : s.points) {
            pts += detail::fmt2(px(x));
            pts += ',';
            pts += detail::fmt2(py(y));
            pts += ' ';
        }
        if (!pts.empty()) pts.pop_back();
        svg += std::string("<polyline fill=\"none\" stroke=\"") + detail::series_color(si) +
               "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
        // legend entry
        const double ly = mt + 16.0 + 18.0 * static_cast<double>(si);
        svg += std::string("<line x1=\"") + detail::fmt2(ml + 12.0) + "\" y1=\"" +
               detail::fmt2(ly - 4.0) + "\" x2=\"" + detail::fmt2(ml + 40.0) + "\" y2=\"" +
               detail::fmt2(ly - 4.0) + "\" stroke=\"" + detail::series_color(si) +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + detail::fmt2(ml + 46.0) + "\" y=\"" + detail::fmt2(ly) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + s.name + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace wellpath::chart
