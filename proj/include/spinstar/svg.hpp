// svg.hpp — dependency-free SVG line plots for the figure datasets

#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace spinstar::svg {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

namespace detail {

inline const char* palette(std::size_t i) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    return colors[i % 8];
}

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace detail

// Fixed-size line plot, one polyline per series, NaN samples break the path.
// Passing finite y bounds pins the vertical range; curves are clipped to the
// plot area so diverging approximations do not squash the frame.
inline std::string render_line_plot(const std::string& title, const std::string& x_label,
                                    const std::vector<Series>& series,
                                    double fixed_ymin = std::numeric_limits<double>::quiet_NaN(),
                                    double fixed_ymax = std::numeric_limits<double>::quiet_NaN()) {
    constexpr double width = 820, height = 520;
    constexpr double ml = 70, mr = 170, mt = 42, mb = 52;
    const double pw = width - ml - mr, ph = height - mt - mb;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    if (!(xmin < xmax)) { xmin = 0; xmax = 1; }
    if (!(ymin < ymax)) { ymin -= 0.5; ymax += 0.5; }
    const double ypad = 0.04 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;
    if (std::isfinite(fixed_ymin)) ymin = fixed_ymin;
    if (std::isfinite(fixed_ymax)) ymax = fixed_ymax;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<defs><clipPath id=\"plotarea\"><rect x=\"" << ml << "\" y=\"" << mt << "\" width=\""
       << pw << "\" height=\"" << ph << "\"/></clipPath></defs>\n";
    os << "<text x=\"" << ml + pw / 2 << "\" y=\"24\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\" font-size=\"16\">"
       << title << "</text>\n";
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    constexpr int n_ticks = 6;
    for (int i = 0; i <= n_ticks; ++i) {
        const double fx = xmin + (xmax - xmin) * i / n_ticks;
        const double fy = ymin + (ymax - ymin) * i / n_ticks;
        os << "<line x1=\"" << px(fx) << "\" y1=\"" << mt + ph << "\" x2=\"" << px(fx)
           << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << px(fx) << "\" y=\"" << mt + ph + 20
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
           << detail::fmt(fx) << "</text>\n";
        os << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(fy) << "\" x2=\"" << ml << "\" y2=\""
           << py(fy) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << ml - 9 << "\" y=\"" << py(fy) + 4
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
           << detail::fmt(fy) << "</text>\n";
    }
    os << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << x_label
       << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const auto& ser = series[s];
        std::ostringstream path;
        bool pen_down = false;
        for (std::size_t i = 0; i < ser.x.size(); ++i) {
            if (!std::isfinite(ser.x[i]) || !std::isfinite(ser.y[i])) {
                pen_down = false;
                continue;
            }
            path << (pen_down ? " L " : " M ") << detail::fmt(px(ser.x[i])) << ' '
                 << detail::fmt(py(ser.y[i]));
            pen_down = true;
        }
        os << "<path clip-path=\"url(#plotarea)\" d=\"" << path.str()
           << "\" fill=\"none\" stroke=\"" << detail::palette(s)
           << "\" stroke-width=\"1.6\"/>\n";
        const double ly = mt + 18 + 20 * static_cast<double>(s);
        os << "<line x1=\"" << ml + pw + 10 << "\" y1=\"" << ly << "\" x2=\"" << ml + pw + 34
           << "\" y2=\"" << ly << "\" stroke=\"" << detail::palette(s)
           << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << ml + pw + 40 << "\" y=\"" << ly + 4
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << ser.label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

inline void write_line_plot(const std::filesystem::path& path, const std::string& title,
                            const std::string& x_label, const std::vector<Series>& series,
                            double fixed_ymin = std::numeric_limits<double>::quiet_NaN(),
                            double fixed_ymax = std::numeric_limits<double>::quiet_NaN()) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    os << render_line_plot(title, x_label, series, fixed_ymin, fixed_ymax);
}

} // namespace spinstar::svg
