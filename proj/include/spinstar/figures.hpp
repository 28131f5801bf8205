// figures.hpp — reproduction of the reference plots as CSV datasets + SVG

#pragma once

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "spinstar/io.hpp"
#include "spinstar/solvers.hpp"
#include "spinstar/svg.hpp"

namespace spinstar::figures {

struct Dataset {
    std::string id;
    std::string title;
    std::string x_label{"alpha*t"};
    std::vector<std::string> columns;            // first column is the time axis
    std::vector<std::vector<double>> values;     // column-major, aligned with `columns`
    double plot_ymin{std::numeric_limits<double>::quiet_NaN()};
    double plot_ymax{std::numeric_limits<double>::quiet_NaN()};
};

inline const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"ninf-vpm",    "ninf-v3", "entropy",
                                                 "compare-vpm", "compare-v3", "error",
                                                 "order10-vpm", "order10-v3"};
    return ids;
}

namespace detail {

inline std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

inline std::vector<double> logspace(double a, double b, std::size_t n) {
    std::vector<double> out(n);
    const double la = std::log10(a), lb = std::log10(b);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::pow(10.0, la + (lb - la) * static_cast<double>(i) /
                                    static_cast<double>(n - 1));
    return out;
}

// Limit curves vs exact curves with the coupling rescaled as α/√N.
inline Dataset build_ninf(Channel channel) {
    const bool v3 = channel == Channel::V3;
    Dataset ds;
    ds.id = v3 ? "ninf-v3" : "ninf-vpm";
    ds.title = v3 ? "v3 component: finite N vs N->infinity"
                  : "v± component: finite N vs N->infinity";
    const auto ts = linspace(0.0, 3.0, 301);
    ds.columns = {"t", "exact_n20", "exact_n200", "limit"};
    ds.values.push_back(ts);
    for (const int n : {20, 200})
        ds.values.push_back(exact_factor(channel, n, 1.0 / std::sqrt(double(n)), ts));
    ds.values.push_back(limit_factor(channel, 1.0, ts));
    return ds;
}

inline Dataset build_entropy() {
    Dataset ds;
    ds.id = "entropy";
    ds.title = "Von Neumann entropy in the N->infinity limit";
    const auto ts = linspace(0.0, 4.0, 401);
    ds.columns = {"t"};
    ds.values.push_back(ts);
    const std::vector<std::pair<double, double>> initial = {
        {1.0, 1.0}, {1.0, 0.5}, {1.0, 0.0}, {0.5, 0.25}};
    for (const auto& [r0, v30] : initial) {
        const double v10 = std::sqrt(std::max(0.0, r0 * r0 - v30 * v30));
        ModelParams params{ModelParams::kInfinite, 1.0, {v10, 0.0, v30}};
        const Trajectory traj = propagate_limit(params, ts);
        std::string label = "r0=" + io::format_double(r0).substr(0, 4) +
                            " v3=" + io::format_double(v30).substr(0, 4);
        ds.columns.push_back(label);
        ds.values.push_back(traj.entropy);
    }
    ds.plot_ymin = 0.0;
    ds.plot_ymax = 0.75;
    return ds;
}

// Exact vs second- and fourth-order TCL/NZ for a bath of 100 spins.
inline Dataset build_compare(Channel channel) {
    const bool v3 = channel == Channel::V3;
    Dataset ds;
    ds.id = v3 ? "compare-v3" : "compare-vpm";
    ds.title = std::string(v3 ? "v3" : "v±") + " component: TCL/NZ orders 2,4 vs exact (N=100)";
    const int n = 100;
    const auto ts = linspace(0.0, 0.2, 401);
    ds.columns = {"t", "exact", "tcl2", "tcl4", "nz2", "nz4"};
    ds.values.push_back(ts);
    ds.values.push_back(exact_factor(channel, n, 1.0, ts));
    ds.values.push_back(tcl_factor(channel, 2, n, 1.0, ts));
    ds.values.push_back(tcl_factor(channel, 4, n, 1.0, ts));
    ds.values.push_back(nz_factor(channel, 2, NzConvention::MomentMatched, 1e-12, n, 1.0, ts));
    ds.values.push_back(nz_factor(channel, 4, NzConvention::MomentMatched, 1e-12, n, 1.0, ts));
    ds.plot_ymin = -1.3;
    ds.plot_ymax = 1.3;
    return ds;
}

// Deviation of TCL2 / NZ2 from the exact v± solution at small times; both
// curves scale like (αt)^4.
inline Dataset build_error() {
    Dataset ds;
    ds.id = "error";
    ds.title = "Error of TCL2 and NZ2 for v± (N=100)";
    const int n = 100;
    const auto ts = logspace(1e-3, 1e-2, 61);
    const auto exact = exact_factor(Channel::VPM, n, 1.0, ts);
    const auto tcl2 = tcl_factor(Channel::VPM, 2, n, 1.0, ts);
    const auto nz2 = nz_factor(Channel::VPM, 2, NzConvention::MomentMatched, 1e-12, n, 1.0, ts);
    ds.columns = {"t", "err_tcl2", "err_nz2"};
    std::vector<double> e1(ts.size()), e2(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        e1[i] = std::abs(exact[i] - tcl2[i]);
        e2[i] = std::abs(exact[i] - nz2[i]);
    }
    ds.values = {ts, e1, e2};
    return ds;
}

inline Dataset build_order10(Channel channel) {
    const bool v3 = channel == Channel::V3;
    Dataset ds;
    ds.id = v3 ? "order10-v3" : "order10-vpm";
    ds.title = std::string(v3 ? "v3" : "v±") + " component: TCL10/NZ10 vs exact (N=100)";
    const int n = 100;
    const auto ts = linspace(0.0, 0.3, 601);
    ds.columns = {"t", "exact", "tcl10", "nz10"};
    ds.values.push_back(ts);
    ds.values.push_back(exact_factor(channel, n, 1.0, ts));
    ds.values.push_back(tcl_factor(channel, 10, n, 1.0, ts));
    ds.values.push_back(nz_factor(channel, 10, NzConvention::MomentMatched, 1e-12, n, 1.0, ts));
    ds.plot_ymin = -1.1;
    ds.plot_ymax = 1.1;
    return ds;
}

inline int thread_cap() {
    if (const char* env = std::getenv("SPINSTAR_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace detail

inline Dataset build(const std::string& id) {
    if (id == "ninf-vpm") return detail::build_ninf(Channel::VPM);
    if (id == "ninf-v3") return detail::build_ninf(Channel::V3);
    if (id == "entropy") return detail::build_entropy();
    if (id == "compare-vpm") return detail::build_compare(Channel::VPM);
    if (id == "compare-v3") return detail::build_compare(Channel::V3);
    if (id == "error") return detail::build_error();
    if (id == "order10-vpm") return detail::build_order10(Channel::VPM);
    if (id == "order10-v3") return detail::build_order10(Channel::V3);
    throw std::invalid_argument("unknown figure id: " + id);
}

inline void write_dataset_csv(const Dataset& ds, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    for (std::size_t c = 0; c < ds.columns.size(); ++c)
        os << (c ? "," : "") << ds.columns[c];
    os << '\n';
    const std::size_t rows = ds.values.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < ds.values.size(); ++c)
            os << (c ? "," : "") << io::format_double(ds.values[c][r]);
        os << '\n';
    }
}

inline void write_dataset_svg(const Dataset& ds, const std::filesystem::path& path) {
    std::vector<svg::Series> series;
    for (std::size_t c = 1; c < ds.values.size(); ++c)
        series.push_back({ds.columns[c], ds.values[0], ds.values[c]});
    svg::write_line_plot(path, ds.title, ds.x_label, series, ds.plot_ymin, ds.plot_ymax);
}

inline void emit(const std::string& id, const std::filesystem::path& outdir) {
    const Dataset ds = build(id);
    std::filesystem::create_directories(outdir);
    write_dataset_csv(ds, outdir / (id + ".csv"));
    write_dataset_svg(ds, outdir / (id + ".svg"));
}

// Builds datasets concurrently (capped by SPINSTAR_THREADS), writes serially.
inline void emit_all(const std::vector<std::string>& ids, const std::filesystem::path& outdir) {
    std::filesystem::create_directories(outdir);
    const int cap = detail::thread_cap();
    std::size_t next = 0;
    while (next < ids.size()) {
        std::vector<std::future<Dataset>> batch;
        for (int b = 0; b < cap && next < ids.size(); ++b, ++next)
            batch.push_back(std::async(std::launch::async, [id = ids[next]] { return build(id); }));
        for (auto& fut : batch) {
            const Dataset ds = fut.get();
            write_dataset_csv(ds, outdir / (ds.id + ".csv"));
            write_dataset_svg(ds, outdir / (ds.id + ".svg"));
        }
    }
}

} // namespace spinstar::figures
