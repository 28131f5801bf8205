// trajectory.hpp — model parameters and sampled Bloch-vector time series

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinstar/bloch.hpp"

namespace spinstar {

struct ModelParams {
    static constexpr int kInfinite = -1;

    int n_bath{1};        // number of bath spins, or kInfinite for the N→∞ limit
    double alpha{1.0};    // coupling strength (rescaled coupling when infinite)
    BlochVector v0{};

    bool infinite() const { return n_bath == kInfinite; }

    void validate() const {
        if (!infinite() && n_bath < 0)
            throw std::invalid_argument("ModelParams: n_bath must be >= 0 or infinite");
        if (!std::isfinite(alpha))
            throw std::invalid_argument("ModelParams: alpha must be finite");
    }
};

struct Trajectory {
    std::vector<double> times;
    std::vector<double> v1, v2, v3;
    std::vector<double> radius;
    std::vector<double> entropy; // NaN where the point lies outside the Bloch sphere

    std::string method;      // "exact", "limit", "tcl", "nz", "born", "redfield"
    int order{0};            // truncation order for tcl/nz, 0 otherwise
    std::string convention;  // "paper" / "moment-matched" for nz, "" otherwise
    ModelParams params;

    std::size_t size() const { return times.size(); }

    void push_back(double t, const BlochVector& v) {
        times.push_back(t);
        v1.push_back(v.v1);
        v2.push_back(v.v2);
        v3.push_back(v.v3);
        const double r = v.r();
        radius.push_back(r);
        entropy.push_back(entropy_or_nan(r));
    }

    BlochVector at(std::size_t i) const { return {v1[i], v2[i], v3[i]}; }
};

inline std::vector<double> time_grid(double t_max, std::size_t steps) {
    if (steps < 2) throw std::invalid_argument("time_grid: need at least 2 steps");
    if (!(t_max > 0.0)) throw std::invalid_argument("time_grid: t_max must be positive");
    std::vector<double> ts(steps);
    for (std::size_t i = 0; i < steps; ++i)
        ts[i] = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    return ts;
}

} // namespace spinstar
