// limit.hpp — analytic N→∞ limit of the reduced dynamics

#pragma once

#include <vector>

#include "spinstar/dawson.hpp"
#include "spinstar/trajectory.hpp"

namespace spinstar {

// g(t) = −αt e^{−2α²t²} √(π/2) erfi(√2 αt) = −√2 αt D(√2 αt).
// g(0) = 0 and g(t) → −1/2 for t → ∞, approached like −1/(8(αt)²).
inline double limit_g(double alpha, double t) {
    const double x = alpha * t;
    const double y = std::sqrt(2.0) * x;
    return -y * dawson(y);
}

// f12 = 1 + g, f3 = 1 + 2g with the rescaled coupling α → α/√N absorbed in α.
inline double limit_f12(double alpha, double t) { return 1.0 + limit_g(alpha, t); }
inline double limit_f3(double alpha, double t) { return 1.0 + 2.0 * limit_g(alpha, t); }

inline Trajectory propagate_limit(const ModelParams& params, const std::vector<double>& times) {
    params.validate();
    Trajectory traj;
    traj.method = "limit";
    traj.params = params;
    traj.params.n_bath = ModelParams::kInfinite;
    for (const double t : times) {
        const double g = limit_g(params.alpha, t);
        const double a = 1.0 + g;
        const double b = 1.0 + 2.0 * g;
        traj.push_back(t, {a * params.v0.v1, a * params.v0.v2, b * params.v0.v3});
    }
    return traj;
}

} // namespace spinstar
