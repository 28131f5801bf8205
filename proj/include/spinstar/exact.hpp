// exact.hpp — exact reduced dynamics of the central spin at finite N

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spinstar/spectrum.hpp"
#include "spinstar/trajectory.hpp"

namespace spinstar {

namespace detail {

struct KahanSum {
    double sum{0.0};
    double carry{0.0};
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Both spectral sums share the multiplet weights; cache them per evaluation
// batch. f12 folds the m-sum using the m → −m symmetry of its summand; the
// f3 summand has no such symmetry, so it is summed over the full range.
class SpectralEvaluator {
public:
    explicit SpectralEvaluator(int n_bath)
        : n_bath_(n_bath), weights_(spectrum_weights(n_bath)) {}

    double f12(double x) const {
        KahanSum acc;
        std::size_t idx = 0;
        for (int two_j = n_bath_ & 1; two_j <= n_bath_; two_j += 2, ++idx) {
            const double w = weights_[idx];
            for (int two_m = two_j % 2; two_m <= two_j; two_m += 2) {
                const double hp = coupling_h(two_j, two_m);
                const double hm = coupling_h(two_j, -two_m);
                const double term = w * std::cos(2.0 * hp * x) * std::cos(2.0 * hm * x);
                acc.add(two_m == 0 ? term : 2.0 * term);
            }
        }
        return acc.sum;
    }

    double f3(double x) const {
        KahanSum acc;
        std::size_t idx = 0;
        for (int two_j = n_bath_ & 1; two_j <= n_bath_; two_j += 2, ++idx) {
            const double w = weights_[idx];
            for (int two_m = -two_j; two_m <= two_j; two_m += 2)
                acc.add(w * std::cos(4.0 * coupling_h(two_j, two_m) * x));
        }
        return acc.sum;
    }

private:
    int n_bath_;
    std::vector<double> weights_;
};

inline void require_finite_bath(int n_bath, const char* where) {
    if (n_bath == ModelParams::kInfinite)
        throw std::invalid_argument(std::string(where) +
                                    ": use the N->infinity limit operations for an infinite bath");
    if (n_bath < 0) throw std::domain_error(std::string(where) + ": negative bath size");
}

} // namespace detail

// f12(t) = Σ_{j,m} n(j,N) cos[2h(j,m)αt] cos[2h(j,−m)αt] / 2^N
inline double f12(int n_bath, double alpha, double t) {
    detail::require_finite_bath(n_bath, "f12");
    return detail::SpectralEvaluator(n_bath).f12(alpha * t);
}

// f3(t) = Σ_{j,m} n(j,N) cos[4h(j,m)αt] / 2^N
inline double f3(int n_bath, double alpha, double t) {
    detail::require_finite_bath(n_bath, "f3");
    return detail::SpectralEvaluator(n_bath).f3(alpha * t);
}

// v±(t) = f12(t) v±(0),  v3(t) = f3(t) v3(0)
inline Trajectory propagate_exact(const ModelParams& params, const std::vector<double>& times) {
    params.validate();
    detail::require_finite_bath(params.n_bath, "propagate_exact");
    detail::SpectralEvaluator eval(params.n_bath);
    Trajectory traj;
    traj.method = "exact";
    traj.params = params;
    for (const double t : times) {
        const double x = params.alpha * t;
        const double a = eval.f12(x);
        const double b = eval.f3(x);
        traj.push_back(t, {a * params.v0.v1, a * params.v0.v2, b * params.v0.v3});
    }
    return traj;
}

} // namespace spinstar
