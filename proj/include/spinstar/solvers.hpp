// solvers.hpp — truncated TCL / NZ / Born / Redfield equations of motion

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "spinstar/cumulants.hpp"
#include "spinstar/exact.hpp"
#include "spinstar/limit.hpp"
#include "spinstar/trajectory.hpp"

namespace spinstar {

enum class Method { Exact, Limit, Tcl, Nz, Born, Redfield };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::Limit: return "limit";
        case Method::Tcl: return "tcl";
        case Method::Nz: return "nz";
        case Method::Born: return "born";
        case Method::Redfield: return "redfield";
    }
    return "?";
}

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverSpec {
    Method method{Method::Exact};
    int order{2};                                        // even truncation order
    NzConvention convention{NzConvention::MomentMatched}; // NZ only
    double tolerance{1e-12};                              // NZ integrator

    // Born is NZ at order 2, Redfield is TCL at order 2.
    SolverSpec resolved() const {
        SolverSpec r = *this;
        if (method == Method::Born) { r.method = Method::Nz; r.order = 2; }
        if (method == Method::Redfield) { r.method = Method::Tcl; r.order = 2; }
        return r;
    }

    void validate() const {
        const SolverSpec r = resolved();
        if (r.method == Method::Tcl || r.method == Method::Nz) {
            if (r.order < 2 || r.order % 2 != 0)
                throw std::invalid_argument("SolverSpec: order must be even and >= 2");
            if (r.order > kMaxExpansionOrder)
                throw std::invalid_argument("SolverSpec: order exceeds supported maximum");
        }
        if (!(tolerance > 0.0)) throw std::invalid_argument("SolverSpec: tolerance must be > 0");
    }
};

namespace detail {

inline void check_times(const std::vector<double>& times) {
    if (times.empty()) throw std::invalid_argument("empty time grid");
    double prev = -1.0;
    for (const double t : times) {
        if (!(t >= 0.0)) throw std::invalid_argument("times must be nonnegative");
        if (t <= prev) throw std::invalid_argument("times must be strictly ascending");
        prev = t;
    }
}

// c_{2n}(N) α^{2n} for n = 1..order/2.
inline std::vector<double> scaled_coefficients(const CoefficientSet& set, int n_bath,
                                               double alpha) {
    std::vector<double> cs(set.c.size());
    double a2n = 1.0;
    for (std::size_t i = 0; i < set.c.size(); ++i) {
        a2n *= alpha * alpha;
        cs[i] = set.c[i].eval_double(static_cast<double>(n_bath)) * a2n;
    }
    return cs;
}

inline double factorial_double(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline void require_finite_for_expansion(const ModelParams& params, const char* what) {
    if (params.infinite())
        throw std::invalid_argument(std::string(what) +
                                    ": expansion coefficients are polynomials in N; "
                                    "finite bath required");
}

} // namespace detail

// ----------------------------------------------------------------------------
// TCL: time-local generator integrates in closed form,
//   v_c(t) = v_c(0) exp( Σ_{n<=K} c_{2n} α^{2n} t^{2n} / (2n)! ).
// ----------------------------------------------------------------------------

inline std::vector<double> tcl_factor(Channel channel, int order, int n_bath, double alpha,
                                      const std::vector<double>& times) {
    detail::check_times(times);
    const auto set = coefficient_set(ExpansionMethod::Tcl, channel, order);
    const auto cs = detail::scaled_coefficients(set, n_bath, alpha);
    std::vector<double> out;
    out.reserve(times.size());
    for (const double t : times) {
        double exponent = 0.0;
        double t2n = 1.0;
        for (std::size_t n = 1; n <= cs.size(); ++n) {
            t2n *= t * t;
            exponent += cs[n - 1] * t2n / detail::factorial_double(2 * static_cast<int>(n));
        }
        out.push_back(std::exp(exponent));
    }
    return out;
}

// ----------------------------------------------------------------------------
// NZ: memory kernel  v̇(t) = Σ_{n<=K} c_{2n} α^{2n} ∫₀ᵗ (t−τ)^{2n−2}/(2n−2)! v(τ) dτ
// reduced to a companion ODE with auxiliary states w_j(t) = ∫₀ᵗ (t−τ)^j/j! v dτ:
//   ẇ₀ = v, ẇ_j = w_{j−1}, v̇ = Σ c_{2n} α^{2n} w_{2n−2}.
// ----------------------------------------------------------------------------

inline std::vector<double> nz_factor(Channel channel, int order, NzConvention convention,
                                     double tolerance, int n_bath, double alpha,
                                     const std::vector<double>& times) {
    detail::check_times(times);
    const auto set = coefficient_set(ExpansionMethod::Nz, channel, order, convention);
    const auto cs = detail::scaled_coefficients(set, n_bath, alpha);

    if (order == 2) {
        // v'' = c2 α² v with v(0)=1, v'(0)=0.
        const double c2 = cs[0];
        std::vector<double> out;
        out.reserve(times.size());
        for (const double t : times) {
            if (c2 < 0.0) out.push_back(std::cos(std::sqrt(-c2) * t));
            else if (c2 > 0.0) out.push_back(std::cosh(std::sqrt(c2) * t));
            else out.push_back(1.0);
        }
        return out;
    }

    using State = std::vector<double>;
    const int dim = order; // v plus w_0..w_{order-2}
    // The evaluation budget turns a tolerance the controller cannot honor
    // (steps shrink toward the subnormal range) into a reported failure.
    long evals = 0;
    constexpr long eval_budget = 20'000'000;
    auto rhs = [&cs, dim, &evals](const State& y, State& dy, double) {
        if (++evals > eval_budget)
            throw SolverError("nz_factor: integrator exceeded its evaluation budget");
        dy.assign(dim, 0.0);
        for (std::size_t n = 1; n <= cs.size(); ++n) dy[0] += cs[n - 1] * y[2 * n - 1];
        dy[1] = y[0];
        for (int j = 2; j < dim; ++j) dy[j] = y[j - 1];
    };

    std::vector<double> grid = times;
    const bool prepend_zero = grid.front() > 0.0;
    if (prepend_zero) grid.insert(grid.begin(), 0.0);

    State y(dim, 0.0);
    y[0] = 1.0;
    std::vector<double> values;
    values.reserve(grid.size());

    namespace odeint = boost::numeric::odeint;
    using Stepper = odeint::runge_kutta_fehlberg78<State>;
    const double dt0 = std::max(grid.back() * 1e-4, 1e-12);
    try {
        odeint::integrate_times(odeint::make_controlled<Stepper>(tolerance, tolerance), rhs, y,
                                grid.begin(), grid.end(), dt0,
                                [&values](const State& s, double) { values.push_back(s[0]); });
    } catch (const SolverError&) {
        throw SolverError("nz_factor: integrator failed to meet tolerance " +
                          std::to_string(tolerance) + " within its evaluation budget");
    } catch (const std::exception& e) {
        throw SolverError(std::string("nz_factor: integrator failed to meet tolerance ") +
                          std::to_string(tolerance) + " (" + e.what() + ")");
    }
    if (prepend_zero) values.erase(values.begin());
    return values;
}

inline std::vector<double> exact_factor(Channel channel, int n_bath, double alpha,
                                        const std::vector<double>& times) {
    detail::check_times(times);
    detail::SpectralEvaluator eval(n_bath);
    std::vector<double> out;
    out.reserve(times.size());
    for (const double t : times)
        out.push_back(channel == Channel::V3 ? eval.f3(alpha * t) : eval.f12(alpha * t));
    return out;
}

inline std::vector<double> limit_factor(Channel channel, double alpha,
                                        const std::vector<double>& times) {
    detail::check_times(times);
    std::vector<double> out;
    out.reserve(times.size());
    for (const double t : times) {
        const double g = limit_g(alpha, t);
        out.push_back(channel == Channel::V3 ? 1.0 + 2.0 * g : 1.0 + g);
    }
    return out;
}

inline std::vector<double> solve_factor(const SolverSpec& spec, Channel channel,
                                        const ModelParams& params,
                                        const std::vector<double>& times) {
    spec.validate();
    params.validate();
    const SolverSpec r = spec.resolved();
    switch (r.method) {
        case Method::Exact:
            if (params.infinite()) return limit_factor(channel, params.alpha, times);
            return exact_factor(channel, params.n_bath, params.alpha, times);
        case Method::Limit:
            return limit_factor(channel, params.alpha, times);
        case Method::Tcl:
            detail::require_finite_for_expansion(params, "tcl_solve");
            return tcl_factor(channel, r.order, params.n_bath, params.alpha, times);
        case Method::Nz:
            detail::require_finite_for_expansion(params, "nz_solve");
            return nz_factor(channel, r.order, r.convention, r.tolerance, params.n_bath,
                             params.alpha, times);
        default:
            break;
    }
    throw std::logic_error("solve_factor: unresolved method");
}

namespace detail {

inline Trajectory assemble(const SolverSpec& spec, const ModelParams& params,
                           const std::vector<double>& times) {
    const SolverSpec r = spec.resolved();
    const auto fp = solve_factor(spec, Channel::VPM, params, times);
    const auto fz = solve_factor(spec, Channel::V3, params, times);
    Trajectory traj;
    traj.method = to_string(r.method);
    traj.params = params;
    if (r.method == Method::Tcl || r.method == Method::Nz) {
        traj.order = r.order;
        if (r.method == Method::Nz) traj.convention = to_string(r.convention);
    }
    for (std::size_t i = 0; i < times.size(); ++i)
        traj.push_back(times[i], {fp[i] * params.v0.v1, fp[i] * params.v0.v2,
                                  fz[i] * params.v0.v3});
    return traj;
}

} // namespace detail

inline Trajectory tcl_solve(const SolverSpec& spec, const ModelParams& params,
                            const std::vector<double>& times) {
    const SolverSpec r = spec.resolved();
    if (r.method != Method::Tcl)
        throw std::invalid_argument("tcl_solve: spec method must be TCL or Redfield");
    return detail::assemble(spec, params, times);
}

inline Trajectory nz_solve(const SolverSpec& spec, const ModelParams& params,
                           const std::vector<double>& times) {
    const SolverSpec r = spec.resolved();
    if (r.method != Method::Nz)
        throw std::invalid_argument("nz_solve: spec method must be NZ or Born");
    return detail::assemble(spec, params, times);
}

inline Trajectory solve(const SolverSpec& spec, const ModelParams& params,
                        const std::vector<double>& times) {
    return detail::assemble(spec, params, times);
}

// ----------------------------------------------------------------------------
// Exact-rational Taylor coefficients of the channel factor in powers of (αt).
// ----------------------------------------------------------------------------

constexpr int kMaxTaylorPower = 12;

namespace detail {

inline void check_taylor_power(int max_power) {
    if (max_power < 0 || max_power > kMaxTaylorPower)
        throw std::domain_error("taylor: max_power must lie in [0, 12]");
}

// Series of exp(E) for a series E with zero constant term, truncated at
// max_power.
inline std::vector<Rational> exp_series(const std::vector<Rational>& e, int max_power) {
    std::vector<Rational> acc(max_power + 1, Rational(0)), term(max_power + 1, Rational(0));
    acc[0] = 1;
    term[0] = 1;
    for (int j = 1; j <= max_power; ++j) {
        std::vector<Rational> next(max_power + 1, Rational(0));
        for (int p = 0; p <= max_power; ++p) {
            if (term[p] == 0) continue;
            for (int q = 1; p + q <= max_power; ++q) next[p + q] += term[p] * e[q];
        }
        for (auto& c : next) c /= j;
        term = std::move(next);
        bool empty = true;
        for (int p = 0; p <= max_power; ++p) {
            acc[p] += term[p];
            if (term[p] != 0) empty = false;
        }
        if (empty) break;
    }
    return acc;
}

} // namespace detail

// Moment series of the exact solution: coefficient of (αt)^{2k} is μ_{2k}(N)/(2k)!.
inline std::vector<Rational> exact_taylor(Channel channel, int n_bath, int max_power) {
    detail::check_taylor_power(max_power);
    std::vector<Rational> out(max_power + 1, Rational(0));
    out[0] = 1;
    for (int k = 1; 2 * k <= max_power; ++k)
        out[2 * k] = moment(channel, k)(long(n_bath)) / Rational(factorial(2 * k));
    return out;
}

// N→∞ limit series from g(x) = −2 Σ_n (−4)^n x^{2n+2} / (2n+1)!!.
inline std::vector<Rational> limit_taylor(Channel channel, int max_power) {
    detail::check_taylor_power(max_power);
    std::vector<Rational> out(max_power + 1, Rational(0));
    out[0] = 1;
    const Rational channel_weight = channel == Channel::V3 ? 2 : 1;
    for (int n = 0; 2 * n + 2 <= max_power; ++n) {
        const Rational dfact = Rational(factorial(2 * n + 1), int_pow(BigInt(2), n) * factorial(n));
        out[2 * n + 2] = channel_weight * Rational(-2) * rational_pow(Rational(-4), n) / dfact;
    }
    return out;
}

inline std::vector<Rational> taylor_of_solution(const SolverSpec& spec, Channel channel,
                                                int n_bath, int max_power) {
    spec.validate();
    detail::check_taylor_power(max_power);
    const SolverSpec r = spec.resolved();
    if (r.method == Method::Exact) return exact_taylor(channel, n_bath, max_power);
    if (r.method == Method::Limit) return limit_taylor(channel, max_power);

    if (r.method == Method::Tcl) {
        const auto set = coefficient_set(ExpansionMethod::Tcl, channel, r.order);
        std::vector<Rational> exponent(max_power + 1, Rational(0));
        for (int n = 1; n <= r.order / 2 && 2 * n <= max_power; ++n)
            exponent[2 * n] = set.c[n - 1](long(n_bath)) / Rational(factorial(2 * n));
        return detail::exp_series(exponent, max_power);
    }

    // NZ: substitute the series into the truncated convolution equation; the
    // coefficients obey μ'_p = Σ_{2n <= min(p, order)} c_{2n} μ'_{p−2n}.
    const auto set = coefficient_set(ExpansionMethod::Nz, channel, r.order, r.convention);
    std::vector<Rational> mu(max_power + 1, Rational(0));
    mu[0] = 1;
    for (int p = 2; p <= max_power; p += 2) {
        Rational acc = 0;
        for (int n = 1; n <= r.order / 2 && 2 * n <= p; ++n)
            acc += set.c[n - 1](long(n_bath)) * mu[p - 2 * n];
        mu[p] = acc;
    }
    std::vector<Rational> out(max_power + 1, Rational(0));
    for (int p = 0; p <= max_power; ++p) out[p] = mu[p] / Rational(factorial(p));
    return out;
}

// ----------------------------------------------------------------------------
// Born–Markov diagnostic: the would-be Markov rate 4Nα²t of the Redfield
// generator grows linearly and never saturates.
// ----------------------------------------------------------------------------

struct MarkovRateReport {
    std::vector<double> times;
    std::vector<double> rates; // 4 N α² t
    double slope{0.0};         // 4 N α²
    bool bounded{false};       // never true for this model
};

inline MarkovRateReport born_markov_diagnostic(const ModelParams& params,
                                               const std::vector<double>& t_grid) {
    params.validate();
    detail::require_finite_for_expansion(params, "born_markov_diagnostic");
    const Rational q1 = params.n_bath >= 1 ? q_value(1, params.n_bath) : Rational(0);
    MarkovRateReport report;
    report.slope = 8.0 * params.alpha * params.alpha * to_double(q1);
    report.times = t_grid;
    report.rates.reserve(t_grid.size());
    for (const double t : t_grid) report.rates.push_back(report.slope * t);
    report.bounded = report.slope == 0.0;
    return report;
}

// ----------------------------------------------------------------------------
// Reference backends used to cross-check the companion reduction.
// ----------------------------------------------------------------------------

// Laplace / partial-fraction solution for order <= 4:
//   V(s) = s^{2K−1} / (s^{2K} − Σ c_{2n} α^{2n} s^{2K−2n}),
// with the denominator quadratic in u = s² for K = 2.
inline std::vector<double> nz_factor_laplace(Channel channel, int order, NzConvention convention,
                                             int n_bath, double alpha,
                                             const std::vector<double>& times) {
    detail::check_times(times);
    if (order != 2 && order != 4)
        throw std::invalid_argument("nz_factor_laplace: closed form implemented for order <= 4");
    const auto set = coefficient_set(ExpansionMethod::Nz, channel, order, convention);
    const auto cs = detail::scaled_coefficients(set, n_bath, alpha);

    using C = std::complex<double>;
    std::vector<double> out;
    out.reserve(times.size());
    if (order == 2) {
        const C u = cs[0];
        for (const double t : times) out.push_back(std::real(std::cos(std::sqrt(-u) * t)));
        return out;
    }
    // u² − c2 u − c4 = 0
    const C c2 = cs[0], c4 = cs[1];
    const C disc = std::sqrt(c2 * c2 + 4.0 * c4);
    const C u1 = 0.5 * (c2 + disc);
    const C u2 = 0.5 * (c2 - disc);
    if (std::abs(u1 - u2) < 1e-9 * std::max(std::abs(u1), std::abs(u2)))
        throw SolverError("nz_factor_laplace: degenerate kernel roots");
    const C a1 = u1 / (u1 - u2);
    const C a2 = u2 / (u2 - u1);
    for (const double t : times) {
        const C value = a1 * std::cos(std::sqrt(-u1) * t) + a2 * std::cos(std::sqrt(-u2) * t);
        out.push_back(std::real(value));
    }
    return out;
}

// Direct quadrature of the integrated (second-kind Volterra) form
//   v(t) = 1 + ∫₀ᵗ K₁(t−τ) v(τ) dτ,  K₁(s) = Σ c_{2n} α^{2n} s^{2n−1}/(2n−1)!,
// marched on a uniform grid with Simpson / 3-8 product weights (K₁(0) = 0
// keeps the update explicit). Startup points come from the local Taylor
// series of the truncated equation.
struct VolterraSolution {
    std::vector<double> times;
    std::vector<double> values;
};

inline VolterraSolution nz_factor_volterra(Channel channel, int order, NzConvention convention,
                                           int n_bath, double alpha, double t_max,
                                           std::size_t n_steps) {
    if (n_steps < 8) throw std::invalid_argument("nz_factor_volterra: need at least 8 steps");
    if (!(t_max > 0.0)) throw std::invalid_argument("nz_factor_volterra: t_max must be > 0");
    const auto set = coefficient_set(ExpansionMethod::Nz, channel, order, convention);
    const auto cs = detail::scaled_coefficients(set, n_bath, alpha);

    const std::size_t n = n_steps;
    const double h = t_max / static_cast<double>(n);

    std::vector<double> kernel(n + 1, 0.0);
    for (std::size_t m = 0; m <= n; ++m) {
        const double s = static_cast<double>(m) * h;
        double k1 = 0.0;
        double spow = s; // s^{2n-1}
        for (std::size_t c = 1; c <= cs.size(); ++c) {
            k1 += cs[c - 1] * spow / detail::factorial_double(2 * static_cast<int>(c) - 1);
            spow *= s * s;
        }
        kernel[m] = k1;
    }

    // Taylor startup for v(h), v(2h), v(3h).
    constexpr int taylor_terms = 40;
    std::vector<double> mu(taylor_terms + 1, 0.0);
    mu[0] = 1.0;
    for (int p = 2; p <= taylor_terms; p += 2)
        for (std::size_t c = 1; c <= cs.size(); ++c)
            if (p - 2 * static_cast<int>(c) >= 0) mu[p] += cs[c - 1] * mu[p - 2 * c];
    auto taylor_eval = [&mu](double t) {
        double sum = 0.0, tp = 1.0;
        for (int p = 0; p <= taylor_terms; ++p) {
            sum += mu[p] * tp / detail::factorial_double(p);
            tp *= t;
        }
        return sum;
    };

    std::vector<double> v(n + 1, 0.0);
    v[0] = 1.0;
    for (std::size_t j = 1; j <= 3 && j <= n; ++j) v[j] = taylor_eval(static_cast<double>(j) * h);

    for (std::size_t i = 4; i <= n; ++i) {
        double acc = 0.0;
        if (i % 2 == 0) {
            double s = kernel[i] * v[0];
            for (std::size_t j = 1; j < i; ++j)
                s += ((j & 1) ? 4.0 : 2.0) * kernel[i - j] * v[j];
            acc = s * h / 3.0;
        } else {
            const std::size_t m = i - 3;
            double s = kernel[i] * v[0] + kernel[3] * v[m];
            for (std::size_t j = 1; j < m; ++j)
                s += ((j & 1) ? 4.0 : 2.0) * kernel[i - j] * v[j];
            acc = s * h / 3.0;
            acc += 3.0 * h / 8.0 *
                   (kernel[3] * v[m] + 3.0 * kernel[2] * v[m + 1] + 3.0 * kernel[1] * v[m + 2]);
        }
        v[i] = 1.0 + acc;
    }

    VolterraSolution sol;
    sol.times.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) sol.times[i] = static_cast<double>(i) * h;
    sol.values = std::move(v);
    return sol;
}

} // namespace spinstar
