// verify.hpp — cross-module oracle suite behind the `verify` CLI command

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spinstar/correlations.hpp"
#include "spinstar/cumulants.hpp"
#include "spinstar/dense.hpp"
#include "spinstar/exact.hpp"
#include "spinstar/solvers.hpp"

namespace spinstar {

struct VerifyCheck {
    std::string name;
    bool ok{false};
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool ok{true};

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
        ok = ok && pass;
    }
};

namespace verify_detail {

inline std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

inline void check_spectrum(VerifyReport& report) {
    bool pass = true;
    for (int n = 0; n <= 20 && pass; ++n)
        pass = BathSpectrum::build(n).dimension() == int_pow(BigInt(2), n);
    report.add("spectrum dimension sum rule (N <= 20)", pass);
}

inline void check_dense_vs_spectral(VerifyReport& report) {
    std::mt19937 rng(20240901);
    std::uniform_real_distribution<double> comp(-0.6, 0.6), time(0.0, 3.0);
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
        const dense::DenseModel model(n);
        const detail::SpectralEvaluator eval(n);
        for (int trial = 0; trial < 8; ++trial) {
            const BlochVector v0{comp(rng), comp(rng), comp(rng)};
            const double x = time(rng);
            const BlochVector got = model.propagate(v0, x);
            const double a = eval.f12(x), b = eval.f3(x);
            worst = std::max({worst, std::abs(got.v1 - a * v0.v1),
                              std::abs(got.v2 - a * v0.v2), std::abs(got.v3 - b * v0.v3)});
        }
    }
    report.add("dense propagation vs spectral sums (N <= 6)", worst <= 1e-10,
               "max deviation " + fmt(worst));
}

inline void check_trace_words(VerifyReport& report) {
    using dense::WordOp;
    bool pass = true;
    for (int n = 1; n <= 5 && pass; ++n)
        for (int len = 1; len <= 4 && pass; ++len)
            for (int mask = 0; mask < (1 << len) && pass; ++mask) {
                std::vector<WordOp> word;
                int a = 0, b = 0;
                for (int i = 0; i < len; ++i) {
                    const bool plus_minus = mask & (1 << i);
                    word.push_back(plus_minus ? WordOp::JpJm : WordOp::JmJp);
                    (plus_minus ? a : b) += 1;
                }
                // sorting the word inside the trace is allowed: the two
                // factors commute on every |j, m, ν⟩
                pass = dense::trace_word(word, n) == r_value(a, b, n);
            }
    report.add("computational-basis word traces vs spectral rationals", pass);
}

inline void check_liouvillian_moments(VerifyReport& report) {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n)
        worst = std::max(worst, dense::verify_liouvillian_moments(n, 3).max_error);
    report.add("projected Liouvillian moments (dense, N <= 4, k <= 3)", worst <= 1e-9,
               "max deviation " + fmt(worst));
}

inline void check_invariant_subspaces(VerifyReport& report) {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
        const auto basis = dense::angular_basis(n);
        const long dim_b = 1L << n;
        const auto h = dense::build_hamiltonian(n, 1.0);
        // rotate: full basis is |±⟩ ⊗ |j,m,ν⟩
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(2 * dim_b, 2 * dim_b);
        u.topLeftCorner(dim_b, dim_b) = basis.columns;
        u.bottomRightCorner(dim_b, dim_b) = basis.columns;
        const Eigen::MatrixXcd hr = u.adjoint() * h * u;
        // allowed couplings: (+, j, m, ν) <-> (−, j, m+1, ν) and diagonals
        for (long r = 0; r < 2 * dim_b; ++r)
            for (long c = 0; c < 2 * dim_b; ++c) {
                const bool r_up = r < dim_b;
                const bool c_up = c < dim_b;
                const long rb = r_up ? r : r - dim_b;
                const long cb = c_up ? c : c - dim_b;
                bool allowed = false;
                if (r == c) allowed = true;
                else if (r_up != c_up && basis.labels[rb][0] == basis.labels[cb][0] &&
                         basis.nu[rb] == basis.nu[cb]) {
                    const int two_m_up = r_up ? basis.labels[rb][1] : basis.labels[cb][1];
                    const int two_m_dn = r_up ? basis.labels[cb][1] : basis.labels[rb][1];
                    allowed = two_m_dn == two_m_up + 2;
                }
                if (!allowed) worst = std::max(worst, std::abs(hr(r, c)));
            }
    }
    report.add("invariant two-dimensional subspaces (N <= 4)", worst <= 1e-12,
               "max forbidden element " + fmt(worst));
}

inline void check_appendix_polynomials(VerifyReport& report) {
    bool pass = q_polynomial(1) == PolynomialInN({0, Rational(1, 2)}) &&
                q_polynomial(2) == PolynomialInN({0, 0, Rational(1, 2)}) &&
                q_polynomial(3) ==
                    PolynomialInN({0, Rational(1, 2), Rational(-3, 4), Rational(3, 4)}) &&
                q_polynomial(4) ==
                    PolynomialInN({0, -2, 5, -4, Rational(3, 2)}) &&
                r_polynomial(1, 1) == PolynomialInN({0, Rational(-1, 2), Rational(1, 2)}) &&
                r_polynomial(1, 2) ==
                    PolynomialInN({0, Rational(1, 2), Rational(-5, 4), Rational(3, 4)}) &&
                r_polynomial(1, 3) == PolynomialInN({0, Rational(-5, 2), Rational(23, 4),
                                                     Rational(-19, 4), Rational(3, 2)});
    for (int k = 1; k <= 8 && pass; ++k)
        pass = q_polynomial(k).leading() == Rational(factorial(k), int_pow(BigInt(2), k));
    report.add("appendix correlation polynomials + leading-order law", pass);
}

inline void check_coefficient_tables(VerifyReport& report) {
    const auto tclv3 = coefficient_set(ExpansionMethod::Tcl, Channel::V3, 6);
    const auto tclpm = coefficient_set(ExpansionMethod::Tcl, Channel::VPM, 6);
    const auto nzv3 = coefficient_set(ExpansionMethod::Nz, Channel::V3, 6, NzConvention::Tabulated);
    const auto nzpm = coefficient_set(ExpansionMethod::Nz, Channel::VPM, 6, NzConvention::Tabulated);
    const bool pass =
        tclv3.tabulated_entry(2) == PolynomialInN({0, -4}) &&
        tclv3.tabulated_entry(4) == PolynomialInN({0, 0, -32}) &&
        tclv3.tabulated_entry(6) == PolynomialInN({0, -1024, 1536, -1536}) &&
        nzv3.tabulated_entry(2) == PolynomialInN({0, -4}) &&
        nzv3.tabulated_entry(4) == PolynomialInN({0, 0, 32}) &&
        nzv3.tabulated_entry(6) == PolynomialInN({0, -1024, 1536, -1280}) &&
        tclpm.tabulated_entry(2) == PolynomialInN({0, -4}) &&
        tclpm.tabulated_entry(4) == PolynomialInN({0, -48, 16}) &&
        tclpm.tabulated_entry(6) == PolynomialInN({0, -1024, -384, 384}) &&
        nzpm.tabulated_entry(2) == PolynomialInN({0, -4}) &&
        nzpm.tabulated_entry(4) == PolynomialInN({0, -48, 48}) &&
        nzpm.tabulated_entry(6) == PolynomialInN({0, -1024, 2112, -1216});
    report.add("TCL/NZ coefficient tables through order 6", pass);
}

inline void check_second_order_forms(VerifyReport& report) {
    const int n = 25;
    const double alpha = 0.7;
    const auto ts = time_grid(1.5, 40);
    const auto tclpm = tcl_factor(Channel::VPM, 2, n, alpha, ts);
    const auto tclv3 = tcl_factor(Channel::V3, 2, n, alpha, ts);
    const auto nzpm = nz_factor(Channel::VPM, 2, NzConvention::Tabulated, 1e-12, n, alpha, ts);
    const auto nzv3 = nz_factor(Channel::V3, 2, NzConvention::Tabulated, 1e-12, n, alpha, ts);
    double worst = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double x = alpha * ts[i];
        worst = std::max(worst, std::abs(tclpm[i] - std::exp(-2.0 * n * x * x)));
        worst = std::max(worst, std::abs(tclv3[i] - std::exp(-4.0 * n * x * x)));
        worst = std::max(worst, std::abs(nzpm[i] - std::cos(2.0 * std::sqrt(1.0 * n) * x)));
        worst = std::max(worst,
                         std::abs(nzv3[i] - std::cos(2.0 * std::sqrt(2.0 * n) * x)));
    }
    report.add("second-order closed forms (Redfield / Born)", worst <= 1e-12,
               "max deviation " + fmt(worst));
}

inline void check_nz_backends(VerifyReport& report) {
    double worst = 0.0;
    for (const Channel ch : {Channel::V3, Channel::VPM}) {
        for (const int order : {2, 4, 6}) {
            const auto vol = nz_factor_volterra(ch, order, NzConvention::MomentMatched, 100,
                                                1.0, 1.0, 8000);
            std::vector<double> probe_times, probe_vals;
            for (std::size_t i = 400; i <= 8000; i += 400) {
                probe_times.push_back(vol.times[i]);
                probe_vals.push_back(vol.values[i]);
            }
            const auto comp = nz_factor(ch, order, NzConvention::MomentMatched, 1e-12, 100,
                                        1.0, probe_times);
            for (std::size_t i = 0; i < comp.size(); ++i)
                worst = std::max(worst, std::abs(comp[i] - probe_vals[i]) /
                                            std::max(1.0, std::abs(comp[i])));
        }
        const auto ts = time_grid(1.0, 21);
        const auto lap = nz_factor_laplace(ch, 4, NzConvention::MomentMatched, 100, 1.0, ts);
        const auto comp = nz_factor(ch, 4, NzConvention::MomentMatched, 1e-12, 100, 1.0, ts);
        for (std::size_t i = 0; i < ts.size(); ++i)
            worst = std::max(worst,
                             std::abs(comp[i] - lap[i]) / std::max(1.0, std::abs(comp[i])));
    }
    report.add("NZ companion vs Volterra quadrature and Laplace backends", worst <= 1e-8,
               "max scaled deviation " + fmt(worst));
}

inline void check_taylor_consistency(VerifyReport& report) {
    bool pass = true;
    for (const Channel ch : {Channel::V3, Channel::VPM})
        for (const int n : {1, 5, 100})
            for (int half = 1; half <= 5 && pass; ++half) {
                const int order = 2 * half;
                const auto exact = exact_taylor(ch, n, order);
                SolverSpec tcl{Method::Tcl, order};
                SolverSpec nz{Method::Nz, order, NzConvention::MomentMatched};
                const auto ts = taylor_of_solution(tcl, ch, n, order);
                const auto ns = taylor_of_solution(nz, ch, n, order);
                for (int p = 0; p <= order && pass; ++p)
                    pass = ts[p] == exact[p] && ns[p] == exact[p];
            }
    report.add("TCL/NZ solution series match the exact series through the truncation order",
               pass);
}

} // namespace verify_detail

inline VerifyReport run_verification() {
    VerifyReport report;
    verify_detail::check_spectrum(report);
    verify_detail::check_appendix_polynomials(report);
    verify_detail::check_coefficient_tables(report);
    verify_detail::check_trace_words(report);
    verify_detail::check_dense_vs_spectral(report);
    verify_detail::check_liouvillian_moments(report);
    verify_detail::check_invariant_subspaces(report);
    verify_detail::check_second_order_forms(report);
    verify_detail::check_nz_backends(report);
    verify_detail::check_taylor_consistency(report);
    return report;
}

} // namespace spinstar
