#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "spinstar/solvers.hpp"

using namespace spinstar;

TEST_CASE("TCL2 closed forms") {
    const auto ts = time_grid(1.0, 21);
    for (const int n : {1, 10, 100}) {
        const auto v3 = tcl_factor(Channel::V3, 2, n, 1.0, ts);
        const auto pm = tcl_factor(Channel::VPM, 2, n, 1.0, ts);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            REQUIRE(v3[i] == Catch::Approx(std::exp(-4.0 * n * ts[i] * ts[i])).margin(1e-13));
            REQUIRE(pm[i] == Catch::Approx(std::exp(-2.0 * n * ts[i] * ts[i])).margin(1e-13));
        }
    }
}

TEST_CASE("NZ2 closed forms") {
    const auto ts = time_grid(2.0, 41);
    for (const int n : {1, 10, 100}) {
        const auto v3 = nz_factor(Channel::V3, 2, NzConvention::MomentMatched, 1e-12, n, 1.0, ts);
        const auto pm = nz_factor(Channel::VPM, 2, NzConvention::MomentMatched, 1e-12, n, 1.0, ts);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            REQUIRE(v3[i] ==
                    Catch::Approx(std::cos(2.0 * std::sqrt(2.0 * n) * ts[i])).margin(1e-12));
            REQUIRE(pm[i] ==
                    Catch::Approx(std::cos(2.0 * std::sqrt(1.0 * n) * ts[i])).margin(1e-12));
        }
    }
}

TEST_CASE("born and redfield resolve to the second-order methods") {
    ModelParams params{25, 0.9, {1, 0, 1}};
    const auto ts = time_grid(1.0, 11);
    const Trajectory born = solve({Method::Born, 8}, params, ts); // order is overridden
    const Trajectory nz2 = solve({Method::Nz, 2}, params, ts);
    const Trajectory redfield = solve({Method::Redfield, 8}, params, ts);
    const Trajectory tcl2 = solve({Method::Tcl, 2}, params, ts);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        REQUIRE(born.v3[i] == nz2.v3[i]);
        REQUIRE(born.v1[i] == nz2.v1[i]);
        REQUIRE(redfield.v3[i] == tcl2.v3[i]);
        REQUIRE(redfield.v1[i] == tcl2.v1[i]);
    }
    CHECK(born.method == "nz");
    CHECK(redfield.method == "tcl");
    CHECK(born.order == 2);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(SolverSpec({Method::Tcl, 3}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SolverSpec({Method::Nz, 0}).validate(), std::invalid_argument);
    CHECK_NOTHROW(SolverSpec({Method::Born, 7}).validate()); // alias pins order to 2
    SolverSpec bad;
    bad.tolerance = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    ModelParams inf{ModelParams::kInfinite, 1.0, {0, 0, 1}};
    CHECK_THROWS_AS(solve({Method::Tcl, 2}, inf, time_grid(1.0, 5)), std::invalid_argument);
}

TEST_CASE("solver trajectories scale the initial components") {
    ModelParams params{50, 1.0, {0.6, -0.4, 0.8}};
    const auto ts = time_grid(0.2, 41);
    const Trajectory traj = solve({Method::Tcl, 4}, params, ts);
    const auto pm = tcl_factor(Channel::VPM, 4, 50, 1.0, ts);
    const auto v3 = tcl_factor(Channel::V3, 4, 50, 1.0, ts);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        REQUIRE(traj.v1[i] == Catch::Approx(0.6 * pm[i]).margin(1e-14));
        REQUIRE(traj.v2[i] == Catch::Approx(-0.4 * pm[i]).margin(1e-14));
        REQUIRE(traj.v3[i] == Catch::Approx(0.8 * v3[i]).margin(1e-14));
    }
}

TEST_CASE("taylor coefficients of the second-order solutions") {
    for (const long n : {1L, 2L, 7L, 100L}) {
        const auto tcl = taylor_of_solution({Method::Tcl, 2}, Channel::V3, int(n), 4);
        const auto nz = taylor_of_solution({Method::Nz, 2}, Channel::V3, int(n), 4);
        const auto exact = exact_taylor(Channel::V3, int(n), 4);
        CHECK(tcl[2] == Rational(-4 * n));
        CHECK(nz[2] == Rational(-4 * n));
        CHECK(exact[2] == Rational(-4 * n));
        CHECK(tcl[4] == Rational(8 * n * n));               // a2²/(2a0)
        CHECK(nz[4] == Rational(8 * n * n, 3));             // a2²/(6a0)
        CHECK(exact[4] == Rational(16 * n * n, 3));
        CHECK(tcl[1] == 0);
        CHECK(tcl[3] == 0);
    }
}

TEST_CASE("NZ moment-matched series agrees with the exact series through the order") {
    for (const Channel ch : {Channel::V3, Channel::VPM})
        for (const int n : {1, 2, 5, 100})
            for (int half = 1; half <= 5; ++half) {
                const int order = 2 * half;
                const auto nz = taylor_of_solution({Method::Nz, order}, ch, n, order);
                const auto exact = exact_taylor(ch, n, order);
                for (int p = 0; p <= order; ++p) REQUIRE(nz[p] == exact[p]);
            }
}

TEST_CASE("NZ paper convention misses the exact series at its truncation order 6") {
    SolverSpec spec{Method::Nz, 6, NzConvention::Tabulated};
    for (const int n : {2, 100}) {
        const auto nz = taylor_of_solution(spec, Channel::V3, n, 6);
        const auto exact = exact_taylor(Channel::V3, n, 6);
        CHECK(nz[2] == exact[2]);
        CHECK(nz[4] == exact[4]);
        const Rational mu2 = moment(Channel::V3, 1)(long(n));
        // residual at order 6 is exactly the convention gap 2 mu2³ / 6!
        CHECK(nz[6] - exact[6] == Rational(2) * mu2 * mu2 * mu2 / Rational(factorial(6)));
    }
}

TEST_CASE("limit taylor starts like the rescaled finite-N series") {
    const auto v3 = limit_taylor(Channel::V3, 8);
    CHECK(v3[0] == 1);
    CHECK(v3[2] == -4);
    const auto vpm = limit_taylor(Channel::VPM, 4);
    CHECK(vpm[2] == -2);
    // against the exact N-series with rescaling: coefficient of x^{2k} is
    // mu_{2k}(N)/N^k/(2k)! in the N->infinity limit; spot-check k = 2 for v3:
    // mu4 = 256 Q2 = 128 N² -> 128/24 = 16/3
    CHECK(v3[4] == Rational(16, 3));
}

TEST_CASE("deviation from the exact solution scales like (alpha t)^4") {
    const int n = 100;
    std::vector<double> ts;
    for (int i = 0; i <= 40; ++i) ts.push_back(1e-3 * std::pow(10.0, i / 40.0));
    const auto exact = exact_factor(Channel::VPM, n, 1.0, ts);
    const auto tcl2 = tcl_factor(Channel::VPM, 2, n, 1.0, ts);
    const auto nz2 = nz_factor(Channel::VPM, 2, NzConvention::MomentMatched, 1e-12, n, 1.0, ts);

    auto slope = [&ts](const std::vector<double>& err) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const auto count = static_cast<double>(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const double lx = std::log(ts[i]), ly = std::log(err[i]);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        return (count * sxy - sx * sy) / (count * sxx - sx * sx);
    };

    std::vector<double> err_tcl(ts.size()), err_nz(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        err_tcl[i] = std::abs(exact[i] - tcl2[i]);
        err_nz[i] = std::abs(exact[i] - nz2[i]);
        REQUIRE(err_tcl[i] < err_nz[i]); // TCL2 beats NZ2 for the v± channel
    }
    CHECK(slope(err_tcl) == Catch::Approx(4.0).margin(0.1));
    CHECK(slope(err_nz) == Catch::Approx(4.0).margin(0.1));
}

TEST_CASE("fourth-order truncations leave the Bloch sphere") {
    const int n = 100;
    const auto ts = time_grid(0.4, 400);
    // |v±(0)| = 1/2 means r(0) = 1; the factor itself is then the radius
    const auto tcl4 = tcl_factor(Channel::VPM, 4, n, 1.0, ts);
    const auto nz4 = nz_factor(Channel::VPM, 4, NzConvention::MomentMatched, 1e-12, n, 1.0, ts);
    bool tcl_exceeds = false, nz_exceeds = false;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        tcl_exceeds = tcl_exceeds || std::abs(tcl4[i]) > 1.0;
        nz_exceeds = nz_exceeds || std::abs(nz4[i]) > 1.0;
    }
    CHECK(tcl_exceeds);
    CHECK(nz_exceeds);
}

TEST_CASE("TCL10 v3 stays positive while the exact solution crosses zero") {
    // window chosen past the exact zero crossing (alpha t ~ 0.066) but before
    // the order-10 exponent underflows exp() to zero
    const int n = 100;
    const auto ts = time_grid(0.1, 1500);
    const auto tcl10 = tcl_factor(Channel::V3, 10, n, 1.0, ts);
    const auto exact = exact_factor(Channel::V3, n, 1.0, ts);
    bool crosses = false;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        REQUIRE(tcl10[i] > 0.0);
        crosses = crosses || exact[i] < 0.0;
    }
    CHECK(crosses);
}

TEST_CASE("born-markov rate grows without bound") {
    ModelParams params{12, 0.5, {0, 0, 1}};
    const auto report = born_markov_diagnostic(params, time_grid(8.0, 33));
    CHECK(report.slope == Catch::Approx(4.0 * 12 * 0.25)); // 4 N α²
    CHECK(report.rates.front() == 0.0);
    CHECK_FALSE(report.bounded);
    for (std::size_t i = 1; i < report.times.size(); ++i) {
        REQUIRE(report.rates[i] / report.times[i] == Catch::Approx(report.slope));
        if (2 * i < report.times.size())
            REQUIRE(report.rates[2 * i] == Catch::Approx(2.0 * report.rates[i]));
    }
    REQUIRE(report.rates.back() > 10.0 * report.rates[1]);
}

TEST_CASE("companion reduction agrees with the Laplace backend at order 4") {
    const auto ts = time_grid(1.5, 31);
    for (const Channel ch : {Channel::V3, Channel::VPM}) {
        const auto companion =
            nz_factor(ch, 4, NzConvention::MomentMatched, 1e-12, 100, 1.0, ts);
        const auto laplace = nz_factor_laplace(ch, 4, NzConvention::MomentMatched, 100, 1.0, ts);
        for (std::size_t i = 0; i < ts.size(); ++i)
            REQUIRE(std::abs(companion[i] - laplace[i]) /
                        std::max(1.0, std::abs(companion[i])) <
                    1e-9);
    }
}

TEST_CASE("companion reduction agrees with direct Volterra quadrature") {
    for (const Channel ch : {Channel::V3, Channel::VPM})
        for (const int order : {4, 6}) {
            const auto vol =
                nz_factor_volterra(ch, order, NzConvention::MomentMatched, 100, 1.0, 1.0, 6000);
            std::vector<double> probe_t, probe_v;
            for (std::size_t i = 500; i <= 6000; i += 500) {
                probe_t.push_back(vol.times[i]);
                probe_v.push_back(vol.values[i]);
            }
            const auto companion =
                nz_factor(ch, order, NzConvention::MomentMatched, 1e-12, 100, 1.0, probe_t);
            for (std::size_t i = 0; i < probe_t.size(); ++i)
                REQUIRE(std::abs(companion[i] - probe_v[i]) /
                            std::max(1.0, std::abs(companion[i])) <
                        1e-8);
        }
}

TEST_CASE("integrator reports tolerance failure") {
    const auto ts = time_grid(1.0, 5);
    CHECK_THROWS_AS(nz_factor(Channel::V3, 4, NzConvention::MomentMatched, 1e-300, 100, 1.0, ts),
                    SolverError);
}

TEST_CASE("times grid validation") {
    CHECK_THROWS_AS(exact_factor(Channel::V3, 2, 1.0, {}), std::invalid_argument);
    CHECK_THROWS_AS(exact_factor(Channel::V3, 2, 1.0, {0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(exact_factor(Channel::V3, 2, 1.0, {-1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(time_grid(1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(time_grid(-1.0, 10), std::invalid_argument);
}
