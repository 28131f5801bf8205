#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "spinstar/cumulants.hpp"
#include "spinstar/exact.hpp"
#include "spinstar/limit.hpp"

using namespace spinstar;

TEST_CASE("f functions at t = 0") {
    for (const int n : {0, 1, 2, 7, 40, 64}) {
        CHECK(f12(n, 1.3, 0.0) == Catch::Approx(1.0).epsilon(1e-14));
        CHECK(f3(n, 1.3, 0.0) == Catch::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("single bath spin has closed forms") {
    // j = 1/2 spectrum: f3 = (1 + cos 4αt)/2, f12 = cos 2αt
    for (const double alpha : {0.5, 1.0}) {
        for (int i = 0; i <= 20; ++i) {
            const double t = 0.15 * i;
            REQUIRE(f3(1, alpha, t) ==
                    Catch::Approx(0.5 * (1.0 + std::cos(4.0 * alpha * t))).margin(1e-14));
            REQUIRE(f12(1, alpha, t) == Catch::Approx(std::cos(2.0 * alpha * t)).margin(1e-14));
        }
    }
}

TEST_CASE("empty bath is frozen") {
    const auto ts = time_grid(5.0, 11);
    ModelParams params{0, 1.0, {0.3, -0.2, 0.5}};
    const Trajectory traj = propagate_exact(params, ts);
    for (std::size_t i = 0; i < traj.size(); ++i) {
        REQUIRE(traj.v1[i] == Catch::Approx(0.3).margin(1e-15));
        REQUIRE(traj.v3[i] == Catch::Approx(0.5).margin(1e-15));
    }
}

TEST_CASE("f functions are bounded by one") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> time(0.0, 20.0);
    for (const int n : {1, 2, 3, 10, 33, 64, 100, 200}) {
        for (int trial = 0; trial < 40; ++trial) {
            const double t = time(rng);
            REQUIRE(std::abs(f12(n, 1.0, t)) <= 1.0 + 1e-12);
            REQUIRE(std::abs(f3(n, 1.0, t)) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("infinite bath size is rejected by the finite-N sums") {
    CHECK_THROWS_AS(f3(ModelParams::kInfinite, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(f12(ModelParams::kInfinite, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("propagate_exact basics") {
    const auto ts = time_grid(2.0, 21);

    ModelParams fixed{5, 1.0, {0, 0, 0}};
    for (const double v : propagate_exact(fixed, ts).v3) REQUIRE(v == 0.0);

    ModelParams up{1, 0.8, {0, 0, 1}};
    const Trajectory traj = propagate_exact(up, ts);
    for (std::size_t i = 0; i < traj.size(); ++i)
        REQUIRE(traj.v3[i] ==
                Catch::Approx(0.5 * (1.0 + std::cos(4.0 * 0.8 * ts[i]))).margin(1e-14));

    ModelParams plus{7, 1.0, {1, 0, 0}};
    const Trajectory start = propagate_exact(plus, {0.0, 0.5});
    CHECK(start.v1.front() == 1.0);
    CHECK(start.v2.front() == 0.0);
}

TEST_CASE("physical states stay physical under the exact map") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const auto ts = time_grid(3.0, 31);
    for (const int n : {1, 4, 9}) {
        BlochVector v{uni(rng), uni(rng), uni(rng)};
        const double r = v.r();
        if (r > 1.0) {
            v.v1 /= r;
            v.v2 /= r;
            v.v3 /= r;
        }
        const Trajectory traj = propagate_exact({n, 1.0, v}, ts);
        for (const double rr : traj.radius) REQUIRE(rr <= v.r() + 1e-10);
    }
}

TEST_CASE("spectral sums match the moment series at small times") {
    // residual after the (αt)^8 term is governed by the 10th moment; the probe
    // points are chosen so it stays well under the comparison tolerance
    for (const int n : {1, 2, 5, 50}) {
        std::vector<Rational> series(5, Rational(0));
        series[0] = 1;
        for (int k = 1; k <= 4; ++k)
            series[k] = moment(Channel::V3, k)(long(n)) / Rational(factorial(2 * k));
        const double x = 0.02 / std::sqrt(static_cast<double>(n));
        double approx = 0.0, x2k = 1.0;
        for (int k = 0; k <= 4; ++k) {
            approx += to_double(series[k]) * x2k;
            x2k *= x * x;
        }
        REQUIRE(f3(n, 1.0, x) == Catch::Approx(approx).epsilon(1e-9));
    }
}

TEST_CASE("rescaled finite-N dynamics approach the limit curves") {
    const auto ts = time_grid(3.0, 121);
    double d20 = 0.0, d100 = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double lim = 1.0 + 2.0 * limit_g(1.0, ts[i]);
        d20 = std::max(d20, std::abs(f3(20, 1.0 / std::sqrt(20.0), ts[i]) - lim));
        d100 = std::max(d100, std::abs(f3(100, 1.0 / std::sqrt(100.0), ts[i]) - lim));
    }
    CHECK(d100 < d20);
    CHECK(d100 < 0.15);
}

TEST_CASE("trajectory stores consistent radius and entropy series") {
    ModelParams params{3, 1.0, {0.4, 0.1, 0.6}};
    const Trajectory traj = propagate_exact(params, time_grid(4.0, 41));
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double r = traj.at(i).r();
        REQUIRE(traj.radius[i] == Catch::Approx(r).margin(1e-12));
        REQUIRE(traj.entropy[i] == Catch::Approx(entropy(std::min(r, 1.0))).margin(1e-12));
    }
}
