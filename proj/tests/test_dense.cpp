#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "spinstar/dense.hpp"
#include "spinstar/exact.hpp"

using namespace spinstar;
using dense::WordOp;

TEST_CASE("hamiltonian structure for a single bath spin") {
    const auto h = dense::build_hamiltonian(1, 0.7);
    REQUIRE(h.rows() == 4);
    // basis: |+0⟩, |+1⟩, |−0⟩, |−1⟩ (bath bit set = spin down);
    // only |+,down⟩ <-> |−,up⟩ couple, with matrix element 2α
    for (long r = 0; r < 4; ++r)
        for (long c = 0; c < 4; ++c) {
            const bool coupled = (r == 1 && c == 2) || (r == 2 && c == 1);
            REQUIRE(std::abs(h(r, c) - (coupled ? 1.4 : 0.0)) < 1e-15);
        }
}

TEST_CASE("hamiltonian is Hermitian and traceless") {
    for (const int n : {1, 2, 3, 4}) {
        const auto h = dense::build_hamiltonian(n, 1.3);
        CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(std::abs(h.trace()) < 1e-13);
    }
}

TEST_CASE("hamiltonian commutes with the total z rotation generator") {
    for (const int n : {1, 2, 3}) {
        const long dim_b = 1L << n;
        const auto h = dense::build_hamiltonian(n, 1.0);
        Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(2 * dim_b, 2 * dim_b);
        for (int s = 0; s < 2; ++s)
            for (long b = 0; b < dim_b; ++b)
                jz(s * dim_b + b, s * dim_b + b) =
                    (s == 0 ? 0.5 : -0.5) + dense::two_m_of(b, n) / 2.0;
        CHECK((h * jz - jz * h).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("H^2 block identity") {
    for (const int n : {1, 2, 3}) {
        const long dim_b = 1L << n;
        const auto h = dense::build_hamiltonian(n, 1.0);
        const Eigen::MatrixXcd h2 = h * h;
        const auto jp = dense::bath_jplus(n);
        const Eigen::MatrixXcd pm = (jp * jp.transpose()).cast<double>().cast<std::complex<double>>();
        const Eigen::MatrixXcd mp = (jp.transpose() * jp).cast<double>().cast<std::complex<double>>();
        Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(2 * dim_b, 2 * dim_b);
        // 4[σ₊σ₋ ⊗ (J₋J₊) + σ₋σ₊ ⊗ (J₊J₋)] ; σ₊σ₋ = |+⟩⟨+|
        expected.topLeftCorner(dim_b, dim_b) = 4.0 * mp;
        expected.bottomRightCorner(dim_b, dim_b) = 4.0 * pm;
        CHECK((h2 - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("dense propagation fixed points and closed form") {
    const dense::DenseModel model(1);
    const BlochVector v0{0.3, -0.2, 0.9};
    const BlochVector at0 = model.propagate(v0, 0.0);
    CHECK(at0.v1 == Catch::Approx(v0.v1).margin(1e-13));
    CHECK(at0.v2 == Catch::Approx(v0.v2).margin(1e-13));
    CHECK(at0.v3 == Catch::Approx(v0.v3).margin(1e-13));

    for (int i = 1; i <= 10; ++i) {
        const double x = 0.21 * i;
        const BlochVector v = model.propagate({0, 0, 1}, x);
        REQUIRE(v.v3 == Catch::Approx(0.5 * (1.0 + std::cos(4.0 * x))).margin(1e-12));
    }
}

TEST_CASE("purity never increases under dense propagation") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> uni(-1.0, 1.0), time(0.0, 4.0);
    for (const int n : {1, 2, 4}) {
        const dense::DenseModel model(n);
        for (int trial = 0; trial < 20; ++trial) {
            BlochVector v{uni(rng), uni(rng), uni(rng)};
            const double r = v.r();
            if (r > 1.0) {
                v.v1 /= r;
                v.v2 /= r;
                v.v3 /= r;
            }
            const BlochVector out = model.propagate(v, time(rng));
            REQUIRE(out.r() <= v.r() + 1e-10);
        }
    }
}

TEST_CASE("dense and spectral dynamics agree") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> uni(-0.57, 0.57), time(0.0, 3.0);
    for (int n = 1; n <= 6; ++n) {
        const dense::DenseModel model(n);
        const detail::SpectralEvaluator eval(n);
        for (int trial = 0; trial < 10; ++trial) {
            const BlochVector v0{uni(rng), uni(rng), uni(rng)};
            const double x = time(rng);
            const BlochVector got = model.propagate(v0, x);
            REQUIRE(got.v1 == Catch::Approx(eval.f12(x) * v0.v1).margin(1e-10));
            REQUIRE(got.v2 == Catch::Approx(eval.f12(x) * v0.v2).margin(1e-10));
            REQUIRE(got.v3 == Catch::Approx(eval.f3(x) * v0.v3).margin(1e-10));
        }
    }
}

TEST_CASE("trace_word examples") {
    CHECK(dense::trace_word({WordOp::JpJm}, 4) == Rational(2));                 // Q1(4)
    CHECK(dense::trace_word({WordOp::JpJm, WordOp::JpJm}, 2) == Rational(2));   // Q2(2)
    CHECK(dense::trace_word({WordOp::JpJm, WordOp::JmJp}, 2) == Rational(1));   // R11(2)
}

TEST_CASE("trace_word equals the spectral rationals for short words") {
    for (int n = 1; n <= 6; ++n)
        for (int len = 1; len <= 4; ++len)
            for (int mask = 0; mask < (1 << len); ++mask) {
                std::vector<WordOp> word;
                int a = 0, b = 0;
                for (int i = 0; i < len; ++i) {
                    const bool pm = mask & (1 << i);
                    word.push_back(pm ? WordOp::JpJm : WordOp::JmJp);
                    (pm ? a : b) += 1;
                }
                REQUIRE(dense::trace_word(word, n) == r_value(a, b, n));
            }
}

TEST_CASE("trace_word bounds") {
    CHECK_THROWS_AS(dense::trace_word({WordOp::JpJm}, 9), std::domain_error);
    CHECK_THROWS_AS(
        dense::trace_word(std::vector<WordOp>(7, WordOp::JpJm), 2), std::domain_error);
}

TEST_CASE("liouvillian moment verification") {
    const auto report = dense::verify_liouvillian_moments(2, 3);
    REQUIRE(report.ok);
    CHECK(report.entries[0].v3_scalar == Catch::Approx(-16.0).margin(1e-10)); // (−16) Q1(2)
    CHECK(report.entries[0].odd_residual < 1e-12);

    const auto report3 = dense::verify_liouvillian_moments(3, 2);
    REQUIRE(report3.ok);
    CHECK(report3.entries[1].vpm_scalar == Catch::Approx(432.0).margin(1e-9));

    for (int n = 1; n <= 4; ++n) REQUIRE(dense::verify_liouvillian_moments(n, 3).ok);
}

TEST_CASE("angular momentum basis and invariant subspaces") {
    for (int n = 1; n <= 4; ++n) {
        const auto basis = dense::angular_basis(n);
        const long dim_b = 1L << n;
        // orthonormality
        const Eigen::MatrixXcd gram = basis.columns.adjoint() * basis.columns;
        REQUIRE((gram - Eigen::MatrixXcd::Identity(dim_b, dim_b)).cwiseAbs().maxCoeff() < 1e-10);

        // J₊J₋ diagonal with the advertised eigenvalues
        const auto jp = dense::bath_jplus(n);
        const Eigen::MatrixXcd pm =
            (jp * jp.transpose()).cast<double>().cast<std::complex<double>>();
        const Eigen::MatrixXcd rotated = basis.columns.adjoint() * pm * basis.columns;
        for (long c = 0; c < dim_b; ++c) {
            const auto [two_j, two_m] = basis.labels[c];
            REQUIRE(std::abs(rotated(c, c).real() -
                             static_cast<double>(jp_jm_eigenvalue(two_j, two_m))) < 1e-10);
        }
    }
}
