#include <catch2/catch_amalgamated.hpp>

#include <thread>

#include "spinstar/correlations.hpp"

using namespace spinstar;

TEST_CASE("Q_1 = N/2") {
    for (int n = 1; n <= 8; ++n) REQUIRE(q_value(1, n) == Rational(n, 2));
}

TEST_CASE("appendix values") {
    CHECK(q_value(2, 4) == 8);          // Q2 = N^2/2
    CHECK(q_value(3, 1) == Rational(1, 2));
    CHECK(r_value(1, 2, 2) == r_value(2, 1, 2));
    for (int n = 1; n <= 6; ++n) {
        REQUIRE(r_value(1, 1, n) == Rational(-n, 2) + Rational(n * n, 2));
        REQUIRE(r_value(2, 1, n) ==
                Rational(n, 2) - Rational(5 * n * n, 4) + Rational(3 * n * n * n, 4));
    }
}

TEST_CASE("bounds are enforced") {
    CHECK_THROWS_AS(q_value(0, 3), std::domain_error);
    CHECK_THROWS_AS(q_value(33, 3), std::domain_error);
    CHECK_THROWS_AS(q_value(2, 0), std::domain_error);
    CHECK_THROWS_AS(r_value(-1, 2, 3), std::domain_error);
}

TEST_CASE("appendix polynomials are reproduced exactly") {
    CHECK(q_polynomial(1) == PolynomialInN({0, Rational(1, 2)}));
    CHECK(q_polynomial(2) == PolynomialInN({0, 0, Rational(1, 2)}));
    CHECK(q_polynomial(3) == PolynomialInN({0, Rational(1, 2), Rational(-3, 4), Rational(3, 4)}));
    CHECK(q_polynomial(4) == PolynomialInN({0, -2, 5, -4, Rational(3, 2)}));
    CHECK(r_polynomial(1, 1) == PolynomialInN({0, Rational(-1, 2), Rational(1, 2)}));
    CHECK(r_polynomial(2, 1) ==
          PolynomialInN({0, Rational(1, 2), Rational(-5, 4), Rational(3, 4)}));
    CHECK(r_polynomial(3, 1) ==
          PolynomialInN({0, Rational(-5, 2), Rational(23, 4), Rational(-19, 4), Rational(3, 2)}));
}

TEST_CASE("polynomial structure: degree k, no constant term, leading law") {
    for (int k = 1; k <= 8; ++k) {
        const PolynomialInN q = q_polynomial(k);
        REQUIRE(q.degree() == k);
        REQUIRE(q.coeffs().front() == 0);
        REQUIRE(q.leading() == Rational(factorial(k), int_pow(BigInt(2), k)));
    }
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 6; ++b) {
            const PolynomialInN r = r_polynomial(a, b);
            REQUIRE(r.degree() == a + b);
            REQUIRE(r.coeffs().front() == 0);
        }
}

TEST_CASE("R is symmetric under swapping the two factors") {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; a + b <= 6; ++b) {
            if (a + b < 1) continue;
            for (const int n : {1, 2, 3, 5, 9})
                REQUIRE(r_value(a, b, n) == r_value(b, a, n));
        }
}

TEST_CASE("polynomials evaluate to the spectral sums away from the nodes") {
    for (int k = 1; k <= 5; ++k) {
        const PolynomialInN q = q_polynomial(k);
        for (const int n : {9, 12, 17}) REQUIRE(q(long(n)) == q_value(k, n));
    }
}

TEST_CASE("asymptotic law") {
    CHECK(asymptotic_value(1, 6) == 3.0);                  // N/2
    CHECK(asymptotic_value(2, 100) == 5000.0);             // equals Q2 exactly
    CHECK(q_value(2, 100) == Rational(5000));
    const double ratio = to_double(q_value(3, 100)) / asymptotic_value(3, 100);
    CHECK(ratio == Catch::Approx(0.990067).epsilon(1e-4));
    for (int k = 1; k <= 6; ++k) {
        const int n = 100 * k;
        const double r = to_double(q_polynomial(k)(long(n))) / asymptotic_value(k, n);
        REQUIRE(std::abs(r - 1.0) < 0.05);
    }
}

TEST_CASE("correlation table is symmetric and safe to read concurrently") {
    const CorrelationTable table(5);
    CHECK(table.symmetric());
    CHECK(table.at(2, 0) == q_polynomial(2));
    CHECK_THROWS_AS(table.at(7, 0), std::out_of_range);

    std::vector<std::thread> readers;
    std::atomic<bool> pass{true};
    for (int i = 0; i < 4; ++i)
        readers.emplace_back([&table, &pass] {
            for (int rep = 0; rep < 50; ++rep)
                for (int a = 0; a <= 3; ++a)
                    for (int b = std::max(1 - a, 0); a + b <= 4; ++b)
                        if (!(table.at(a, b) == table.at(b, a))) pass = false;
        });
    for (auto& t : readers) t.join();
    CHECK(pass);
}
