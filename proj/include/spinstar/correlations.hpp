// correlations.hpp — exact bath correlation functions Q_k and R as rationals
// and as polynomials in the bath size N

#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spinstar/polynomial.hpp"
#include "spinstar/spectrum.hpp"

namespace spinstar {

constexpr int kMaxCorrelationPower = 32;

// R(a, b) = 2^{−N} tr_B{(J₊J₋)^a (J₋J₊)^b}, evaluated as a spectral sum over
// the simultaneous eigenbasis of J₊J₋ and J₋J₊. Q_k = R(k, 0).
inline Rational r_value(int a, int b, int n_bath) {
    if (a < 0 || b < 0 || a + b < 1 || a + b > kMaxCorrelationPower)
        throw std::domain_error("r_value: powers must satisfy a,b >= 0, 1 <= a+b <= 32");
    if (n_bath < 1) throw std::domain_error("r_value: bath size must be >= 1");
    BigInt total = 0;
    for (int two_j = n_bath & 1; two_j <= n_bath; two_j += 2) {
        const BigInt mult = multiplicity(two_j, n_bath);
        BigInt slice = 0;
        for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
            const BigInt ep = jp_jm_eigenvalue(two_j, two_m);
            const BigInt em = jm_jp_eigenvalue(two_j, two_m);
            slice += int_pow(ep, a) * int_pow(em, b);
        }
        total += mult * slice;
    }
    return Rational(total, int_pow(BigInt(2), n_bath));
}

inline Rational q_value(int k, int n_bath) { return r_value(k, 0, n_bath); }

// The correlation functions are polynomials in N of degree a+b; recover the
// polynomial by exact Newton interpolation at N = 1..k+1 and verify it against
// one extra point.
inline PolynomialInN r_polynomial(int a, int b) {
    const int k = a + b;
    if (a < 0 || b < 0 || k < 1 || k > kMaxCorrelationPower)
        throw std::domain_error("r_polynomial: powers must satisfy a,b >= 0, 1 <= a+b <= 32");
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(k + 1);
    for (int n = 1; n <= k + 1; ++n) points.emplace_back(Rational(n), r_value(a, b, n));
    PolynomialInN poly = PolynomialInN::interpolate(points);
    if (poly(long(k + 2)) != r_value(a, b, k + 2))
        throw std::logic_error("r_polynomial: interpolation failed verification at N = k + 2");
    return poly;
}

inline PolynomialInN q_polynomial(int k) { return r_polynomial(k, 0); }

// Large-N law Q_k ≈ R ≈ k! N^k / 2^k.
inline double asymptotic_value(int k, int n_bath) {
    if (k < 1 || n_bath < 1) throw std::domain_error("asymptotic_value: k, N must be >= 1");
    return to_double(Rational(factorial(k) * int_pow(BigInt(n_bath), k), int_pow(BigInt(2), k)));
}

// Memoized table of correlation polynomials keyed by (a, b); build once, then
// lookups are lock-free reads.
class CorrelationTable {
public:
    explicit CorrelationTable(int max_total_power = 6) {
        if (max_total_power < 1 || max_total_power > kMaxCorrelationPower)
            throw std::domain_error("CorrelationTable: max power out of range");
        for (int k = 1; k <= max_total_power; ++k)
            for (int a = 0; a <= k; ++a) table_.emplace(std::make_pair(a, k - a), r_polynomial(a, k - a));
    }

    const PolynomialInN& at(int a, int b) const {
        const auto it = table_.find({a, b});
        if (it == table_.end())
            throw std::out_of_range("CorrelationTable: (a, b) not in table");
        return it->second;
    }

    bool symmetric() const {
        for (const auto& [key, poly] : table_)
            if (at(key.second, key.first) != poly) return false;
        return true;
    }

private:
    std::map<std::pair<int, int>, PolynomialInN> table_;
};

} // namespace spinstar
