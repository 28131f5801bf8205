// spectrum.hpp — angular-momentum decomposition of the N-spin bath

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinstar/rational.hpp"

namespace spinstar {

// Quantum numbers are stored as doubled integers (two_j = 2j, two_m = 2m) so
// half-integer spins stay exact.

// Number of spin-j multiplets in the decomposition of N spin-1/2 particles:
// n(j, N) = C(N, N/2 − j) − C(N, N/2 − j − 1).
inline BigInt multiplicity(int two_j, int n_bath) {
    if (n_bath < 0) throw std::domain_error("multiplicity: negative bath size");
    if (two_j < 0 || two_j > n_bath)
        throw std::domain_error("multiplicity: two_j out of range [0, N]");
    if ((two_j & 1) != (n_bath & 1))
        throw std::domain_error("multiplicity: two_j must have the parity of N");
    const long a = (n_bath - two_j) / 2;
    return binomial(n_bath, a) - binomial(n_bath, a - 1);
}

// h(j, m) = sqrt((j+m)(j−m+1)); the radicand is a nonnegative integer.
inline long long jp_jm_eigenvalue(int two_j, int two_m) {
    if (two_j < 0 || std::abs(two_m) > two_j || ((two_j ^ two_m) & 1))
        throw std::domain_error("invalid (two_j, two_m) pair");
    return static_cast<long long>(two_j + two_m) * (two_j - two_m + 2) / 4;
}

inline long long jm_jp_eigenvalue(int two_j, int two_m) {
    return jp_jm_eigenvalue(two_j, -two_m);
}

inline double coupling_h(int two_j, int two_m) {
    return std::sqrt(static_cast<double>(jp_jm_eigenvalue(two_j, two_m)));
}

struct BathSpectrum {
    struct Entry {
        int two_j;
        BigInt mult;
    };

    int n_bath{0};
    std::vector<Entry> entries; // ascending two_j, parity of N

    static BathSpectrum build(int n_bath) {
        if (n_bath < 0) throw std::domain_error("BathSpectrum: negative bath size");
        BathSpectrum s;
        s.n_bath = n_bath;
        for (int two_j = n_bath & 1; two_j <= n_bath; two_j += 2)
            s.entries.push_back({two_j, multiplicity(two_j, n_bath)});
        return s;
    }

    // Σ_j n(j, N)(2j + 1); must equal 2^N.
    BigInt dimension() const {
        BigInt dim = 0;
        for (const auto& e : entries) dim += e.mult * (e.two_j + 1);
        return dim;
    }
};

// Normalized multiplet weights n(j, N)/2^N indexed by two_j/… position in the
// spectrum. Exact big-integer ratios converted to double for N ≤ 64; log-gamma
// evaluation of n(j,N) = C(N, (N−2j)/2) (2j+1)/((N+2j)/2 + 1) above that.
inline std::vector<double> spectrum_weights(int n_bath) {
    std::vector<double> w;
    if (n_bath < 0) throw std::domain_error("spectrum_weights: negative bath size");
    if (n_bath <= 64) {
        const auto spectrum = BathSpectrum::build(n_bath);
        const BigInt dim = int_pow(BigInt(2), n_bath);
        w.reserve(spectrum.entries.size());
        for (const auto& e : spectrum.entries)
            w.push_back(to_double(Rational(e.mult, dim)));
        return w;
    }
    const double n = n_bath;
    for (int two_j = n_bath & 1; two_j <= n_bath; two_j += 2) {
        const double lo = (n - two_j) / 2.0;
        const double hi = (n + two_j) / 2.0;
        const double log_binom = std::lgamma(n + 1.0) - std::lgamma(lo + 1.0) -
                                 std::lgamma(hi + 1.0);
        const double log_w = log_binom - n * std::log(2.0);
        w.push_back(std::exp(log_w) * (two_j + 1.0) / (hi + 1.0));
    }
    return w;
}

} // namespace spinstar
