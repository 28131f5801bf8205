// cumulants.hpp — projected Liouvillian moments and the TCL / NZ expansion
// coefficients as exact polynomials in N

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinstar/correlations.hpp"
#include "spinstar/polynomial.hpp"

namespace spinstar {

// The projected moments tr_B{L^{2k} ρ_S(0) ⊗ 2^{−N}I_B} are diagonal over the
// two sectors (v3, v±); all cumulant algebra reduces to scalar polynomial
// sequences per channel.
enum class Channel { V3, VPM };

enum class ExpansionMethod { Tcl, Nz };

// Two variants of the NZ partial cumulants are first-class. The tabulated
// convention applies the classic order ≤ 6 relations verbatim; its order-6
// relation (+3⟨L²⟩³) is not the one that makes the truncated convolution
// kernel reproduce the exact moments (+1⟨L²⟩³ does), which is what the
// moment-matched convention guarantees at every order.
enum class NzConvention { Tabulated, MomentMatched };

inline std::string to_string(Channel ch) { return ch == Channel::V3 ? "v3" : "vpm"; }
inline std::string to_string(ExpansionMethod m) {
    return m == ExpansionMethod::Tcl ? "tcl" : "nz";
}
inline std::string to_string(NzConvention c) {
    return c == NzConvention::Tabulated ? "tabulated" : "moment-matched";
}

constexpr int kMaxExpansionOrder = 16;

// μ_{2k} as a polynomial in N:
//   V3:  (−16)^k Q_k
//   VPM: (−4)^k Σ_{l=0}^{k} C(2k, 2l) R(k−l, l)
inline PolynomialInN moment(Channel channel, int k) {
    if (k < 1) throw std::domain_error("moment: k must be >= 1");
    if (channel == Channel::V3)
        return q_polynomial(k) * rational_pow(Rational(-16), k);
    PolynomialInN sum;
    for (int l = 0; l <= k; ++l)
        sum += r_polynomial(k - l, l) * Rational(binomial(2 * k, 2 * l));
    return sum * rational_pow(Rational(-4), k);
}

// Odd moments vanish identically.
inline PolynomialInN odd_moment() { return {}; }

struct MomentSequence {
    Channel channel{Channel::V3};
    std::vector<PolynomialInN> mu; // mu[i] = μ_{2(i+1)}

    static MomentSequence build(Channel channel, int max_order) {
        if (max_order < 2 || max_order % 2 != 0)
            throw std::domain_error("MomentSequence: max_order must be even and >= 2");
        MomentSequence seq;
        seq.channel = channel;
        for (int k = 1; 2 * k <= max_order; ++k) seq.mu.push_back(moment(channel, k));
        return seq;
    }

    const PolynomialInN& even(int order) const {
        if (order < 2 || order % 2 != 0 || order / 2 > static_cast<int>(mu.size()))
            throw std::out_of_range("MomentSequence: order out of range");
        return mu[order / 2 - 1];
    }

    PolynomialInN odd(int) const { return odd_moment(); }
};

namespace detail {

inline void check_order(int max_order, int cap) {
    if (max_order < 2 || max_order % 2 != 0)
        throw std::domain_error("expansion order must be even and >= 2");
    if (max_order > cap)
        throw std::domain_error("expansion order exceeds supported maximum " +
                                std::to_string(cap));
}

} // namespace detail

// TCL generator coefficients: classical cumulants of the moment sequence,
//   κ_n = μ_n − Σ_{2 ≤ m < n} C(n−1, m−1) κ_m μ_{n−m}   (even terms only).
// Returned list holds orders 2, 4, …, max_order.
inline std::vector<PolynomialInN> ordered_cumulants(Channel channel, int max_order) {
    detail::check_order(max_order, kMaxExpansionOrder);
    const auto seq = MomentSequence::build(channel, max_order);
    std::vector<PolynomialInN> kappa;
    for (int n = 2; n <= max_order; n += 2) {
        PolynomialInN k = seq.even(n);
        for (int m = 2; m <= n - 2; m += 2)
            k -= kappa[m / 2 - 1] * seq.even(n - m) * Rational(binomial(n - 1, m - 1));
        kappa.push_back(k);
    }
    return kappa;
}

// NZ memory-kernel coefficients.
//   Tabulated:      p₂ = μ₂, p₄ = μ₄ − μ₂², p₆ = μ₆ − 2μ₂μ₄ + 3μ₂³
//   MomentMatched:  p_n = μ_n − Σ_{2 ≤ m ≤ n−2} p_m μ_{n−m}, the unique choice
//                   for which the truncated kernel reproduces the exact
//                   moments order by order.
inline std::vector<PolynomialInN> partial_cumulants(Channel channel, int max_order,
                                                    NzConvention convention) {
    if (convention == NzConvention::Tabulated && max_order > 6)
        throw std::domain_error(
            "partial_cumulants: the tabulated convention ends at order 6");
    detail::check_order(max_order, kMaxExpansionOrder);
    const auto seq = MomentSequence::build(channel, max_order);
    std::vector<PolynomialInN> p;
    if (convention == NzConvention::Tabulated) {
        p.push_back(seq.even(2));
        if (max_order >= 4) p.push_back(seq.even(4) - seq.even(2) * seq.even(2));
        if (max_order >= 6) {
            const auto& mu2 = seq.even(2);
            p.push_back(seq.even(6) - Rational(2) * (mu2 * seq.even(4)) +
                        Rational(3) * (mu2 * mu2 * mu2));
        }
        return p;
    }
    for (int n = 2; n <= max_order; n += 2) {
        PolynomialInN q = seq.even(n);
        for (int m = 2; m <= n - 2; m += 2) q -= p[m / 2 - 1] * seq.even(n - m);
        p.push_back(q);
    }
    return p;
}

// Channel generator scalars c_{2n} with the conventional normalization
// attached: the v3 equations carry c = 2q (TCL) / 2q̃ (NZ), the v± equations
// c = s / s̃.
struct CoefficientSet {
    ExpansionMethod method{ExpansionMethod::Tcl};
    Channel channel{Channel::V3};
    std::optional<NzConvention> convention; // set for NZ only
    std::vector<PolynomialInN> c;           // c[i] = c_{2(i+1)}

    int max_order() const { return 2 * static_cast<int>(c.size()); }

    const PolynomialInN& at_order(int order) const {
        if (order < 2 || order % 2 != 0 || order > max_order())
            throw std::out_of_range("CoefficientSet: order out of range");
        return c[order / 2 - 1];
    }

    // q_{2n} (V3) or s_{2n} (VPM) in the usual tabulated normalization.
    PolynomialInN tabulated_entry(int order) const {
        PolynomialInN entry = at_order(order);
        if (channel == Channel::V3) entry *= Rational(1, 2);
        return entry;
    }
};

inline CoefficientSet coefficient_set(ExpansionMethod method, Channel channel, int max_order,
                                      NzConvention convention = NzConvention::MomentMatched) {
    CoefficientSet set;
    set.method = method;
    set.channel = channel;
    if (method == ExpansionMethod::Tcl) {
        set.c = ordered_cumulants(channel, max_order);
    } else {
        set.convention = convention;
        set.c = partial_cumulants(channel, max_order, convention);
    }
    return set;
}

} // namespace spinstar
