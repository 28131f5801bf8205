// bloch.hpp — Bloch vector / density matrix representations of the central spin

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spinstar {

struct BlochVector {
    double v1{0.0};
    double v2{0.0};
    double v3{0.0};

    // v± = (v1 ± i v2)/2
    std::complex<double> v_plus() const { return {0.5 * v1, 0.5 * v2}; }
    std::complex<double> v_minus() const { return {0.5 * v1, -0.5 * v2}; }

    double r() const { return std::sqrt(v1 * v1 + v2 * v2 + v3 * v3); }

    bool physical(double tol = 1e-12) const { return r() <= 1.0 + tol; }
};

// The four complex entries of the 2x2 reduced density matrix.
struct ReducedDensity {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();

    double trace_real() const { return (m(0, 0) + m(1, 1)).real(); }

    double hermiticity_defect() const {
        return (m - m.adjoint()).cwiseAbs().maxCoeff();
    }

    // Eigenvalues in ascending order (matrix assumed Hermitian).
    Eigen::Vector2d eigenvalues() const {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m, Eigen::EigenvaluesOnly);
        return es.eigenvalues();
    }
};

inline ReducedDensity bloch_to_density(const BlochVector& v) {
    ReducedDensity rho;
    rho.m(0, 0) = 0.5 * (1.0 + v.v3);
    rho.m(0, 1) = 0.5 * std::complex<double>(v.v1, -v.v2);
    rho.m(1, 0) = 0.5 * std::complex<double>(v.v1, v.v2);
    rho.m(1, 1) = 0.5 * (1.0 - v.v3);
    return rho;
}

// Inverse of bloch_to_density; validates Hermiticity and unit trace.
inline BlochVector density_to_bloch(const ReducedDensity& rho, double tol = 1e-10) {
    if (rho.hermiticity_defect() > tol)
        throw std::invalid_argument("density_to_bloch: matrix is not Hermitian");
    if (std::abs(rho.trace_real() - 1.0) > tol ||
        std::abs((rho.m(0, 0) + rho.m(1, 1)).imag()) > tol)
        throw std::invalid_argument("density_to_bloch: trace is not 1");
    BlochVector v;
    v.v1 = (rho.m(0, 1) + rho.m(1, 0)).real();
    v.v2 = (rho.m(1, 0) - rho.m(0, 1)).imag();
    v.v3 = (rho.m(0, 0) - rho.m(1, 1)).real();
    return v;
}

// Von Neumann entropy in nats as a function of the Bloch radius, computed from
// the eigenvalues (1 ± r)/2 of the density matrix.
inline double entropy(double r) {
    constexpr double tol = 1e-12;
    if (r < -tol || r > 1.0 + tol)
        throw std::domain_error("entropy: Bloch radius outside [0, 1]");
    if (r < 0.0) r = 0.0;
    if (r > 1.0) r = 1.0;
    const double lp = 0.5 * (1.0 + r);
    const double lm = 0.5 * (1.0 - r);
    double s = 0.0;
    if (lp > 0.0) s -= lp * std::log(lp);
    if (lm > 0.0) s -= lm * std::log(lm);
    return s;
}

// NaN instead of throwing, for trajectories that leave the Bloch sphere.
inline double entropy_or_nan(double r) {
    if (r < 0.0 || r > 1.0 + 1e-12) return std::numeric_limits<double>::quiet_NaN();
    return entropy(std::min(r, 1.0));
}

// Lindblad-form superoperators: S± A = σ± A σ∓ − ½{σ∓σ±, A}, S3 A = σ3 A σ3 − A.
namespace pauli {
inline const Eigen::Matrix2cd& sigma1() {
    static const Eigen::Matrix2cd s = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    return s;
}
inline const Eigen::Matrix2cd& sigma2() {
    static const Eigen::Matrix2cd s =
        (Eigen::Matrix2cd() << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0)
            .finished();
    return s;
}
inline const Eigen::Matrix2cd& sigma3() {
    static const Eigen::Matrix2cd s = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    return s;
}
inline const Eigen::Matrix2cd& sigma_plus() {
    static const Eigen::Matrix2cd s = (Eigen::Matrix2cd() << 0, 1, 0, 0).finished();
    return s;
}
inline const Eigen::Matrix2cd& sigma_minus() {
    static const Eigen::Matrix2cd s = (Eigen::Matrix2cd() << 0, 0, 1, 0).finished();
    return s;
}
} // namespace pauli

inline Eigen::Matrix2cd apply_s3(const Eigen::Matrix2cd& a) {
    return pauli::sigma3() * a * pauli::sigma3() - a;
}

inline Eigen::Matrix2cd apply_s_plus(const Eigen::Matrix2cd& a) {
    const auto& sp = pauli::sigma_plus();
    const auto& sm = pauli::sigma_minus();
    return sp * a * sm - 0.5 * (sm * sp * a + a * sm * sp);
}

inline Eigen::Matrix2cd apply_s_minus(const Eigen::Matrix2cd& a) {
    const auto& sp = pauli::sigma_plus();
    const auto& sm = pauli::sigma_minus();
    return sm * a * sp - 0.5 * (sp * sm * a + a * sp * sm);
}

struct LindbladWeights {
    double c3{0.0};
    double c_plus{0.0};
    double c_minus{0.0};
};

// Decomposition over {S3, S+, S−} of the Bloch-form generator contribution
//   w3 · [v3(ρ) σ3] + wp · [v+(ρ) σ− + v−(ρ) σ+],
// using the identities  v3 σ3 = {½S3 − S+ − S−} ρ  and
// v+ σ− + v− σ+ = −½ S3 ρ.  The longitudinal weight w3 is read from v3 of the
// argument, the joint transverse weight wp from v1 (the σ1/σ2 pair enters the
// model's generators only through this combination).
inline LindbladWeights lindblad_translation(const BlochVector& weights) {
    LindbladWeights c;
    c.c3 = 0.5 * weights.v3 - 0.5 * weights.v1;
    c.c_plus = -weights.v3;
    c.c_minus = -weights.v3;
    return c;
}

// Linear map on Bloch vectors plus an affine offset (always zero in this model).
struct TransferMap {
    Eigen::Matrix3d linear = Eigen::Matrix3d::Identity();
    Eigen::Vector3d affine = Eigen::Vector3d::Zero();

    BlochVector apply(const BlochVector& v) const {
        const Eigen::Vector3d in(v.v1, v.v2, v.v3);
        const Eigen::Vector3d out = linear * in + affine;
        return {out(0), out(1), out(2)};
    }

    double determinant() const { return linear.determinant(); }

    bool singular(double tol = 0.0) const { return std::abs(determinant()) <= tol; }
};

// Exact dynamics acts as diag(f12, f12, f3) on (v1, v2, v3).
inline TransferMap transfer_from_fs(double f12, double f3) {
    TransferMap map;
    map.linear = Eigen::Vector3d(f12, f12, f3).asDiagonal();
    return map;
}

} // namespace spinstar
