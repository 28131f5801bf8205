// dense.hpp — brute-force full-Hilbert-space oracle for small baths

#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "spinstar/bloch.hpp"
#include "spinstar/correlations.hpp"
#include "spinstar/rational.hpp"
#include "spinstar/spectrum.hpp"

namespace spinstar::dense {

constexpr int kMaxDenseBath = 12;

using Matrix = Eigen::MatrixXcd;
using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// Collective J₊ on the computational basis of N bath spins; entries are 0/1.
// Bit i of the basis index is spin i, bit set = spin down.
inline IntMatrix bath_jplus(int n_bath) {
    if (n_bath < 0 || n_bath > kMaxDenseBath)
        throw std::domain_error("bath_jplus: bath size out of range");
    const long dim = 1L << n_bath;
    IntMatrix j = IntMatrix::Zero(dim, dim);
    for (long b = 0; b < dim; ++b)
        for (int i = 0; i < n_bath; ++i)
            if (b & (1L << i)) j(b ^ (1L << i), b) = 1; // raise spin i
    return j;
}

inline IntMatrix bath_jminus(int n_bath) { return bath_jplus(n_bath).transpose(); }

// Magnetization 2m of a computational basis state.
inline int two_m_of(long b, int n_bath) {
    int down = 0;
    for (int i = 0; i < n_bath; ++i)
        if (b & (1L << i)) ++down;
    return n_bath - 2 * down;
}

// αH = 2α(σ₊J₋ + σ₋J₊) on H_S ⊗ H_B; the system qubit is the leading factor.
inline Matrix build_hamiltonian(int n_bath, double alpha) {
    if (n_bath < 1 || n_bath > kMaxDenseBath)
        throw std::domain_error("build_hamiltonian: bath size out of range [1, 12]");
    const long dim_b = 1L << n_bath;
    const IntMatrix jp = bath_jplus(n_bath);
    Matrix h = Matrix::Zero(2 * dim_b, 2 * dim_b);
    for (long r = 0; r < dim_b; ++r)
        for (long c = 0; c < dim_b; ++c)
            if (jp(r, c)) {
                h(dim_b + r, c) += 2.0 * alpha; // σ₋ ⊗ J₊
                h(c, dim_b + r) += 2.0 * alpha; // σ₊ ⊗ J₋
            }
    return h;
}

// Eigendecomposes the α-free Hamiltonian once; each propagated sample is then
// O(dim²). Uses ρ(0) = ρ_S ⊗ I_B/2^N, which in the eigenbasis reads
// B = (I + Σ_i v_i(0) A_i) / (2·2^N) with A_i = U†(σ_i ⊗ I_B)U, and
// v_i(t) = Σ_{pq} (A_i)_{pq} e^{−i(λ_p−λ_q)x} … evaluated as tr{A_i ρ̃(x)}.
class DenseModel {
public:
    explicit DenseModel(int n_bath) : n_bath_(n_bath) {
        const Matrix h = build_hamiltonian(n_bath, 1.0);
        Eigen::SelfAdjointEigenSolver<Matrix> es(h);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("DenseModel: eigendecomposition failed");
        eigs_ = es.eigenvalues();
        const Matrix& u = es.eigenvectors();
        const long dim_b = 1L << n_bath;
        const long dim = 2 * dim_b;
        Matrix s1 = Matrix::Zero(dim, dim), s2 = Matrix::Zero(dim, dim),
               s3 = Matrix::Zero(dim, dim);
        for (long b = 0; b < dim_b; ++b) {
            s1(b, dim_b + b) = 1.0;
            s1(dim_b + b, b) = 1.0;
            s2(b, dim_b + b) = std::complex<double>(0, -1);
            s2(dim_b + b, b) = std::complex<double>(0, 1);
            s3(b, b) = 1.0;
            s3(dim_b + b, dim_b + b) = -1.0;
        }
        a_[0] = u.adjoint() * s1 * u;
        a_[1] = u.adjoint() * s2 * u;
        a_[2] = u.adjoint() * s3 * u;
    }

    int n_bath() const { return n_bath_; }

    BlochVector propagate(const BlochVector& v0, double alpha_t) const {
        const long dim = eigs_.size();
        const double norm = 1.0 / static_cast<double>(1L << n_bath_);
        Eigen::VectorXcd phase(dim);
        for (long p = 0; p < dim; ++p)
            phase(p) = std::exp(std::complex<double>(0, -eigs_(p) * alpha_t));
        Matrix b = 0.5 * norm *
                   (Matrix::Identity(dim, dim) + v0.v1 * a_[0] + v0.v2 * a_[1] + v0.v3 * a_[2]);
        const Matrix rho = phase.asDiagonal() * b * phase.conjugate().asDiagonal();
        double out[3];
        for (int i = 0; i < 3; ++i)
            out[i] = (a_[i].transpose().cwiseProduct(rho)).sum().real(); // tr{A_i ρ}
        return {out[0], out[1], out[2]};
    }

private:
    int n_bath_;
    Eigen::VectorXd eigs_;
    Matrix a_[3];
};

inline BlochVector propagate_dense(const BlochVector& v0, int n_bath, double alpha, double t) {
    return DenseModel(n_bath).propagate(v0, alpha * t);
}

// Operator words over {J₊J₋, J₋J₊}, traced exactly in integer arithmetic.
enum class WordOp { JpJm, JmJp };

inline Rational trace_word(const std::vector<WordOp>& word, int n_bath) {
    if (n_bath < 1 || n_bath > 8)
        throw std::domain_error("trace_word: bath size out of range [1, 8]");
    if (word.size() > 6) throw std::domain_error("trace_word: word length out of range [0, 6]");
    const long dim = 1L << n_bath;
    const IntMatrix jp = bath_jplus(n_bath);
    const IntMatrix jm = jp.transpose();
    const IntMatrix pm = jp * jm;
    const IntMatrix mp = jm * jp;
    IntMatrix acc = IntMatrix::Identity(dim, dim);
    for (const WordOp op : word) acc = acc * (op == WordOp::JpJm ? pm : mp);
    BigInt trace = 0;
    for (long i = 0; i < dim; ++i) trace += acc(i, i);
    return Rational(trace, int_pow(BigInt(2), n_bath));
}

// Dense check of the projected Liouvillian moments: applies L = −i[H, ·]
// repeatedly to ρ_S(0) ⊗ 2^{−N} I_B and compares the partial traces against
// the channel scalars (−16)^k Q_k and (−4)^k Σ_l C(2k,2l) R(k−l,l); also
// confirms that the odd moments vanish and that the channels do not mix.
struct MomentCheckEntry {
    int k{0};
    double v3_scalar{0.0};
    double vpm_scalar{0.0};
    double v3_expected{0.0};
    double vpm_expected{0.0};
    double odd_residual{0.0};   // max abs entry of tr_B{L^{2k+1} ρ}
    double cross_residual{0.0}; // leakage between the two channels
};

struct MomentCheckReport {
    int n_bath{0};
    std::vector<MomentCheckEntry> entries;
    double max_error{0.0};
    bool ok{false};
};

namespace detail {

inline Matrix liouvillian(const Matrix& h, const Matrix& x) {
    return std::complex<double>(0, -1) * (h * x - x * h);
}

inline Eigen::Matrix2cd partial_trace_bath(const Matrix& x, int n_bath) {
    const long dim_b = 1L << n_bath;
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (int s = 0; s < 2; ++s)
        for (int sp = 0; sp < 2; ++sp)
            for (long b = 0; b < dim_b; ++b) out(s, sp) += x(s * dim_b + b, sp * dim_b + b);
    return out;
}

} // namespace detail

inline MomentCheckReport verify_liouvillian_moments(int n_bath, int k_max,
                                                    double tolerance = 1e-9) {
    if (n_bath < 1 || n_bath > 6)
        throw std::domain_error("verify_liouvillian_moments: bath size out of range [1, 6]");
    if (k_max < 1 || k_max > 4)
        throw std::domain_error("verify_liouvillian_moments: k_max out of range [1, 4]");
    const long dim_b = 1L << n_bath;
    const Matrix h = build_hamiltonian(n_bath, 1.0);
    const double norm = 1.0 / static_cast<double>(dim_b);

    auto embed = [&](const Eigen::Matrix2cd& rho_s) {
        Matrix rho = Matrix::Zero(2 * dim_b, 2 * dim_b);
        for (int s = 0; s < 2; ++s)
            for (int sp = 0; sp < 2; ++sp)
                for (long b = 0; b < dim_b; ++b)
                    rho(s * dim_b + b, sp * dim_b + b) = rho_s(s, sp) * norm;
        return rho;
    };

    // ρ_S = ½(I + σ3) probes the v3 channel, ρ_S = ½(I + σ1) the v± channel.
    Eigen::Matrix2cd rho_z = Eigen::Matrix2cd::Zero();
    rho_z(0, 0) = 1.0;
    Eigen::Matrix2cd rho_x;
    rho_x << 0.5, 0.5, 0.5, 0.5;

    Matrix mz = embed(rho_z);
    Matrix mx = embed(rho_x);

    MomentCheckReport report;
    report.n_bath = n_bath;
    double max_err = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        mz = detail::liouvillian(h, detail::liouvillian(h, mz));
        mx = detail::liouvillian(h, detail::liouvillian(h, mx));

        MomentCheckEntry entry;
        entry.k = k;

        const Eigen::Matrix2cd tz = detail::partial_trace_bath(mz, n_bath);
        const Eigen::Matrix2cd tx = detail::partial_trace_bath(mx, n_bath);
        // tr_B{L^{2k} ρ_z} = scalar · v3(0)/2 · σ3 with v3(0) = 1
        entry.v3_scalar = 2.0 * tz(0, 0).real();
        // tr_B{L^{2k} ρ_x} = scalar · (v−σ₊ + v+σ₋) with v± = 1/2
        entry.vpm_scalar = 2.0 * tx(0, 1).real();
        entry.cross_residual =
            std::max({std::abs(tz(0, 1)), std::abs(tz(1, 0)), std::abs(tx(0, 0)),
                      std::abs(tx(1, 1))});

        Rational vpm_sum = 0;
        for (int l = 0; l <= k; ++l)
            vpm_sum += Rational(binomial(2 * k, 2 * l)) * r_value(k - l, l, n_bath);
        entry.v3_expected = to_double(rational_pow(Rational(-16), k) * q_value(k, n_bath));
        entry.vpm_expected = to_double(rational_pow(Rational(-4), k) * vpm_sum);

        const Matrix odd_z = detail::liouvillian(h, mz);
        entry.odd_residual = detail::partial_trace_bath(odd_z, n_bath).cwiseAbs().maxCoeff();

        max_err = std::max({max_err, std::abs(entry.v3_scalar - entry.v3_expected),
                            std::abs(entry.vpm_scalar - entry.vpm_expected),
                            entry.cross_residual, entry.odd_residual});
        report.entries.push_back(entry);
    }
    report.max_error = max_err;
    report.ok = max_err <= tolerance;
    return report;
}

// Bath-space basis |j, m, ν⟩ with the ν labels aligned across m by the
// lowering ladder: the top slice of each multiplet is obtained from J²
// restricted to the maximal-magnetization sector, the rest by applying J₋.
struct AngularBasis {
    Eigen::MatrixXcd columns;               // 2^N × 2^N, one multiplet state per column
    std::vector<std::array<int, 2>> labels; // (two_j, two_m) per column
    std::vector<int> nu;                    // multiplet copy index per column
};

inline AngularBasis angular_basis(int n_bath) {
    if (n_bath < 1 || n_bath > 8)
        throw std::domain_error("angular_basis: bath size out of range [1, 8]");
    const long dim = 1L << n_bath;
    const IntMatrix jp = bath_jplus(n_bath);
    const IntMatrix jm = jp.transpose();
    // J² = J₋J₊ + J₃² + J₃, real symmetric in the computational basis
    Eigen::MatrixXd j2 = (jm * jp).cast<double>();
    for (long b = 0; b < dim; ++b) {
        const double m = two_m_of(b, n_bath) / 2.0;
        j2(b, b) += m * m + m;
    }
    const Eigen::MatrixXd jm_real = jm.cast<double>();

    AngularBasis basis;
    basis.columns = Eigen::MatrixXcd::Zero(dim, dim);
    long col = 0;
    for (int two_j = n_bath % 2; two_j <= n_bath; two_j += 2) {
        const double j = two_j / 2.0;
        // J² restricted to the m = j sector (J₃ is diagonal, so the sector is
        // spanned by computational states of fixed magnetization)
        std::vector<long> sector;
        for (long b = 0; b < dim; ++b)
            if (two_m_of(b, n_bath) == two_j) sector.push_back(b);
        const long sz = static_cast<long>(sector.size());
        Eigen::MatrixXd restricted(sz, sz);
        for (long r = 0; r < sz; ++r)
            for (long c = 0; c < sz; ++c) restricted(r, c) = j2(sector[r], sector[c]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(restricted);

        int copy = 0;
        for (long p = 0; p < sz; ++p) {
            if (std::abs(es.eigenvalues()(p) - j * (j + 1.0)) > 1e-8) continue;
            Eigen::VectorXd top = Eigen::VectorXd::Zero(dim);
            for (long r = 0; r < sz; ++r) top(sector[r]) = es.eigenvectors()(r, p);
            Eigen::VectorXd cur = top;
            for (int two_m = two_j; two_m >= -two_j; two_m -= 2) {
                basis.columns.col(col) = cur.cast<std::complex<double>>();
                basis.labels.push_back({two_j, two_m});
                basis.nu.push_back(copy);
                ++col;
                if (two_m > -two_j) {
                    cur = jm_real * cur;
                    const double nrm = cur.norm();
                    if (nrm < 1e-12)
                        throw std::runtime_error("angular_basis: ladder terminated early");
                    cur /= nrm;
                }
            }
            ++copy;
        }
        if (copy != multiplicity(two_j, n_bath))
            throw std::runtime_error("angular_basis: multiplet count mismatch");
    }
    if (col != dim) throw std::runtime_error("angular_basis: basis incomplete");
    return basis;
}

} // namespace spinstar::dense
