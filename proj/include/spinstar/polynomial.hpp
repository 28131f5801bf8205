// polynomial.hpp — exact-rational polynomials in the bath size N

#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spinstar/rational.hpp"

namespace spinstar {

// Dense univariate polynomial with cpp_rational coefficients, ascending degree.
// The coefficient vector is kept trimmed: the trailing coefficient is nonzero
// except for the zero polynomial, which is stored as {0}.
class PolynomialInN {
public:
    PolynomialInN() : coeffs_{Rational(0)} {}

    explicit PolynomialInN(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(Rational(0));
        trim();
    }

    PolynomialInN(std::initializer_list<Rational> coeffs)
        : PolynomialInN(std::vector<Rational>(coeffs)) {}

    static PolynomialInN constant(const Rational& c) { return PolynomialInN({c}); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Rational operator()(long n) const { return (*this)(Rational(n)); }

    double eval_double(double x) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + to_double(*it);
        return acc;
    }

    PolynomialInN& operator+=(const PolynomialInN& other) {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        trim();
        return *this;
    }

    PolynomialInN& operator-=(const PolynomialInN& other) {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
        trim();
        return *this;
    }

    PolynomialInN& operator*=(const Rational& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend PolynomialInN operator+(PolynomialInN a, const PolynomialInN& b) { return a += b; }
    friend PolynomialInN operator-(PolynomialInN a, const PolynomialInN& b) { return a -= b; }
    friend PolynomialInN operator*(PolynomialInN a, const Rational& s) { return a *= s; }
    friend PolynomialInN operator*(const Rational& s, PolynomialInN a) { return a *= s; }

    friend PolynomialInN operator*(const PolynomialInN& a, const PolynomialInN& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return PolynomialInN(std::move(prod));
    }

    friend bool operator==(const PolynomialInN& a, const PolynomialInN& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const PolynomialInN& a, const PolynomialInN& b) { return !(a == b); }

    // Unique polynomial of degree < points.size() through the given (x, y) pairs,
    // via Newton divided differences in exact arithmetic.
    static PolynomialInN interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
        if (points.empty()) throw std::invalid_argument("interpolate: no points");
        const std::size_t n = points.size();
        std::vector<Rational> coef(n);
        for (std::size_t i = 0; i < n; ++i) coef[i] = points[i].second;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = n - 1; i >= j; --i) {
                const Rational dx = points[i].first - points[i - j].first;
                if (dx == 0) throw std::invalid_argument("interpolate: repeated abscissa");
                coef[i] = (coef[i] - coef[i - 1]) / dx;
            }
        // expand the Newton form into monomial coefficients
        std::vector<Rational> poly(n, Rational(0));
        std::vector<Rational> basis{Rational(1)}; // product of (x - x_0)..(x - x_{j-1})
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t d = 0; d < basis.size(); ++d) poly[d] += coef[j] * basis[d];
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d] -= basis[d] * points[j].first;
                next[d + 1] += basis[d];
            }
            basis = std::move(next);
        }
        return PolynomialInN(std::move(poly));
    }

    std::string str(const std::string& var = "N") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!out.empty()) out += coeffs_[i] > 0 ? " + " : " - ";
            else if (coeffs_[i] < 0) out += "-";
            const Rational mag = coeffs_[i] > 0 ? coeffs_[i] : Rational(-coeffs_[i]);
            if (i == 0 || mag != 1) out += rational_string(mag);
            if (i > 0) {
                if (mag != 1) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

} // namespace spinstar
