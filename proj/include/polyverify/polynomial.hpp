#ifndef POLYVERIFY_POLYNOMIAL_HPP
#define POLYVERIFY_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "polyverify/errors.hpp"

namespace polyverify {

using Complex = std::complex<double>;

/// A coefficient is treated as zero for degree purposes when its modulus is
/// below this fraction of the largest coefficient modulus.
inline constexpr double kLeadingZeroTol = 1e-14;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense complex polynomial a0 + a1 z + ... + an z^n, coefficients stored in
/// ascending power order. The zero polynomial is not representable: trailing
/// near-zero coefficients are stripped on construction and an all-zero input
/// is rejected.
class Polynomial {
public:
    explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw EmptyInput{};
        double max_mod = 0.0;
        for (Complex c : coeffs_) {
            if (!is_finite(c)) throw NonFiniteInput{};
            max_mod = std::max(max_mod, std::abs(c));
        }
        if (max_mod == 0.0) throw AllCoefficientsZero{};
        const double tol = kLeadingZeroTol * max_mod;
        while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= tol) coeffs_.pop_back();
        if (coeffs_.size() == 1 && std::abs(coeffs_[0]) <= tol) throw AllCoefficientsZero{};
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Coefficient a_j; zero beyond the degree.
    Complex coeff(int j) const {
        if (j < 0 || j > degree()) return Complex{0.0, 0.0};
        return coeffs_[static_cast<std::size_t>(j)];
    }

    Complex leading() const { return coeffs_.back(); }

    /// Horner evaluation from the leading coefficient down.
    Complex operator()(Complex z) const {
        if (!is_finite(z)) throw NonFiniteInput{};
        Complex acc = coeffs_.back();
        for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    bool operator==(const Polynomial& other) const = default;

private:
    std::vector<Complex> coeffs_;
};

inline Polynomial make_polynomial(std::vector<Complex> raw_coeffs) {
    return Polynomial(std::move(raw_coeffs));
}

inline Complex evaluate(const Polynomial& p, Complex z) { return p(z); }

inline Polynomial derivative(const Polynomial& p) {
    if (p.degree() < 1) throw DegreeZero{};
    std::vector<Complex> d(static_cast<std::size_t>(p.degree()));
    for (int j = 1; j <= p.degree(); ++j)
        d[static_cast<std::size_t>(j - 1)] = static_cast<double>(j) * p.coeff(j);
    return Polynomial(std::move(d));
}

/// Q(z) = z^n conj(P(1/conj(z))): coefficients reversed and conjugated.
/// |Q| = |P| on the unit circle. Degree drops when a0 = 0.
inline Polynomial conjugate_reciprocal(const Polynomial& p) {
    std::vector<Complex> rev(p.coeffs().rbegin(), p.coeffs().rend());
    for (Complex& c : rev) c = std::conj(c);
    return Polynomial(std::move(rev));
}

/// P(kz): coefficient j scaled by k^j.
inline Polynomial scale_argument(const Polynomial& p, double k) {
    if (!(k > 0.0)) throw NonPositiveScale{};
    std::vector<Complex> scaled(p.coeffs());
    double pw = 1.0;
    for (std::size_t j = 1; j < scaled.size(); ++j) {
        pw *= k;
        scaled[j] *= pw;
    }
    return Polynomial(std::move(scaled));
}

/// Expand leading * prod_j (z - zeros[j]).
inline Polynomial from_zeros(Complex leading, std::span<const Complex> zeros) {
    std::vector<Complex> c{leading};
    for (Complex root : zeros) {
        c.push_back(c.back());
        for (std::size_t j = c.size() - 2; j > 0; --j) c[j] = c[j - 1] - root * c[j];
        c[0] *= -root;
    }
    return Polynomial(std::move(c));
}

/// Sum of |a_j|, a scale for residual normalization.
inline double coeff_norm(const Polynomial& p) {
    double s = 0.0;
    for (Complex c : p.coeffs()) s += std::abs(c);
    return s;
}

}  // namespace polyverify

#endif
