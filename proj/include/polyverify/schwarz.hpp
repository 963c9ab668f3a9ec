#ifndef POLYVERIFY_SCHWARZ_HPP
#define POLYVERIFY_SCHWARZ_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "polyverify/polynomial.hpp"
#include "polyverify/zero_locator.hpp"

namespace polyverify {

/// F(z) = z * rotation * prod_j (k z - z_j) / (k - z conj(z_j)), kept in
/// factored form. Maps the unit disk into itself with |F| = 1 on |z| = 1 and
/// F(0) = 0.
struct BoundaryBlaschke {
    std::vector<Complex> zeros;
    double k = 1.0;
    Complex rotation{1.0, 0.0};

    Complex operator()(Complex z) const {
        Complex v = z * rotation;
        for (Complex zj : zeros) {
            Complex den = k - z * std::conj(zj);
            // den vanishes only when |zj| = k and z sits at the zero's angle;
            // there the factor's limit is -zj/k.
            v *= std::abs(den) < 1e-14 * k ? -zj / k : (k * z - zj) / den;
        }
        return v;
    }
};

inline BoundaryBlaschke build_boundary_function(std::vector<Complex> zeros, double k,
                                                Complex leading_coefficient = {1.0, 0.0}) {
    if (!(k >= 1.0)) throw RadiusBelowOne{};
    if (leading_coefficient == Complex{0.0, 0.0}) throw AllCoefficientsZero{};
    for (Complex zj : zeros)
        if (std::abs(zj) > k * (1.0 + kHypothesisTol)) throw ZeroOutsideDisk{};
    BoundaryBlaschke f;
    f.zeros = std::move(zeros);
    f.k = k;
    f.rotation = leading_coefficient / std::conj(leading_coefficient);
    return f;
}

/// |F'(0)| = prod |z_j| / k^n; equals |a0| / (k^n |an|) when the zeros come
/// from a factored polynomial.
inline double f_prime_zero_modulus(const BoundaryBlaschke& f) {
    double v = 1.0;
    for (Complex zj : f.zeros) v *= std::abs(zj) / f.k;
    return v;
}

/// |F'(b)| = 1 + sum_j (k^2 - |z_j|^2) / |k b - z_j|^2 for |b| = 1.
/// A zero with |z_j| = k contributes 0 even at a coincident angle (the
/// summand's limit); |k b - z_j| can only vanish when |z_j| = k, so the
/// degenerate-point error is unreachable for valid inputs.
inline double boundary_derivative_modulus(const BoundaryBlaschke& f, Complex b) {
    if (std::abs(std::abs(b) - 1.0) > 1e-12) throw NonFiniteInput{};
    double v = 1.0;
    for (Complex zj : f.zeros) {
        double num = f.k * f.k - std::norm(zj);
        if (std::abs(num) <= 1e-12 * f.k * f.k) continue;  // boundary zero, summand 0
        double den = std::norm(f.k * b - zj);
        if (den < 1e-24) throw DegenerateBoundaryPoint{};
        v += num / den;
    }
    return v;
}

struct OssermanReport {
    double min_margin = 0.0;        // min over samples of |F'(b)| - 2/(1+|F'(0)|)
    double min_margin_angle = 0.0;
    double f_prime_zero = 0.0;
    int samples = 0;
};

/// Boundary Schwarz check: |F'(b)| >= 2/(1+|F'(0)|) at every sampled b.
inline OssermanReport osserman_check(const BoundaryBlaschke& f, int boundary_samples = 256) {
    if (boundary_samples < 16) throw BudgetTooSmall{};
    OssermanReport report;
    report.f_prime_zero = f_prime_zero_modulus(f);
    report.samples = boundary_samples;
    const double floor = 2.0 / (1.0 + report.f_prime_zero);
    double worst = std::numeric_limits<double>::infinity();
    for (int j = 0; j < boundary_samples; ++j) {
        double theta = 2.0 * std::numbers::pi * j / boundary_samples;
        double margin = boundary_derivative_modulus(f, std::polar(1.0, theta)) - floor;
        if (margin < worst) {
            worst = margin;
            report.min_margin_angle = theta;
        }
    }
    report.min_margin = worst;
    return report;
}

}  // namespace polyverify

#endif
