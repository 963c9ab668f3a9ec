#ifndef POLYVERIFY_ZERO_LOCATOR_HPP
#define POLYVERIFY_ZERO_LOCATOR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "polyverify/polynomial.hpp"

namespace polyverify {

struct RootSet {
    std::vector<Complex> zeros;      // one per degree
    std::vector<double> residuals;   // |P(z_j)| / (sum_i |a_i| max(1,|z_j|)^i)
    int iterations = 0;
};

/// Root finding did not certify within the iteration cap. Carries the best
/// approximation so callers can log it.
struct NonConvergence : Error {
    explicit NonConvergence(RootSet best_so_far)
        : Error("root finder failed to certify within the iteration cap"),
          best(std::move(best_so_far)) {}
    RootSet best;
};

struct DiskHypothesisReport {
    std::vector<Complex> zeros;
    std::vector<double> residuals;
    double max_zero_modulus = 0.0;
    double radius = 1.0;
    double slack = 0.0;  // radius - max_zero_modulus
    bool pass = false;
};

/// Zeros with modulus up to k*(1+kHypothesisTol) count as inside; sharpness
/// families place zeros exactly on |z| = k.
inline constexpr double kHypothesisTol = 1e-9;
inline constexpr double kResidualTol = 1e-10;
inline constexpr int kRootIterationCap = 500;

namespace detail {

inline double scaled_residual(const Polynomial& p, Complex z) {
    double scale = 0.0, pw = 1.0;
    const double zmod = std::max(1.0, std::abs(z));
    for (int j = 0; j <= p.degree(); ++j) {
        scale += std::abs(p.coeff(j)) * pw;
        pw *= zmod;
    }
    return std::abs(p(z)) / scale;
}

inline double cauchy_root_bound(const Polynomial& p) {
    double m = 0.0;
    const double lead = std::abs(p.leading());
    for (int j = 0; j < p.degree(); ++j) m = std::max(m, std::abs(p.coeff(j)) / lead);
    return 1.0 + m;
}

/// Reconstruction check: expanding leading * prod(z - z_j) must reproduce the
/// coefficients within 1e-8 of the largest coefficient modulus.
inline bool coefficients_reconstruct(const Polynomial& p, const std::vector<Complex>& zeros) {
    Polynomial rec = from_zeros(p.leading(), zeros);
    if (rec.degree() != p.degree()) return false;
    double max_mod = 0.0;
    for (Complex c : p.coeffs()) max_mod = std::max(max_mod, std::abs(c));
    for (int j = 0; j <= p.degree(); ++j)
        if (std::abs(rec.coeff(j) - p.coeff(j)) > 1e-8 * max_mod) return false;
    return true;
}

}  // namespace detail

/// Aberth-Ehrlich simultaneous iteration. Initial guesses sit on the Cauchy
/// root-bound circle with a fixed angular offset so repeated runs are
/// identical. Throws NonConvergence when the residual or reconstruction
/// certificate fails after the iteration cap.
inline RootSet find_zeros(const Polynomial& p) {
    const int full_degree = p.degree();
    if (full_degree < 1) throw DegreeZero{};

    // Zeros at the origin are exact: deflate low-order zero coefficients
    // before iterating. This also covers pure monomials and keeps the
    // reconstruction certificate tight for polynomials like z^n.
    double max_mod = 0.0;
    for (Complex c : p.coeffs()) max_mod = std::max(max_mod, std::abs(c));
    int origin_zeros = 0;
    while (origin_zeros < full_degree &&
           std::abs(p.coeff(origin_zeros)) <= kLeadingZeroTol * max_mod)
        ++origin_zeros;
    if (origin_zeros > 0) {
        std::vector<Complex> reduced(p.coeffs().begin() + origin_zeros, p.coeffs().end());
        RootSet result;
        if (reduced.size() > 1) result = find_zeros(Polynomial(std::move(reduced)));
        result.zeros.insert(result.zeros.end(), static_cast<std::size_t>(origin_zeros),
                            Complex{0.0, 0.0});
        result.residuals.clear();
        for (Complex zi : result.zeros) result.residuals.push_back(detail::scaled_residual(p, zi));
        if (!detail::coefficients_reconstruct(p, result.zeros))
            throw NonConvergence{std::move(result)};
        return result;
    }

    const int n = full_degree;
    const Polynomial dp = derivative(p);
    const double r0 = detail::cauchy_root_bound(p);
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // 0.37 offset breaks the symmetry of real-coefficient spectra.
        double theta = 2.0 * std::numbers::pi * (i + 0.37) / n + 1e-3 * i;
        z[static_cast<std::size_t>(i)] = std::polar(r0, theta);
    }

    RootSet result;
    for (int iter = 1; iter <= kRootIterationCap; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex zi = z[static_cast<std::size_t>(i)];
            Complex pv = p(zi);
            if (pv == Complex{0.0, 0.0}) continue;
            Complex dv = dp(zi);
            if (dv == Complex{0.0, 0.0}) {
                z[static_cast<std::size_t>(i)] = zi + Complex{1e-8, 1e-8};
                max_step = 1.0;
                continue;
            }
            Complex newton = pv / dv;
            Complex repulse{0.0, 0.0};
            for (int j = 0; j < n; ++j)
                if (j != i) repulse += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
            Complex denom = 1.0 - newton * repulse;
            Complex step = denom == Complex{0.0, 0.0} ? newton : newton / denom;
            z[static_cast<std::size_t>(i)] = zi - step;
            max_step = std::max(max_step, std::abs(step));
        }
        result.iterations = iter;
        if (max_step < 1e-14 * r0 || iter == kRootIterationCap || iter % 8 == 0) {
            bool ok = true;
            for (int i = 0; i < n; ++i)
                if (detail::scaled_residual(p, z[static_cast<std::size_t>(i)]) > kResidualTol) {
                    ok = false;
                    break;
                }
            if (ok) break;
            if (iter == kRootIterationCap) {
                result.zeros = z;
                result.residuals.clear();
                for (Complex zi : z) result.residuals.push_back(detail::scaled_residual(p, zi));
                throw NonConvergence{std::move(result)};
            }
        }
    }

    result.zeros = std::move(z);
    for (Complex zi : result.zeros) result.residuals.push_back(detail::scaled_residual(p, zi));
    if (!detail::coefficients_reconstruct(p, result.zeros)) throw NonConvergence{std::move(result)};
    return result;
}

inline DiskHypothesisReport check_disk_hypothesis(const Polynomial& p, double k) {
    if (!(k >= 1.0)) throw RadiusBelowOne{};
    RootSet roots = find_zeros(p);
    DiskHypothesisReport report;
    report.zeros = std::move(roots.zeros);
    report.residuals = std::move(roots.residuals);
    for (Complex z : report.zeros)
        report.max_zero_modulus = std::max(report.max_zero_modulus, std::abs(z));
    report.radius = k;
    report.slack = k - report.max_zero_modulus;
    report.pass = report.max_zero_modulus <= k * (1.0 + kHypothesisTol);
    return report;
}

}  // namespace polyverify

#endif
