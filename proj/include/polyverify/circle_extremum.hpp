#ifndef POLYVERIFY_CIRCLE_EXTREMUM_HPP
#define POLYVERIFY_CIRCLE_EXTREMUM_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "polyverify/polynomial.hpp"

namespace polyverify {

enum class ExtremumKind { Max, Min };

struct SamplingBudget {
    int grid_points = 0;   // 0 = automatic: max(1024, 64*(degree+1))
    int refine_iters = 60;
};

/// An extremum of |P| over the circle |z| = r, with the angle where the
/// reported value was attained and a Lipschitz error certificate:
/// the true extremum lies within certified_error of value.
struct CircleExtremum {
    double value = 0.0;
    double angle = 0.0;  // in [0, 2*pi)
    double radius = 1.0;
    double certified_error = 0.0;
    ExtremumKind kind = ExtremumKind::Max;
};

namespace detail {

inline double wrap_angle(double t) {
    const double two_pi = 2.0 * std::numbers::pi;
    t = std::fmod(t, two_pi);
    if (t < 0.0) t += two_pi;
    return t;
}

/// Bound on |d/dtheta P(r e^{i theta})| = |i r e^{i theta} P'(...)|:
/// L = sum_j j |a_j| r^j.
inline double circle_lipschitz_bound(const Polynomial& p, double r) {
    double l = 0.0, pw = 1.0;
    for (int j = 1; j <= p.degree(); ++j) {
        pw *= r;
        l += static_cast<double>(j) * std::abs(p.coeff(j)) * pw;
    }
    return l;
}

inline int auto_grid(const Polynomial& p, const SamplingBudget& budget) {
    const int n = p.degree();
    int grid = budget.grid_points > 0 ? budget.grid_points : std::max(1024, 64 * (n + 1));
    if (grid < 4 * (n + 1)) throw BudgetTooSmall{};
    return grid;
}

}  // namespace detail

/// Golden-section polish of |P(r e^{i theta})| around a coarse seed angle.
/// Search interval is [seed - halfwidth, seed + halfwidth]. With zero
/// iterations the seed is returned unchanged.
inline std::pair<double, double> refine_extremum(const Polynomial& p, double r, double seed_angle,
                                                 ExtremumKind kind, int iters = 60,
                                                 double halfwidth = 0.0) {
    auto f = [&](double t) { return std::abs(p(std::polar(r, t))); };
    double best_angle = seed_angle;
    double best_value = f(seed_angle);
    if (iters <= 0 || halfwidth <= 0.0) return {best_angle, best_value};

    const bool maximize = kind == ExtremumKind::Max;
    auto better = [&](double a, double b) { return maximize ? a > b : a < b; };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

    double lo = seed_angle - halfwidth, hi = seed_angle + halfwidth;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (better(f1, f2)) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
        double xb = better(f1, f2) ? x1 : x2;
        double fb = better(f1, f2) ? f1 : f2;
        if (better(fb, best_value)) {
            best_value = fb;
            best_angle = xb;
        }
    }
    return {best_angle, best_value};
}

namespace detail {

inline CircleExtremum circle_extremum(const Polynomial& p, double r, ExtremumKind kind,
                                      const SamplingBudget& budget) {
    if (!(r > 0.0)) throw NonPositiveScale{};
    const int grid = auto_grid(p, budget);
    const double two_pi = 2.0 * std::numbers::pi;
    const bool maximize = kind == ExtremumKind::Max;
    auto better = [&](double a, double b) { return maximize ? a > b : a < b; };

    std::vector<double> mods(static_cast<std::size_t>(grid));
    for (int j = 0; j < grid; ++j)
        mods[static_cast<std::size_t>(j)] = std::abs(p(std::polar(r, two_pi * j / grid)));

    // Local extrema of the sample array, ranked by value; the best 5 get a
    // golden-section polish over their bracketing interval.
    std::vector<int> locals;
    for (int j = 0; j < grid; ++j) {
        double prev = mods[static_cast<std::size_t>((j + grid - 1) % grid)];
        double next = mods[static_cast<std::size_t>((j + 1) % grid)];
        double cur = mods[static_cast<std::size_t>(j)];
        if (!better(prev, cur) && !better(next, cur)) locals.push_back(j);
    }
    std::sort(locals.begin(), locals.end(), [&](int a, int b) {
        return better(mods[static_cast<std::size_t>(a)], mods[static_cast<std::size_t>(b)]);
    });
    if (locals.size() > 5) locals.resize(5);

    int best_idx = 0;
    for (int j = 1; j < grid; ++j)
        if (better(mods[static_cast<std::size_t>(j)], mods[static_cast<std::size_t>(best_idx)]))
            best_idx = j;
    double best_value = mods[static_cast<std::size_t>(best_idx)];
    double best_angle = two_pi * best_idx / grid;

    const double spacing = two_pi / grid;
    for (int idx : locals) {
        auto [ang, val] =
            refine_extremum(p, r, two_pi * idx / grid, kind, budget.refine_iters, spacing);
        if (better(val, best_value)) {
            best_value = val;
            best_angle = ang;
        }
    }

    CircleExtremum out;
    out.value = best_value;
    out.angle = wrap_angle(best_angle);
    out.radius = r;
    out.certified_error = circle_lipschitz_bound(p, r) * (std::numbers::pi / grid);
    out.kind = kind;

    if (kind == ExtremumKind::Min) {
        // A refined value this far below the circle maximum means a zero lies
        // on or numerically on the circle; downstream formulas take m = 0.
        double coarse_max = *std::max_element(mods.begin(), mods.end());
        if (out.value < 1e-10 * coarse_max) out.value = 0.0;
    }
    return out;
}

}  // namespace detail

inline CircleExtremum max_modulus(const Polynomial& p, double r, SamplingBudget budget = {}) {
    return detail::circle_extremum(p, r, ExtremumKind::Max, budget);
}

inline CircleExtremum min_modulus(const Polynomial& p, double r, SamplingBudget budget = {}) {
    return detail::circle_extremum(p, r, ExtremumKind::Min, budget);
}

}  // namespace polyverify

#endif
