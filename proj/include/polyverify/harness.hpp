#ifndef POLYVERIFY_HARNESS_HPP
#define POLYVERIFY_HARNESS_HPP

#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <tuple>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "polyverify/bounds.hpp"
#include "polyverify/circle_extremum.hpp"
#include "polyverify/polynomial.hpp"
#include "polyverify/rng.hpp"
#include "polyverify/schwarz.hpp"
#include "polyverify/zero_locator.hpp"

namespace polyverify {

enum class RadialLaw { AreaUniform, ModulusUniform };

struct GeneratorConfig {
    int n_min = 2;
    int n_max = 10;
    double k_min = 1.0;
    double k_max = 3.0;
    double on_boundary_fraction = 0.25;
    /// Fraction of trials pinned to k = 1 so the unit-disk bounds (Turan,
    /// Aziz-Dawood, Dubinin, Corollary 1) get exercised.
    double k_one_fraction = 0.25;
    RadialLaw radial_law = RadialLaw::AreaUniform;
    double lead_min = 0.5;
    double lead_max = 2.0;
    std::uint64_t master_seed = 0x7075667A7265ULL;
};

struct GeneratedCase {
    Polynomial poly;
    std::vector<Complex> planted_zeros;
    double k = 1.0;
};

inline GeneratedCase generate_polynomial(const GeneratorConfig& config, std::uint64_t trial_index) {
    SplitMix64 rng(config.master_seed ^ trial_index);
    rng.next();  // scramble once so nearby seeds decorrelate

    const int n = rng.uniform_int(config.n_min, config.n_max);
    double k = rng.uniform() < config.k_one_fraction ? 1.0 : rng.uniform(config.k_min, config.k_max);

    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
        double r;
        if (rng.uniform() < config.on_boundary_fraction) {
            r = k;
        } else {
            double u = rng.uniform();
            r = config.radial_law == RadialLaw::AreaUniform ? k * std::sqrt(u) : k * u;
        }
        zeros.push_back(std::polar(r, angle));
    }
    Complex leading = std::polar(rng.uniform(config.lead_min, config.lead_max),
                                 rng.uniform(0.0, 2.0 * std::numbers::pi));
    return GeneratedCase{from_zeros(leading, zeros), std::move(zeros), k};
}

enum class CheckStatus { Pass, Inconclusive, Violation };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Inconclusive: return "inconclusive";
        case CheckStatus::Violation: return "violation";
    }
    return "?";
}

/// One inequality checked against its measured side. For lower bounds margin
/// is measured - total, for upper bounds total - measured; either way a
/// negative margin beyond the tolerance is a violation.
struct BoundCheck {
    BoundBreakdown breakdown;
    double measured = 0.0;
    double margin = 0.0;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::Pass;
    bool observe_only = false;  // theorem3_printed runs in observe mode by default
};

struct AuxCheck {
    std::string name;
    double margin = 0.0;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::Pass;
};

struct CaseReport {
    std::vector<Complex> coeffs;
    int n = 0;
    double k = 1.0;
    double l = 0.0;
    DiskHypothesisReport hypothesis;
    CircleExtremum M, m, m1, lhs;  // lhs = max |P'| on |z|=1
    std::vector<BoundCheck> bounds;
    std::vector<AuxCheck> aux;
    double tolerance_budget_used = 0.0;
    bool pass = true;  // no asserted violations
};

struct VerifyOptions {
    SamplingBudget budget;
    bool assert_theorem3_printed = false;
};

namespace detail {

inline CheckStatus classify(double margin, double tolerance) {
    if (margin >= 0.0) return CheckStatus::Pass;
    if (margin >= -tolerance) return CheckStatus::Inconclusive;
    return CheckStatus::Violation;
}

/// Tolerance of a bound value under the certified extremum errors: worst-case
/// re-evaluation over the error box, plus the measured side's certificate and
/// an absolute slack.
template <typename F>
double propagate_tolerance(F&& bound_at, double M, double errM, double m, double errm,
                           double measured_err) {
    const double center = bound_at(M, m);
    double spread = 0.0;
    for (double dM : {-errM, errM})
        for (double dm : {-errm, errm})
            spread = std::max(spread, std::abs(bound_at(M + dM, std::max(0.0, m + dm)) - center));
    return spread + measured_err + 1e-9;
}

}  // namespace detail

/// Evaluate every applicable inequality for P with zeros in |z| <= k.
inline CaseReport verify_case(const Polynomial& p, double k, double l,
                              const VerifyOptions& options = {}) {
    if (!(k >= 1.0)) throw RadiusBelowOne{};
    if (l < 0.0 || l >= 1.0) throw LOutOfRange{};
    const int n = p.degree();
    if (n < 2) throw DegreeBelowTwo{};

    CaseReport report;
    report.coeffs = p.coeffs();
    report.n = n;
    report.k = k;
    report.l = l;
    report.hypothesis = check_disk_hypothesis(p, k);
    if (!report.hypothesis.pass) throw HypothesisNotCertified{};

    const SamplingBudget& budget = options.budget;
    report.M = max_modulus(p, 1.0, budget);
    report.m = min_modulus(p, k, budget);
    report.m1 = k == 1.0 ? report.m : min_modulus(p, 1.0, budget);
    const Polynomial dp = derivative(p);
    report.lhs = max_modulus(dp, 1.0, budget);

    const double M = report.M.value, errM = report.M.certified_error;
    const double m = report.m.value, errm = report.m.certified_error;
    const double m1v = report.m1.value, errm1 = report.m1.certified_error;
    const double lhs = report.lhs.value, errL = report.lhs.certified_error;
    const double a0 = std::abs(p.coeff(0));
    const double a1 = std::abs(p.coeff(1));
    const double an1 = std::abs(p.coeff(n - 1));
    const double an = std::abs(p.coeff(n));

    auto push_lower = [&](BoundBreakdown b, auto&& recompute, double mv, double errmv,
                          bool observe = false) {
        BoundCheck c;
        c.breakdown = std::move(b);
        c.measured = lhs;
        c.margin = lhs - c.breakdown.total;
        c.tolerance = detail::propagate_tolerance(recompute, M, errM, mv, errmv, errL);
        c.status = detail::classify(c.margin, c.tolerance);
        c.observe_only = observe;
        report.bounds.push_back(std::move(c));
    };

    auto as_breakdown = [&](BoundId id, double total, double mv) {
        BoundBreakdown b;
        b.id = id;
        b.total = total;
        b.terms["main"] = total;
        b.inputs = {n, k, l, M, mv, a0, a1, an1, an};
        return b;
    };

    // Lower bounds valid for zeros in |z| <= k, k >= 1.
    push_lower(as_breakdown(BoundId::Govil, govil_bound(n, k, M), 0.0),
               [&](double Mv, double) { return govil_bound(n, k, Mv); }, 0.0, 0.0);
    push_lower(theorem1_bound(p, k, M, report.hypothesis),
               [&](double Mv, double) { return theorem1_terms(n, k, Mv, a0, a1, an1, an).total; },
               0.0, 0.0);
    push_lower(theorem2_bound(p, k, M, m, l, report.hypothesis),
               [&](double Mv, double mv) {
                   return theorem2_terms(n, k, Mv, mv, l, a0, a1, an1, an).total;
               },
               m, errm);
    push_lower(theorem3_bound(p, k, M, m, Theorem3Variant::DerivationConsistent,
                              report.hypothesis),
               [&](double Mv, double mv) {
                   return theorem3_terms(n, k, Mv, mv, Theorem3Variant::DerivationConsistent, a0,
                                         a1, an).total;
               },
               m, errm);
    push_lower(theorem3_bound(p, k, M, m1v, Theorem3Variant::Printed, report.hypothesis),
               [&](double Mv, double mv) {
                   return theorem3_terms(n, k, Mv, mv, Theorem3Variant::Printed, a0, a1, an).total;
               },
               m1v, errm1, /*observe=*/!options.assert_theorem3_printed);

    // Unit-disk family, applicable only when k = 1.
    if (k == 1.0) {
        push_lower(as_breakdown(BoundId::Turan, turan_bound(n, M), 0.0),
                   [&](double Mv, double) { return turan_bound(n, Mv); }, 0.0, 0.0);
        push_lower(as_breakdown(BoundId::AzizDawood, aziz_dawood_bound(n, M, m1v), m1v),
                   [&](double Mv, double mv) { return aziz_dawood_bound(n, Mv, mv); }, m1v, errm1);
        push_lower(as_breakdown(BoundId::Dubinin, dubinin_bound(n, an, a0, M), 0.0),
                   [&](double Mv, double) { return dubinin_bound(n, an, a0, Mv); }, 0.0, 0.0);
        push_lower(corollary1_bound(p, M, m1v, l, report.hypothesis),
                   [&](double Mv, double mv) {
                       return corollary1_terms(n, Mv, mv, l, a0, an).total;
                   },
                   m1v, errm1);
    }

    // Upper bounds. The growth lemmas for non-vanishing polynomials are
    // exercised on g*(z) = z^n conj(g(1/conj(z))) with g(z) = P(kz), whose
    // zeros all lie in |z| >= 1.
    const CircleExtremum Mk = max_modulus(p, k, budget);
    {
        BoundCheck c;
        c.breakdown = as_breakdown(BoundId::FrrGrowth, frr_growth_upper(p, k, M), 0.0);
        c.measured = Mk.value;
        c.margin = c.breakdown.total - Mk.value;
        c.tolerance = detail::propagate_tolerance(
            [&](double Mv, double) { return frr_growth_upper(p, k, Mv); }, M, errM, 0.0, 0.0,
            Mk.certified_error);
        c.status = detail::classify(c.margin, c.tolerance);
        report.bounds.push_back(std::move(c));
    }

    const Polynomial g = scale_argument(p, k);
    const Polynomial gstar = conjugate_reciprocal(g);
    const CircleExtremum Mstar = max_modulus(gstar, 1.0, budget);
    const CircleExtremum mstar = min_modulus(gstar, 1.0, budget);
    if (gstar.degree() >= 1) {
        const CircleExtremum dstar = max_modulus(derivative(gstar), 1.0, budget);
        BoundCheck c;
        c.breakdown =
            as_breakdown(BoundId::ErdosLax, erdos_lax_upper(gstar.degree(), Mstar.value), 0.0);
        c.breakdown.inputs.M = Mstar.value;
        c.breakdown.inputs.n = gstar.degree();
        c.measured = dstar.value;
        c.margin = c.breakdown.total - dstar.value;
        c.tolerance = detail::propagate_tolerance(
            [&](double Mv, double) { return erdos_lax_upper(gstar.degree(), Mv); }, Mstar.value,
            Mstar.certified_error, 0.0, 0.0, dstar.certified_error);
        c.status = detail::classify(c.margin, c.tolerance);
        report.bounds.push_back(std::move(c));
    }
    if (gstar.degree() >= 2) {
        const CircleExtremum gstar_at_k = max_modulus(gstar, k, budget);
        for (double alpha : {0.0, 0.5, 1.0}) {
            BoundCheck c;
            double total = growth_upper_nonvanishing(gstar, {k, alpha}, Mstar.value, mstar.value);
            c.breakdown = as_breakdown(BoundId::GrowthNonvanishing, total, mstar.value);
            c.breakdown.inputs.M = Mstar.value;
            c.breakdown.inputs.n = gstar.degree();
            c.breakdown.inputs.l = alpha;  // free parameter echoed in the l slot
            c.measured = gstar_at_k.value;
            c.margin = total - gstar_at_k.value;
            c.tolerance = detail::propagate_tolerance(
                [&](double Mv, double mv) {
                    return growth_upper_nonvanishing(gstar, {k, alpha}, Mv, mv);
                },
                Mstar.value, Mstar.certified_error, mstar.value, mstar.certified_error,
                gstar_at_k.certified_error);
            c.status = detail::classify(c.margin, c.tolerance);
            report.bounds.push_back(std::move(c));
        }
    }

    // Lemma 2: |Q'(z)| <= |g'(z)| on |z| = 1 for g with zeros in the unit disk.
    {
        const Polynomial dg = derivative(g);
        double worst = std::numeric_limits<double>::infinity();
        const Polynomial dq = gstar.degree() >= 1 ? derivative(gstar) : dg;
        for (int j = 0; j < 512; ++j) {
            Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / 512);
            double qprime = gstar.degree() >= 1 ? std::abs(dq(z)) : 0.0;
            worst = std::min(worst, std::abs(dg(z)) - qprime);
        }
        AuxCheck c;
        c.name = "lemma2";
        c.margin = worst;
        c.tolerance = 1e-9 * std::max(1.0, coeff_norm(dg));
        c.status = detail::classify(c.margin, c.tolerance);
        report.aux.push_back(std::move(c));
    }

    // Osserman boundary Schwarz check on F built from the located zeros.
    {
        std::vector<Complex> clipped = report.hypothesis.zeros;
        for (Complex& z : clipped)  // residual-level overshoot of |z|=k is clipped back
            if (std::abs(z) > k) z *= k / std::abs(z);
        BoundaryBlaschke f = build_boundary_function(std::move(clipped), k, p.leading());
        int samples = std::max(256, 4 * (n + 1) + 1);
        OssermanReport osr = osserman_check(f, samples);
        AuxCheck c;
        c.name = "osserman";
        c.margin = osr.min_margin;
        c.tolerance = 1e-9;
        c.status = detail::classify(c.margin, c.tolerance);
        report.aux.push_back(std::move(c));
    }

    // Gauss-Lucas: critical points stay within the zero radius.
    {
        AuxCheck c;
        c.name = "gauss_lucas";
        c.tolerance = 1e-7;
        if (n >= 2) {
            RootSet crit = find_zeros(dp);
            double maxcrit = 0.0;
            for (Complex z : crit.zeros) maxcrit = std::max(maxcrit, std::abs(z));
            c.margin = report.hypothesis.max_zero_modulus - maxcrit;
        }
        c.status = detail::classify(c.margin, c.tolerance);
        report.aux.push_back(std::move(c));
    }

    for (const BoundCheck& c : report.bounds) {
        report.tolerance_budget_used = std::max(report.tolerance_budget_used, c.tolerance);
        if (!c.observe_only && c.status == CheckStatus::Violation) report.pass = false;
    }
    for (const AuxCheck& c : report.aux)
        if (c.status == CheckStatus::Violation) report.pass = false;
    return report;
}

struct PerBoundStats {
    std::uint64_t count = 0;
    std::uint64_t violations = 0;
    std::uint64_t inconclusive = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
};

struct CampaignReport {
    std::uint64_t seed = 0;
    std::uint64_t attempted = 0;
    std::uint64_t valid = 0;
    std::uint64_t discarded = 0;
    std::map<std::string, PerBoundStats> per_bound;
    std::uint64_t printed_discrepancies = 0;  // theorem3_printed observe-mode violations
    std::uint64_t l_monotone = 0;
    std::uint64_t l_nonmonotone = 0;
    double wall_seconds = 0.0;
    bool pass = true;
};

namespace detail {

struct TrialOutcome {
    bool discarded = false;
    bool monotone_applicable = false;
    bool monotone = false;
    std::vector<std::tuple<std::string, double, CheckStatus, bool>> checks;  // id, margin, status, observe
};

inline TrialOutcome run_trial(const GeneratorConfig& config, std::uint64_t trial,
                              const VerifyOptions& options) {
    static constexpr std::array<double, 4> l_grid{0.0, 0.25, 0.5, 0.9};
    TrialOutcome out;
    GeneratedCase gen = generate_polynomial(config, trial);
    double l = l_grid[trial % l_grid.size()];
    try {
        CaseReport report = verify_case(gen.poly, gen.k, l, options);
        for (const BoundCheck& c : report.bounds)
            out.checks.emplace_back(bound_name(c.breakdown.id), c.margin, c.status, c.observe_only);
        for (const AuxCheck& c : report.aux)
            out.checks.emplace_back(c.name, c.margin, c.status, false);
        if (report.m.value > 0.0) {
            out.monotone_applicable = true;
            out.monotone = true;
            const int n = report.n;
            double prev = -std::numeric_limits<double>::infinity();
            for (double lv : l_grid) {
                double total = theorem2_terms(n, gen.k, report.M.value, report.m.value, lv,
                                              std::abs(gen.poly.coeff(0)),
                                              std::abs(gen.poly.coeff(1)),
                                              std::abs(gen.poly.coeff(n - 1)),
                                              std::abs(gen.poly.coeff(n))).total;
                if (total < prev - 1e-12) out.monotone = false;
                prev = total;
            }
        }
    } catch (const NonConvergence&) {
        out.discarded = true;
    } catch (const HypothesisNotCertified&) {
        // boundary-planted zero located a hair outside k by the root finder
        out.discarded = true;
    }
    return out;
}

}  // namespace detail

/// Seeded fuzz campaign. Trials are independent and may run on several
/// threads; aggregation folds per-trial outcomes in trial order, so the
/// report does not depend on scheduling.
inline CampaignReport fuzz_campaign(const GeneratorConfig& config, std::uint64_t trials,
                                    const VerifyOptions& options = {}, unsigned jobs = 1) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<detail::TrialOutcome> outcomes(trials);
    if (jobs <= 1) {
        for (std::uint64_t t = 0; t < trials; ++t)
            outcomes[t] = detail::run_trial(config, t, options);
    } else {
        std::vector<std::thread> workers;
        std::atomic<std::uint64_t> next{0};
        for (unsigned w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (std::uint64_t t; (t = next.fetch_add(1)) < trials;)
                    outcomes[t] = detail::run_trial(config, t, options);
            });
        for (auto& w : workers) w.join();
    }

    CampaignReport report;
    report.seed = config.master_seed;
    report.attempted = trials;
    for (const detail::TrialOutcome& out : outcomes) {
        if (out.discarded) {
            ++report.discarded;
            continue;
        }
        ++report.valid;
        for (const auto& [id, margin, status, observe] : out.checks) {
            PerBoundStats& s = report.per_bound[id];
            ++s.count;
            s.worst_margin = std::min(s.worst_margin, margin);
            if (status == CheckStatus::Violation) {
                if (observe)
                    ++report.printed_discrepancies;
                else
                    ++s.violations;
            } else if (status == CheckStatus::Inconclusive) {
                ++s.inconclusive;
            }
        }
        if (out.monotone_applicable) {
            if (out.monotone)
                ++report.l_monotone;
            else
                ++report.l_nonmonotone;
        }
    }
    for (const auto& [id, s] : report.per_bound)
        if (s.violations > 0) report.pass = false;
    if (report.attempted > 0 &&
        static_cast<double>(report.discarded) > 0.01 * static_cast<double>(report.attempted))
        report.pass = false;
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

struct SharpnessRow {
    std::string family;  // "z^n+k^n" or "z^n+1"
    std::string bound;
    int n = 0;
    double k = 1.0;
    double l = 0.0;
    double lhs = 0.0;
    double total = 0.0;
    double gap = 0.0;  // |lhs - total| / lhs
};

struct SharpnessReport {
    std::vector<SharpnessRow> rows;
    double max_gap = 0.0;
    bool pass = true;  // every gap <= 1e-6
};

/// Equality families: z^n + k^n for the k-disk bounds, z^n + 1 for the
/// unit-disk bounds. Every listed bound must match max |P'| = n.
inline SharpnessReport sharpness_suite(const SamplingBudget& budget = {}) {
    SharpnessReport report;
    auto add = [&](std::string family, BoundId id, int n, double k, double l, double lhs,
                   double total) {
        SharpnessRow row{std::move(family), bound_name(id), n, k, l, lhs, total,
                         std::abs(lhs - total) / lhs};
        report.max_gap = std::max(report.max_gap, row.gap);
        if (row.gap > 1e-6) report.pass = false;
        report.rows.push_back(std::move(row));
    };

    for (int n = 2; n <= 8; ++n) {
        for (double k : {1.0, 1.5, 2.0}) {
            std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
            c[0] = std::pow(k, n);
            c.back() = 1.0;
            Polynomial p(std::move(c));
            DiskHypothesisReport hyp = check_disk_hypothesis(p, k);
            double M = max_modulus(p, 1.0, budget).value;
            double m = min_modulus(p, k, budget).value;
            double lhs = max_modulus(derivative(p), 1.0, budget).value;
            add("z^n+k^n", BoundId::Govil, n, k, 0.0, lhs, govil_bound(n, k, M));
            add("z^n+k^n", BoundId::Theorem1, n, k, 0.0, lhs,
                theorem1_bound(p, k, M, hyp).total);
            for (double l : {0.0, 0.5})
                add("z^n+k^n", BoundId::Theorem2, n, k, l, lhs,
                    theorem2_bound(p, k, M, m, l, hyp).total);
            add("z^n+k^n", BoundId::Theorem3Fixed, n, k, 0.0, lhs,
                theorem3_bound(p, k, M, m, Theorem3Variant::DerivationConsistent, hyp).total);
        }
        {
            std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
            c[0] = 1.0;
            c.back() = 1.0;
            Polynomial p(std::move(c));
            DiskHypothesisReport hyp = check_disk_hypothesis(p, 1.0);
            double M = max_modulus(p, 1.0, budget).value;
            double m1 = min_modulus(p, 1.0, budget).value;
            double lhs = max_modulus(derivative(p), 1.0, budget).value;
            add("z^n+1", BoundId::Turan, n, 1.0, 0.0, lhs, turan_bound(n, M));
            add("z^n+1", BoundId::AzizDawood, n, 1.0, 0.0, lhs, aziz_dawood_bound(n, M, m1));
            add("z^n+1", BoundId::Dubinin, n, 1.0, 0.0, lhs, dubinin_bound(n, 1.0, 1.0, M));
            for (double l : {0.0, 0.5})
                add("z^n+1", BoundId::Corollary1, n, 1.0, l, lhs,
                    corollary1_bound(p, M, m1, l, hyp).total);
        }
    }
    return report;
}

struct GaussLucasReport {
    double max_zero_modulus = 0.0;
    double max_critical_modulus = 0.0;
    bool pass = false;
};

inline GaussLucasReport gauss_lucas_check(const Polynomial& p) {
    if (p.degree() < 2) throw DegreeBelowTwo{};
    GaussLucasReport report;
    for (Complex z : find_zeros(p).zeros)
        report.max_zero_modulus = std::max(report.max_zero_modulus, std::abs(z));
    for (Complex z : find_zeros(derivative(p)).zeros)
        report.max_critical_modulus = std::max(report.max_critical_modulus, std::abs(z));
    report.pass = report.max_critical_modulus <= report.max_zero_modulus + 1e-7;
    return report;
}

}  // namespace polyverify

#endif
