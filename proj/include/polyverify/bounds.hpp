#ifndef POLYVERIFY_BOUNDS_HPP
#define POLYVERIFY_BOUNDS_HPP

#include <cmath>
#include <map>
#include <string>

#include "polyverify/polynomial.hpp"
#include "polyverify/zero_locator.hpp"

namespace polyverify {

enum class BoundId {
    Turan,
    Govil,
    AzizDawood,
    Dubinin,
    Theorem1,
    Theorem2,
    Corollary1,
    Theorem3Printed,
    Theorem3Fixed,
    ErdosLax,
    FrrGrowth,
    GrowthNonvanishing,
};

inline const char* bound_name(BoundId id) {
    switch (id) {
        case BoundId::Turan: return "turan";
        case BoundId::Govil: return "govil";
        case BoundId::AzizDawood: return "aziz_dawood";
        case BoundId::Dubinin: return "dubinin";
        case BoundId::Theorem1: return "theorem1";
        case BoundId::Theorem2: return "theorem2";
        case BoundId::Corollary1: return "corollary1";
        case BoundId::Theorem3Printed: return "theorem3_printed";
        case BoundId::Theorem3Fixed: return "theorem3_fixed";
        case BoundId::ErdosLax: return "erdos_lax";
        case BoundId::FrrGrowth: return "frr_growth";
        case BoundId::GrowthNonvanishing: return "growth_nonvanishing";
    }
    return "?";
}

/// Inputs a bound formula actually consumed, echoed for reporting.
struct BoundInputs {
    int n = 0;
    double k = 1.0;
    double l = 0.0;
    double M = 0.0;   // max |P| on |z|=1
    double m = 0.0;   // min |P| on the relevant circle
    double a0 = 0.0;  // coefficient moduli
    double a1 = 0.0;
    double an1 = 0.0;
    double an = 0.0;
};

struct BoundBreakdown {
    BoundId id = BoundId::Turan;
    double total = 0.0;
    std::map<std::string, double> terms;
    BoundInputs inputs;
};

enum class Theorem3Variant { Printed, DerivationConsistent };

/// phi(k) from the n>2 / n=2 case split; both branches vanish at k = 1.
inline double phi(double k, int n) {
    if (n < 2) throw DegreeBelowTwo{};
    if (!(k >= 1.0)) throw RadiusBelowOne{};
    if (n == 2) return (k - 1.0) * (k - 1.0) / 2.0;
    return (std::pow(k, n) - 1.0) / n - (std::pow(k, n - 2) - 1.0) / (n - 2);
}

inline double psi(double k, int n) {
    if (n < 2) throw DegreeBelowTwo{};
    if (!(k >= 1.0)) throw RadiusBelowOne{};
    if (n == 2) return 1.0 - 1.0 / k;
    return 1.0 - 1.0 / (k * k);
}

inline double turan_bound(int n, double M) { return 0.5 * n * M; }

inline double govil_bound(int n, double k, double M) {
    return n * M / (1.0 + std::pow(k, n));
}

inline double aziz_dawood_bound(int n, double M, double m1) {
    return 0.5 * n * (M + m1);
}

inline double dubinin_bound(int n, double an_mod, double a0_mod, double M) {
    return 0.5 * (n + (an_mod - a0_mod) / (an_mod + a0_mod)) * M;
}

// --- Raw-parameter theorem formulas (pure arithmetic, no hypothesis check) ---

inline BoundBreakdown theorem1_terms(int n, double k, double M, double a0, double a1, double an1,
                                     double an) {
    if (n < 2) throw DegreeBelowTwo{};
    const double kn = std::pow(k, n);
    const double ratio = (kn * an - a0) / (kn * an + a0);
    BoundBreakdown b;
    b.id = BoundId::Theorem1;
    b.inputs = {n, k, 0.0, M, 0.0, a0, a1, an1, an};
    b.terms["main"] = (n + ratio) * M / (1.0 + kn);
    b.terms["phi_term"] = an1 / (k * (1.0 + kn)) * (n + ratio) * phi(k, n);
    b.terms["psi_term"] = a1 * psi(k, n);
    b.total = b.terms["main"] + b.terms["phi_term"] + b.terms["psi_term"];
    return b;
}

inline BoundBreakdown theorem2_terms(int n, double k, double M, double m, double l, double a0,
                                     double a1, double an1, double an) {
    if (n < 2) throw DegreeBelowTwo{};
    if (l < 0.0 || l >= 1.0) throw LOutOfRange{};
    const double kn = std::pow(k, n);
    const double lm = l * m;
    const double rho = (kn * an - lm - a0) / (kn * an - lm + a0);
    BoundBreakdown b;
    b.id = BoundId::Theorem2;
    b.inputs = {n, k, l, M, m, a0, a1, an1, an};
    b.terms["main"] = n * (M + lm) / (1.0 + kn);
    b.terms["psi_term"] = psi(k, n) * a1;
    b.terms["rho_term"] = rho * (kn * M - lm) / (kn * (1.0 + kn));
    b.terms["phi_term"] = std::pow(k, n - 1) * an1 * phi(k, n) * (n + rho) / (kn * (1.0 + kn));
    b.total = b.terms["main"] + b.terms["psi_term"] + b.terms["rho_term"] + b.terms["phi_term"];
    return b;
}

inline BoundBreakdown corollary1_terms(int n, double M, double m1, double l, double a0, double an) {
    if (n < 2) throw DegreeBelowTwo{};
    if (l < 0.0 || l >= 1.0) throw LOutOfRange{};
    const double lm = l * m1;
    const double rho = (an - lm - a0) / (an - lm + a0);
    BoundBreakdown b;
    b.id = BoundId::Corollary1;
    b.inputs = {n, 1.0, l, M, m1, a0, 0.0, 0.0, an};
    b.terms["main"] = 0.5 * n * (M + lm);
    b.terms["rho_term"] = 0.5 * rho * (M - lm);
    b.total = b.terms["main"] + b.terms["rho_term"];
    return b;
}

inline BoundBreakdown theorem3_terms(int n, double k, double M, double min_value,
                                     Theorem3Variant variant, double a0, double a1, double an) {
    if (n < 2) throw DegreeBelowTwo{};
    const double kn = std::pow(k, n);
    const double ratio = (kn * an - a0) / (kn * an + a0);
    BoundBreakdown b;
    b.id = variant == Theorem3Variant::Printed ? BoundId::Theorem3Printed : BoundId::Theorem3Fixed;
    b.inputs = {n, k, 0.0, M, min_value, a0, a1, 0.0, an};
    b.terms["main"] = (n + ratio) * M / (1.0 + kn);
    b.terms["psi_term"] = a1 * psi(k, n);
    b.terms["min_term"] = (kn - 1.0) / (2.0 * kn * (1.0 + kn)) * (n + ratio) * min_value;
    b.total = b.terms["main"] + b.terms["psi_term"] + b.terms["min_term"];
    return b;
}

// --- Polynomial-level wrappers; theorem bounds require a certified disk
// hypothesis for the right radius ---

namespace detail {

inline void require_hypothesis(const DiskHypothesisReport& hyp, double k) {
    if (!hyp.pass || hyp.radius != k) throw HypothesisNotCertified{};
}

}  // namespace detail

inline BoundBreakdown theorem1_bound(const Polynomial& p, double k, double M,
                                     const DiskHypothesisReport& hyp) {
    detail::require_hypothesis(hyp, k);
    const int n = p.degree();
    return theorem1_terms(n, k, M, std::abs(p.coeff(0)), std::abs(p.coeff(1)),
                          std::abs(p.coeff(n - 1)), std::abs(p.coeff(n)));
}

inline BoundBreakdown theorem2_bound(const Polynomial& p, double k, double M, double m, double l,
                                     const DiskHypothesisReport& hyp) {
    detail::require_hypothesis(hyp, k);
    const int n = p.degree();
    return theorem2_terms(n, k, M, m, l, std::abs(p.coeff(0)), std::abs(p.coeff(1)),
                          std::abs(p.coeff(n - 1)), std::abs(p.coeff(n)));
}

inline BoundBreakdown corollary1_bound(const Polynomial& p, double M, double m1, double l,
                                       const DiskHypothesisReport& hyp) {
    detail::require_hypothesis(hyp, 1.0);
    const int n = p.degree();
    return corollary1_terms(n, M, m1, l, std::abs(p.coeff(0)), std::abs(p.coeff(n)));
}

inline BoundBreakdown theorem3_bound(const Polynomial& p, double k, double M, double min_value,
                                     Theorem3Variant variant, const DiskHypothesisReport& hyp) {
    detail::require_hypothesis(hyp, k);
    const int n = p.degree();
    return theorem3_terms(n, k, M, min_value, variant, std::abs(p.coeff(0)),
                          std::abs(p.coeff(1)), std::abs(p.coeff(n)));
}

// --- Upper bounds (Erdos-Lax and the growth lemmas) ---

inline double erdos_lax_upper(int n, double M) { return 0.5 * n * M; }

/// Growth bound on max |P| over |z| = R for an arbitrary polynomial.
inline double frr_growth_upper(const Polynomial& p, double R, double M) {
    if (!(R >= 1.0)) throw RadiusBelowOne{};
    const int n = p.degree();
    const double p0 = std::abs(p.coeff(0));
    if (n == 1) return R * M - (R - 1.0) * p0;
    return std::pow(R, n) * M - (std::pow(R, n) - std::pow(R, n - 2)) * p0;
}

struct GrowthLemmaParams {
    double R = 1.0;
    double alpha_modulus = 0.0;
};

/// Growth bound on max |P| over |z| = R for P with no zeros in |z| < 1.
inline double growth_upper_nonvanishing(const Polynomial& p, GrowthLemmaParams params, double M,
                                        double m1) {
    const int n = p.degree();
    if (n < 2) throw DegreeBelowTwo{};
    if (params.alpha_modulus < 0.0 || params.alpha_modulus > 1.0) throw AlphaOutOfRange{};
    if (!(params.R >= 1.0)) throw RadiusBelowOne{};
    const double R = params.R;
    const double dp0 = std::abs(p.coeff(1));  // |P'(0)|
    const double rn = std::pow(R, n);
    if (n == 2)
        return 0.5 * (R * R + 1.0) * M - params.alpha_modulus * 0.5 * (R * R - 1.0) * m1 -
               0.5 * (R - 1.0) * (R - 1.0) * dp0;
    return 0.5 * (rn + 1.0) * M - params.alpha_modulus * 0.5 * (rn - 1.0) * m1 -
           ((rn - 1.0) / n - (std::pow(R, n - 2) - 1.0) / (n - 2)) * dp0;
}

}  // namespace polyverify

#endif
