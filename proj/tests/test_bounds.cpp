#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "polyverify/bounds.hpp"
#include "polyverify/circle_extremum.hpp"
#include "polyverify/rng.hpp"

using namespace polyverify;

namespace {

Polynomial z3_plus_8() { return make_polynomial({{8, 0}, {0, 0}, {0, 0}, {1, 0}}); }

}  // namespace

TEST_CASE("phi values") {
    CHECK(phi(1.0, 2) == 0.0);
    CHECK(phi(1.0, 5) == 0.0);
    CHECK(phi(3.0, 2) == Catch::Approx(2.0));
    CHECK(phi(2.0, 3) == Catch::Approx(4.0 / 3.0));
    CHECK_THROWS_AS(phi(2.0, 1), DegreeBelowTwo);
}

TEST_CASE("phi agrees with its integral form for n > 2") {
    // phi(k) = integral over [1,k] of t^{n-1} - t^{n-3}
    for (int n : {3, 4, 5, 7}) {
        for (double k : {1.0, 1.3, 2.0, 2.7}) {
            const int steps = 200'000;
            double h = (k - 1.0) / steps, sum = 0.0;
            for (int i = 0; i < steps; ++i) {
                double t = 1.0 + (i + 0.5) * h;
                sum += (std::pow(t, n - 1) - std::pow(t, n - 3)) * h;
            }
            CHECK(phi(k, n) == Catch::Approx(sum).margin(1e-8));
        }
    }
}

TEST_CASE("psi values") {
    CHECK(psi(1.0, 2) == 0.0);
    CHECK(psi(1.0, 7) == 0.0);
    CHECK(psi(2.0, 2) == Catch::Approx(0.5));
    CHECK(psi(2.0, 5) == Catch::Approx(0.75));
}

TEST_CASE("classic bounds on their equality families") {
    // P = z: n=1, M=1
    CHECK(turan_bound(1, 1.0) == 0.5);
    // P = (z+1)^2: M = 4 on |z|=1, max|P'| = 4
    CHECK(turan_bound(2, 4.0) == 4.0);

    // P = z^3+8, k=2: M = 9, max|P'| = 3
    CHECK(govil_bound(3, 2.0, 9.0) == Catch::Approx(3.0));
    CHECK(govil_bound(4, 1.0, 6.0) == turan_bound(4, 6.0));

    // P = z^n: M = m1 = 1
    CHECK(aziz_dawood_bound(5, 1.0, 1.0) == 5.0);
    CHECK(aziz_dawood_bound(5, 2.0, 0.0) == turan_bound(5, 2.0));

    CHECK(dubinin_bound(4, 1.0, 0.0, 1.0) == Catch::Approx(2.5));
    CHECK(dubinin_bound(3, 1.0, 1.0, 2.0) == turan_bound(3, 2.0));
    // P = z^2 + 1.5 z + 0.5, zeros -1 and -0.5: M = 3, max|P'| = 3.5
    CHECK(dubinin_bound(2, 1.0, 0.5, 3.0) == Catch::Approx(3.5));
}

TEST_CASE("theorem 1 on the extremal polynomial z^3 + 8") {
    Polynomial p = z3_plus_8();
    DiskHypothesisReport hyp = check_disk_hypothesis(p, 2.0);
    BoundBreakdown b = theorem1_bound(p, 2.0, 9.0, hyp);
    CHECK(b.total == Catch::Approx(3.0).epsilon(1e-12));
    CHECK(b.terms.at("phi_term") == 0.0);
    CHECK(b.terms.at("psi_term") == 0.0);
    double sum = 0.0;
    for (const auto& [name, v] : b.terms) sum += v;
    CHECK(b.total == Catch::Approx(sum).epsilon(1e-12));
}

TEST_CASE("theorem requires a certified hypothesis") {
    Polynomial p = z3_plus_8();
    DiskHypothesisReport bad = check_disk_hypothesis(p, 1.5);  // fails
    CHECK_THROWS_AS(theorem1_bound(p, 1.5, 9.0, bad), HypothesisNotCertified);
    DiskHypothesisReport other = check_disk_hypothesis(p, 2.0);
    CHECK_THROWS_AS(theorem1_bound(p, 3.0, 9.0, other), HypothesisNotCertified);
}

TEST_CASE("theorem 2 example values") {
    Polynomial p = z3_plus_8();
    DiskHypothesisReport hyp = check_disk_hypothesis(p, 2.0);
    // zeros on |z|=2 force m = 0, so theorem 2 collapses to theorem 1
    BoundBreakdown b = theorem2_bound(p, 2.0, 9.0, 0.0, 0.5, hyp);
    CHECK(b.total == Catch::Approx(3.0).epsilon(1e-12));

    // P = z^3, k = 1: M = m = 1, a0 = 0 so rho = 1
    Polynomial cube = make_polynomial({{0, 0}, {0, 0}, {0, 0}, {1, 0}});
    DiskHypothesisReport hc = check_disk_hypothesis(cube, 1.0);
    BoundBreakdown c = theorem2_bound(cube, 1.0, 1.0, 1.0, 0.5, hc);
    CHECK(c.total == Catch::Approx(2.5).epsilon(1e-12));

    CHECK_THROWS_AS(theorem2_bound(p, 2.0, 9.0, 0.0, 1.0, hyp), LOutOfRange);
    CHECK_THROWS_AS(theorem2_bound(p, 2.0, 9.0, 0.0, -0.1, hyp), LOutOfRange);
}

TEST_CASE("corollary 1 example values") {
    // P = z^n + 1: m1 = 0, rho = 0, total = n
    for (int n : {2, 3, 5}) CHECK(corollary1_terms(n, 2.0, 0.0, 0.5, 1.0, 1.0).total == n);

    // P = z^3, l = 0.5: matches theorem 2 at k = 1
    CHECK(corollary1_terms(3, 1.0, 1.0, 0.5, 0.0, 1.0).total == Catch::Approx(2.5));
}

TEST_CASE("theorem 3 variants on z^3 + 8, k = 2") {
    Polynomial p = z3_plus_8();
    DiskHypothesisReport hyp = check_disk_hypothesis(p, 2.0);

    // derivation-consistent variant: min over |z|=2 is 0, total = LHS = 3
    BoundBreakdown fixed =
        theorem3_bound(p, 2.0, 9.0, 0.0, Theorem3Variant::DerivationConsistent, hyp);
    CHECK(fixed.total == Catch::Approx(3.0).epsilon(1e-12));

    // printed variant: min over |z|=1 is 7, total = 3 + 147/144 > 3, exceeding max|P'|
    BoundBreakdown printed = theorem3_bound(p, 2.0, 9.0, 7.0, Theorem3Variant::Printed, hyp);
    CHECK(printed.total == Catch::Approx(3.0 + 147.0 / 144.0).epsilon(1e-14));
    CHECK(printed.total > 3.0);

    // both variants agree at k = 1 where the min term has coefficient 0
    Polynomial q = make_polynomial({{1, 0}, {0, 0}, {1, 0}});
    DiskHypothesisReport h1 = check_disk_hypothesis(q, 1.0);
    BoundBreakdown f1 = theorem3_bound(q, 1.0, 2.0, 0.5, Theorem3Variant::DerivationConsistent, h1);
    BoundBreakdown p1 = theorem3_bound(q, 1.0, 2.0, 0.5, Theorem3Variant::Printed, h1);
    CHECK(f1.total == p1.total);
    CHECK(f1.terms.at("min_term") == 0.0);
}

TEST_CASE("reduction identities on random parameter tuples") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = rng.uniform_int(2, 12);
        double M = rng.uniform(0.1, 10.0);
        double an = rng.uniform(0.1, 3.0);
        double a0 = rng.uniform(0.0, an);  // zeros in the unit disk imply |a0| <= |an|
        double a1 = rng.uniform(0.0, 3.0);
        double an1 = rng.uniform(0.0, 3.0);
        double k = rng.uniform(1.0, 3.0);
        double m = rng.uniform(0.0, std::pow(k, n) * an);
        double l = rng.uniform(0.0, 0.999);

        double t1_at_1 = theorem1_terms(n, 1.0, M, a0, a1, an1, an).total;
        CHECK(t1_at_1 == Catch::Approx(dubinin_bound(n, an, a0, M)).epsilon(1e-12));

        double kn_a0 = rng.uniform(0.0, std::pow(k, n) * an);
        double t2_l0 = theorem2_terms(n, k, M, m, 0.0, kn_a0, a1, an1, an).total;
        double t1 = theorem1_terms(n, k, M, kn_a0, a1, an1, an).total;
        CHECK(t2_l0 == Catch::Approx(t1).epsilon(1e-12));

        double m1 = rng.uniform(0.0, an);
        double t2_k1 = theorem2_terms(n, 1.0, M, m1, l, a0, a1, an1, an).total;
        double c1 = corollary1_terms(n, M, m1, l, a0, an).total;
        CHECK(t2_k1 == Catch::Approx(c1).epsilon(1e-12).margin(1e-12));

        CHECK(govil_bound(n, 1.0, M) == Catch::Approx(turan_bound(n, M)).epsilon(1e-12));

        for (Theorem3Variant v : {Theorem3Variant::Printed, Theorem3Variant::DerivationConsistent})
            CHECK(theorem3_terms(n, 1.0, M, m1, v, a0, a1, an).terms.at("min_term") == 0.0);
    }
}

TEST_CASE("theorem 1 refines Govil whenever k^n |an| >= |a0|") {
    SplitMix64 rng(32);
    for (int trial = 0; trial < 500; ++trial) {
        int n = rng.uniform_int(2, 10);
        double k = rng.uniform(1.0, 3.0);
        double an = rng.uniform(0.1, 3.0);
        double a0 = rng.uniform(0.0, std::pow(k, n) * an);
        double M = rng.uniform(0.1, 10.0);
        double t1 = theorem1_terms(n, k, M, a0, rng.uniform(0.0, 2.0), rng.uniform(0.0, 2.0), an)
                        .total;
        CHECK(t1 >= govil_bound(n, k, M) - 1e-9);
    }
}

TEST_CASE("breakdown terms are non-negative under the hypothesis") {
    SplitMix64 rng(33);
    for (int trial = 0; trial < 500; ++trial) {
        int n = rng.uniform_int(2, 10);
        double k = rng.uniform(1.0, 3.0);
        double an = rng.uniform(0.1, 3.0);
        double a0 = rng.uniform(0.0, std::pow(k, n) * an);
        double M = rng.uniform(0.1, 10.0);
        BoundBreakdown b =
            theorem1_terms(n, k, M, a0, rng.uniform(0.0, 2.0), rng.uniform(0.0, 2.0), an);
        for (const auto& [name, v] : b.terms) CHECK(v >= 0.0);
    }
}

TEST_CASE("Erdos-Lax upper bound cases") {
    // P = z + 1: max|P'| = 1, M = 2
    CHECK(erdos_lax_upper(1, 2.0) == 1.0);
    // P = z^2 + 1: max|P'| = 2, M = 2
    CHECK(erdos_lax_upper(2, 2.0) == 2.0);
}

TEST_CASE("growth bound for arbitrary polynomials") {
    // P = z^2, R = 2: bound 4 equals the max
    Polynomial sq = make_polynomial({{0, 0}, {0, 0}, {1, 0}});
    CHECK(frr_growth_upper(sq, 2.0, 1.0) == Catch::Approx(4.0));

    // P = z + 2, R = 3: 3*3 - 2*2 = 5 = max on |z|=3
    Polynomial lin = make_polynomial({{2, 0}, {1, 0}});
    CHECK(frr_growth_upper(lin, 3.0, 3.0) == Catch::Approx(5.0));
    CHECK(max_modulus(lin, 3.0).value == Catch::Approx(5.0));

    SplitMix64 rng(34);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Complex> c;
        int n = rng.uniform_int(1, 8);
        for (int j = 0; j <= n; ++j) c.emplace_back(rng.uniform(-2, 2), rng.uniform(-2, 2));
        c.back() += Complex{3, 0};
        Polynomial p(c);
        double R = rng.uniform(1.0, 3.0);
        CircleExtremum M = max_modulus(p, 1.0);
        CircleExtremum at_r = max_modulus(p, R);
        double bound = frr_growth_upper(p, R, M.value);
        CHECK(bound >= at_r.value - at_r.certified_error -
                           std::pow(R, n) * M.certified_error - 1e-9);
    }
}

TEST_CASE("growth bound for non-vanishing polynomials") {
    // P = z^2 + 1, R = 2, alpha = 0: (5/2)*2 = 5 = max on |z|=2
    Polynomial p = make_polynomial({{1, 0}, {0, 0}, {1, 0}});
    CHECK(growth_upper_nonvanishing(p, {2.0, 0.0}, 2.0, 0.0) == Catch::Approx(5.0));
    CHECK(max_modulus(p, 2.0).value == Catch::Approx(5.0));

    // alpha = 0, R = 1 reduces to M
    CHECK(growth_upper_nonvanishing(p, {1.0, 0.0}, 2.0, 0.0) == 2.0);

    CHECK_THROWS_AS(growth_upper_nonvanishing(p, {2.0, 1.5}, 2.0, 0.0), AlphaOutOfRange);
    Polynomial lin = make_polynomial({{2, 0}, {1, 0}});
    CHECK_THROWS_AS(growth_upper_nonvanishing(lin, {2.0, 0.0}, 3.0, 1.0), DegreeBelowTwo);

    // fuzzed polynomials with zeros planted outside the unit disk
    SplitMix64 rng(35);
    for (int trial = 0; trial < 50; ++trial) {
        int n = rng.uniform_int(2, 8);
        std::vector<Complex> zeros;
        for (int i = 0; i < n; ++i)
            zeros.push_back(std::polar(rng.uniform(1.0, 3.0), rng.uniform(0.0, 6.28)));
        Polynomial q = from_zeros({1, 0}, zeros);
        double R = rng.uniform(1.0, 2.5);
        CircleExtremum M = max_modulus(q, 1.0);
        CircleExtremum m1 = min_modulus(q, 1.0);
        CircleExtremum at_r = max_modulus(q, R);
        for (double alpha : {0.0, 0.5, 1.0}) {
            double bound = growth_upper_nonvanishing(q, {R, alpha}, M.value, m1.value);
            double slack = at_r.certified_error + std::pow(R, n) * M.certified_error +
                           std::pow(R, n) * m1.certified_error + 1e-9;
            CHECK(bound >= at_r.value - slack);
        }
    }
}
