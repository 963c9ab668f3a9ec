#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polyverify/circle_extremum.hpp"
#include "polyverify/rng.hpp"
#include "polyverify/zero_locator.hpp"

using namespace polyverify;

namespace {

// Greedy multiset match between found and planted zeros.
double match_distance(std::vector<Complex> found, const std::vector<Complex>& planted) {
    double worst = 0.0;
    for (Complex target : planted) {
        auto best = std::min_element(found.begin(), found.end(), [&](Complex a, Complex b) {
            return std::abs(a - target) < std::abs(b - target);
        });
        worst = std::max(worst, std::abs(*best - target));
        found.erase(best);
    }
    return worst;
}

std::vector<Complex> well_separated_zeros(SplitMix64& rng, int n, double radius) {
    std::vector<Complex> zeros;
    while (static_cast<int>(zeros.size()) < n) {
        Complex cand = std::polar(rng.uniform(0.1, radius),
                                  rng.uniform(0.0, 2.0 * std::numbers::pi));
        bool ok = true;
        for (Complex z : zeros)
            if (std::abs(z - cand) < 0.25) ok = false;
        if (ok) zeros.push_back(cand);
    }
    return zeros;
}

}  // namespace

TEST_CASE("roots of z^2 - 1") {
    RootSet r = find_zeros(make_polynomial({{-1, 0}, {0, 0}, {1, 0}}));
    REQUIRE(r.zeros.size() == 2);
    CHECK(match_distance(r.zeros, {{1, 0}, {-1, 0}}) < 1e-10);
}

TEST_CASE("roots of z^3 + 8 all have modulus 2") {
    RootSet r = find_zeros(make_polynomial({{8, 0}, {0, 0}, {0, 0}, {1, 0}}));
    REQUIRE(r.zeros.size() == 3);
    for (Complex z : r.zeros) CHECK(std::abs(z) == Catch::Approx(2.0).epsilon(1e-10));
    for (double res : r.residuals) CHECK(res <= 1e-10);
}

TEST_CASE("planted well-separated zeros are recovered") {
    SplitMix64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform_int(2, 10);
        std::vector<Complex> planted = well_separated_zeros(rng, n, 2.0);
        Polynomial p = from_zeros(std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 6.28)),
                                  planted);
        RootSet r = find_zeros(p);
        CHECK(match_distance(r.zeros, planted) < 1e-7);
    }
}

TEST_CASE("accepted zero sets reproduce the coefficients") {
    SplitMix64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Complex> c;
        int n = rng.uniform_int(2, 10);
        for (int j = 0; j <= n; ++j) c.emplace_back(rng.uniform(-2, 2), rng.uniform(-2, 2));
        c.back() += Complex{3, 0};
        Polynomial p(c);
        RootSet r = find_zeros(p);
        Polynomial rec = from_zeros(p.leading(), r.zeros);
        double max_mod = 0.0;
        for (Complex cc : p.coeffs()) max_mod = std::max(max_mod, std::abs(cc));
        REQUIRE(rec.degree() == p.degree());
        for (int j = 0; j <= n; ++j)
            CHECK(std::abs(rec.coeff(j) - p.coeff(j)) <= 1e-8 * max_mod);
    }
}

TEST_CASE("find_zeros is deterministic") {
    Polynomial p = make_polynomial({{1, 2}, {-3, 0.5}, {0, 0}, {2, -1}, {1, 0}});
    RootSet a = find_zeros(p);
    RootSet b = find_zeros(p);
    REQUIRE(a.zeros.size() == b.zeros.size());
    for (std::size_t i = 0; i < a.zeros.size(); ++i) CHECK(a.zeros[i] == b.zeros[i]);
}

TEST_CASE("disk hypothesis boundary and failure cases") {
    Polynomial p = make_polynomial({{8, 0}, {0, 0}, {0, 0}, {1, 0}});
    DiskHypothesisReport at2 = check_disk_hypothesis(p, 2.0);
    CHECK(at2.pass);
    CHECK(std::abs(at2.slack) < 1e-9);
    CHECK(at2.zeros.size() == 3);

    DiskHypothesisReport at15 = check_disk_hypothesis(p, 1.5);
    CHECK_FALSE(at15.pass);

    CHECK_THROWS_AS(check_disk_hypothesis(p, 0.5), RadiusBelowOne);
}

TEST_CASE("disk hypothesis passes for planted interior zeros") {
    std::vector<Complex> zeros{{0.5, 0}, {0, 0.25}, {-0.7, 0}};
    Polynomial p = from_zeros({1, 0}, zeros);
    DiskHypothesisReport r = check_disk_hypothesis(p, 1.0);
    CHECK(r.pass);
    CHECK(r.max_zero_modulus == Catch::Approx(0.7).margin(1e-9));
}

TEST_CASE("Gauss-Lucas: critical points stay within the zero radius") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform_int(2, 10);
        std::vector<Complex> zeros;
        for (int i = 0; i < n; ++i)
            zeros.push_back(std::polar(rng.uniform(0.0, 2.0),
                                       rng.uniform(0.0, 2.0 * std::numbers::pi)));
        Polynomial p = from_zeros({1, 0}, zeros);
        double zero_radius = 0.0;
        for (Complex z : zeros) zero_radius = std::max(zero_radius, std::abs(z));
        RootSet crit = find_zeros(derivative(p));
        for (Complex z : crit.zeros) CHECK(std::abs(z) <= zero_radius + 1e-7);
    }
}

TEST_CASE("Jensen floor: min modulus on |z|=k stays below k^n |an|") {
    SplitMix64 rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        int n = rng.uniform_int(2, 8);
        double k = rng.uniform(1.0, 2.5);
        std::vector<Complex> zeros;
        for (int i = 0; i < n; ++i)
            zeros.push_back(std::polar(k * std::sqrt(rng.uniform(0.0, 0.98)),
                                       rng.uniform(0.0, 2.0 * std::numbers::pi)));
        double lead = rng.uniform(0.5, 2.0);
        Polynomial p = from_zeros({lead, 0}, zeros);
        double m = min_modulus(p, k).value;
        CHECK(m <= std::pow(k, n) * lead + 1e-9);
    }
}
