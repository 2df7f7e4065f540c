#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "riskgeom/errors.hpp"
#include "riskgeom/univariate.hpp"

using riskgeom::ConfigError;
using riskgeom::EmpiricalDist;
using riskgeom::Rng;

// The greedy fractional tail mean claims to solve
//   max E[V l]  over  0 <= l <= 1/alpha, E[l] = 1.
// The oracle enumerates every capped subset + fractional atom, so agreement
// certifies optimality rather than restating the algorithm.
TEST_CASE("tail mean equals the subset-enumeration optimum") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const auto dist = oracles::random_cloud(rng, 1, 12);
        const double alpha = rng.uniform(0.05, 1.0);
        const double greedy =
            riskgeom::tail_mean(dist.scalar_values(), dist.weights(), alpha);
        const double oracle = oracles::capped_max(dist.scalar_values(), dist.weights(), alpha);
        CHECK(greedy == doctest::Approx(oracle).epsilon(1e-12));
    }
}

TEST_CASE("expected shortfall pins to hand values and the enumeration oracle") {
    const EmpiricalDist d(std::vector<riskgeom::Vec>{{-2.0}, {4.0}});  // equal halves
    CHECK(riskgeom::es(d, 0.5).value == doctest::Approx(2.0));
    CHECK(riskgeom::es(d, 0.25).value == doctest::Approx(2.0));
    CHECK(riskgeom::es(d, 0.75).value == doctest::Approx(0.0));
    CHECK(riskgeom::es(d, 1.0).value == doctest::Approx(-1.0));  // -E X

    Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const auto dist = oracles::random_cloud(rng, 1, 12);
        const double alpha = rng.uniform(0.05, 1.0);
        std::vector<double> neg(dist.size());
        for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -dist.scalar_values()[i];
        CHECK(riskgeom::es(dist, alpha).value ==
              doctest::Approx(oracles::capped_max(neg, dist.weights(), alpha)).epsilon(1e-12));
    }
}

TEST_CASE("value at risk is the negated strict quantile") {
    const EmpiricalDist d({{1.0}, {2.0}, {3.0}}, {1.0, 1.0, 2.0});
    CHECK(riskgeom::var(d, 0.25).value == -2.0);  // F(1) = 0.25 is not > 0.25
    CHECK(riskgeom::var(d, 0.2).value == -1.0);
    CHECK(riskgeom::var(d, 0.6).value == -3.0);
    CHECK_THROWS_AS(riskgeom::var(d, 1.0), ConfigError);
    CHECK_THROWS_AS(riskgeom::var(d, 0.0), ConfigError);
}

TEST_CASE("expected extremes match direct tuple enumeration") {
    Rng rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        const auto dist = oracles::random_cloud(rng, 1, 8);
        for (int n = 1; n <= 3; ++n) {
            const double emin =
                oracles::tuple_extreme(dist.scalar_values(), dist.weights(), n, true);
            const double emax =
                oracles::tuple_extreme(dist.scalar_values(), dist.weights(), n, false);
            CHECK(riskgeom::em(dist, n).value == doctest::Approx(-emin).epsilon(1e-12));
            CHECK(riskgeom::power_max(dist.scalar_values(), dist.weights(), n) ==
                  doctest::Approx(emax).epsilon(1e-12));
        }
    }
}

TEST_CASE("em at one copy is the negated mean") {
    Rng rng(44);
    const auto dist = oracles::random_cloud(rng, 1, 20);
    CHECK(riskgeom::em(dist, 1).value == doctest::Approx(-dist.mean()[0]).epsilon(1e-13));
}

TEST_CASE("spectral level 1/n reproduces the integer expected minimum") {
    Rng rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        const auto dist = oracles::random_cloud(rng, 1, 30);
        for (int n = 1; n <= 6; ++n) {
            const double a = riskgeom::em_alpha(dist, 1.0 / n).value;
            const double b = riskgeom::em(dist, n).value;
            CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)));
        }
    }
}

TEST_CASE("entropic risk: closed form on two atoms, monotone in gamma limitwise") {
    const EmpiricalDist d(std::vector<riskgeom::Vec>{{0.0}, {-1.0}});
    const double expect = std::log(0.5 * (1.0 + std::exp(1.0)));
    CHECK(riskgeom::entropic(d, 1.0).value == doctest::Approx(expect).epsilon(1e-14));

    // gamma -> 0 approaches the worst case -min X; gamma large approaches -E X.
    CHECK(riskgeom::entropic(d, 1e-3).value == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(riskgeom::entropic(d, 1e4).value == doctest::Approx(0.5).epsilon(1e-2));
    CHECK_THROWS_AS(riskgeom::entropic(d, 0.0), ConfigError);

    // The max-shift must keep extreme atoms finite.
    const EmpiricalDist wild(std::vector<riskgeom::Vec>{{-4000.0}, {3000.0}});
    CHECK(std::isfinite(riskgeom::entropic(wild, 1.0).value));
    CHECK(riskgeom::entropic(wild, 1.0).value == doctest::Approx(4000.0 - std::log(2.0)));
}

TEST_CASE("cd interval endpoints coincide with the directional supports") {
    Rng rng(46);
    for (int trial = 0; trial < 20; ++trial) {
        const auto dist = oracles::random_cloud(rng, 1, 30);
        const double alpha = rng.uniform(0.1, 1.0);
        const auto iv = riskgeom::cd_interval(dist, alpha);
        CHECK(iv.lo <= iv.hi + 1e-12);
        CHECK(iv.lo == -riskgeom::em_alpha(dist, alpha).value);
    }
    const EmpiricalDist d(std::vector<riskgeom::Vec>{{1.0}, {5.0}});
    const auto whole = riskgeom::cd_interval(d, 1.0);
    CHECK(whole.lo == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(whole.hi == doctest::Approx(3.0).epsilon(1e-14));
    CHECK_THROWS_AS(riskgeom::cd_interval(d, 1.5), ConfigError);
}

TEST_CASE("level guards reject out-of-range trim levels") {
    const EmpiricalDist d(std::vector<riskgeom::Vec>{{1.0}, {2.0}});
    CHECK_THROWS_AS(riskgeom::es(d, 0.0), ConfigError);
    CHECK_THROWS_AS(riskgeom::es(d, 1.0 + 1e-9), ConfigError);
    CHECK_THROWS_AS(riskgeom::em(d, 0), ConfigError);
    CHECK_THROWS_AS(riskgeom::em_alpha(d, 0.0), ConfigError);
    CHECK_THROWS_AS(riskgeom::tail_mean({}, {}, 0.5), ConfigError);
}
