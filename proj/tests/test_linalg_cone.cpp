#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "riskgeom/cone.hpp"
#include "riskgeom/errors.hpp"
#include "riskgeom/linalg.hpp"
#include "riskgeom/region.hpp"

using riskgeom::ConfigError;
using riskgeom::Matrix;
using riskgeom::RieszCone;
using riskgeom::Rng;
using riskgeom::Vec;

TEST_CASE("inverse round trip on random well-conditioned matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 1 + rng.below(4);
        Matrix a(d);
        for (std::size_t i = 0; i < d; ++i) {
            double off = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                if (i == j) continue;
                a(i, j) = rng.uniform(-0.4, 0.4);
                off += std::abs(a(i, j));
            }
            a(i, i) = off + rng.uniform(0.5, 2.0);
        }
        const Matrix inv = riskgeom::invert(a);
        const Matrix id = riskgeom::matmul(a, inv);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                CHECK(std::abs(id(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-10);
    }
}

TEST_CASE("singular matrix is rejected") {
    Matrix a(2);
    a(0, 0) = 1.0;
    a(0, 1) = 2.0;
    a(1, 0) = 2.0;
    a(1, 1) = 4.0;
    CHECK_THROWS_AS(riskgeom::invert(a), ConfigError);
}

TEST_CASE("cone validation rejects negative entries and near-singular transfers") {
    Matrix neg = Matrix::identity(2);
    neg(0, 1) = -0.5;
    CHECK_THROWS_AS(RieszCone{neg}, ConfigError);

    Matrix sing(2);
    sing(0, 0) = 1.0;
    sing(0, 1) = 1.0;
    sing(1, 0) = 1.0;
    sing(1, 1) = 1.0;
    CHECK_THROWS_AS(RieszCone{sing}, ConfigError);
}

TEST_CASE("cone membership and order agree with the transfer image") {
    // K = A^{-1} R+^d, so x in K  <=>  A x >= 0.
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 1 + rng.below(3);
        const RieszCone cone = oracles::random_cone(rng, d);
        Vec z(d);
        for (double& v : z) v = rng.uniform(-1.0, 1.0);
        const Vec x = riskgeom::matvec(cone.transfer_inverse(), z);
        bool nonneg = true;
        for (double v : z) nonneg = nonneg && v >= 1e-10;
        if (nonneg) CHECK(cone.contains(x));
        bool has_neg = false;
        for (double v : z) has_neg = has_neg || v < -1e-8;
        if (has_neg) CHECK_FALSE(cone.contains(x));

        // x <=_K x + k for any cone element k.
        Vec k(d);
        for (double& v : k) v = rng.uniform(0.0, 1.0);
        const Vec kk = riskgeom::matvec(cone.transfer_inverse(), k);
        Vec y(d);
        for (std::size_t i = 0; i < d; ++i) y[i] = x[i] + kk[i];
        CHECK(cone.leq(x, y));
    }
}

TEST_CASE("dual cone test matches explicit generator combinations") {
    Rng rng(13);
    const RieszCone cone = oracles::random_cone(rng, 3);
    // Nonnegative combinations of the rows of A lie in K*.
    const auto gens = cone.dual_generators();
    Vec u(3, 0.0);
    for (const Vec& g : gens) {
        const double c = rng.uniform(0.0, 2.0);
        for (std::size_t j = 0; j < 3; ++j) u[j] += c * g[j];
    }
    CHECK(cone.dual_contains(u));
    // The negation of a generator is not in K* for a pointed nontrivial cone.
    Vec v(3);
    for (std::size_t j = 0; j < 3; ++j) v[j] = -gens[0][j];
    CHECK_FALSE(cone.dual_contains(v));
}

TEST_CASE("k-infimum of a point cloud region equals the exact lattice infimum") {
    // For the convex hull of finitely many points, inf over the hull of
    // <a_i, x> is attained at a vertex, so the K-infimum can be computed by
    // direct enumeration in the A-image.
    Rng rng(14);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t d = 2 + rng.below(2);
        const RieszCone cone = oracles::random_cone(rng, d);
        const auto grid = riskgeom::DirectionGrid::make_default(d, cone);
        std::vector<Vec> pts(3 + rng.below(10), Vec(d));
        for (auto& p : pts)
            for (double& v : p) v = rng.uniform(-3.0, 3.0);
        const auto region = riskgeom::SupportRegion::from_points(grid, pts);

        const Vec inf = riskgeom::k_infimum(region, cone);
        // Oracle: componentwise min of A p over the vertices, mapped back.
        Vec mins(d, std::numeric_limits<double>::infinity());
        for (const auto& p : pts) {
            const Vec ap = riskgeom::matvec(cone.transfer(), p);
            for (std::size_t i = 0; i < d; ++i) mins[i] = std::min(mins[i], ap[i]);
        }
        const Vec expect = riskgeom::matvec(cone.transfer_inverse(), mins);
        for (std::size_t i = 0; i < d; ++i) CHECK(std::abs(inf[i] - expect[i]) <= 1e-9);

        // The infimum is a true lower bound of every vertex.
        for (const auto& p : pts) CHECK(cone.leq(inf, p));
    }
}
