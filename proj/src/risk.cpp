#include "riskgeom/risk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "riskgeom/errors.hpp"
#include "riskgeom/rng.hpp"

namespace riskgeom {

RiskPoint vector_risk_from_region(const SupportRegion& region, const RieszCone& cone) {
    Vec inf = k_infimum(region, cone);
    for (double& v : inf) v = -v;
    return RiskPoint{std::move(inf), cone};
}

RiskPoint vector_risk_from_region(const ConstraintRegion& region) {
    const RieszCone& cone = region.cone();
    const std::size_t d = cone.dim();
    // Tight corner: A x = (q(a_i/|a_i|) |a_i|)_i, then negate.
    Vec rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec row = cone.transfer().row(i);
        const double len = norm2(row);
        for (double& v : row) v /= len;
        const auto q = region.bound_for(row);
        if (!q) throw ConfigError("vector risk: region lacks a dual generator constraint");
        rhs[i] = *q * len;
    }
    Vec corner = matvec(cone.transfer_inverse(), rhs);
    for (double& v : corner) v = -v;
    return RiskPoint{std::move(corner), cone};
}

RiskPoint vector_risk_from_region(const Region& region, const RieszCone& cone) {
    if (std::holds_alternative<SupportRegion>(region))
        return vector_risk_from_region(std::get<SupportRegion>(region), cone);
    return vector_risk_from_region(std::get<ConstraintRegion>(region));
}

RiskPoint srisk_zonoid_direct(const EmpiricalDist& dist, double alpha, const RieszCone& cone) {
    if (cone.dim() != dist.dim()) throw ConfigError("srisk_zonoid_direct: cone dimension mismatch");
    const EmpiricalDist mapped = linear_transform(dist, cone.transfer());
    Vec marginal_es(dist.dim());
    Vec basis(dist.dim(), 0.0);
    for (std::size_t i = 0; i < dist.dim(); ++i) {
        basis[i] = 1.0;
        marginal_es[i] = es(mapped.project(basis), alpha).value;
        basis[i] = 0.0;
    }
    return RiskPoint{matvec(cone.transfer_inverse(), marginal_es), cone};
}

RiskPoint region_vector_risk(const EmpiricalDist& dist, const RegionSpec& spec,
                             const GridPtr& grid) {
    return vector_risk_from_region(build_region(dist, spec, grid), spec.cone);
}

// --- scalar risk descriptors -------------------------------------------------

ScalarRisk ScalarRisk::neg_expectation() {
    return {Kind::NegExpectation, 0.0, 0, "neg_expectation",
            [](const EmpiricalDist& d) { return -d.mean()[0]; }};
}

ScalarRisk ScalarRisk::expected_shortfall(double alpha) {
    return {Kind::ExpectedShortfall, alpha, 0, "es",
            [alpha](const EmpiricalDist& d) { return es(d, alpha).value; }};
}

ScalarRisk ScalarRisk::value_at_risk(double alpha) {
    return {Kind::ValueAtRisk, alpha, 0, "var",
            [alpha](const EmpiricalDist& d) { return var(d, alpha).value; }};
}

ScalarRisk ScalarRisk::expected_minimum(int n) {
    return {Kind::ExpectedMinimum, 0.0, n, "em",
            [n](const EmpiricalDist& d) { return em(d, n).value; }};
}

ScalarRisk ScalarRisk::entropic_risk(double gamma) {
    return {Kind::Entropic, gamma, 0, "entropic",
            [gamma](const EmpiricalDist& d) { return entropic(d, gamma).value; }};
}

ScalarRisk ScalarRisk::custom(std::string name, std::function<double(const EmpiricalDist&)> fn) {
    return {Kind::Custom, 0.0, 0, std::move(name), std::move(fn)};
}

// --- worst conditioning --------------------------------------------------------

namespace {

// Vertex density induced by an index order: cap the leading atoms until mass
// alpha is spent, one fractional boundary atom, zeros elsewhere.
Density density_from_order(const EmpiricalDist& dist, const std::vector<std::size_t>& order,
                           double alpha) {
    Density den;
    den.cap = 1.0 / alpha;
    den.l.assign(dist.size(), 0.0);
    double remaining = alpha;
    for (std::size_t idx : order) {
        if (remaining <= 0.0) break;
        const double w = dist.weights()[idx];
        const double take = std::min(w, remaining);
        den.l[idx] = take / (w * alpha);
        remaining -= take;
    }
    return den;
}

double eval_order(const ScalarRisk& rho, const EmpiricalDist& dist,
                  const std::vector<std::size_t>& order, double alpha) {
    return rho(reweight(dist, density_from_order(dist, order, alpha)));
}

// Hill climbing over index orders: swap an atom inside the spent prefix with
// one outside it, keep improvements, stop at a local maximum.
double climb(const ScalarRisk& rho, const EmpiricalDist& dist, std::vector<std::size_t> order,
             double alpha, int max_rounds) {
    const std::size_t m = dist.size();
    double best = eval_order(rho, dist, order, alpha);
    for (int round = 0; round < max_rounds; ++round) {
        // Prefix length: atoms that received any mass.
        double remaining = alpha;
        std::size_t prefix = 0;
        while (prefix < m && remaining > 0.0) {
            remaining -= dist.weights()[order[prefix]];
            ++prefix;
        }
        bool improved = false;
        for (std::size_t i = 0; i < prefix && !improved; ++i) {
            for (std::size_t j = prefix; j < m && !improved; ++j) {
                std::swap(order[i], order[j]);
                const double v = eval_order(rho, dist, order, alpha);
                if (v > best + 1e-15) {
                    best = v;
                    improved = true;
                } else {
                    std::swap(order[i], order[j]);
                }
            }
        }
        if (!improved) break;
    }
    return best;
}

}  // namespace

BoundedValue worst_conditioning(const ScalarRisk& rho, const EmpiricalDist& dist, double alpha,
                                const SearchOptions& opts) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ConfigError("worst_conditioning: alpha out of range");
    if (dist.dim() != 1) throw ConfigError("worst_conditioning: distribution is not univariate");

    // Closed forms, exact on atoms: capping the density at 1/alpha and
    // spending the budget on the lower tail realizes F_l = min(F/alpha, 1),
    // which composes the levels for -E, es and var.
    switch (rho.kind) {
        case ScalarRisk::Kind::NegExpectation:
            return {es(dist, alpha).value, true};
        case ScalarRisk::Kind::ExpectedShortfall:
            return {es(dist, alpha * rho.level).value, true};
        case ScalarRisk::Kind::ValueAtRisk:
            return {var(dist, alpha * rho.level).value, true};
        default:
            break;
    }

    // Generic path: seeded local search over vertex densities.  The result
    // certifies only a lower bound on the supremum.
    const auto values = dist.scalar_values();
    std::vector<std::size_t> order(dist.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    // The lower tail is the exact answer for any law-monotone objective, so
    // it is always one of the starts.
    double best = climb(rho, dist, order, alpha, opts.max_rounds);
    Rng rng(opts.seed);
    for (int r = 0; r < opts.restarts; ++r) {
        std::vector<std::size_t> shuffled = order;
        rng.shuffle(shuffled);
        best = std::max(best, climb(rho, dist, shuffled, alpha, opts.max_rounds));
    }
    return {best, false};
}

// --- homogenisation / translation constructions -------------------------------

std::vector<double> default_t_grid() {
    std::vector<double> grid;
    grid.reserve(37);
    for (int k = 0; k <= 36; ++k) grid.push_back(std::pow(10.0, -3.0 + 0.25 * k));
    return grid;
}

BoundedValue homogenise(const ScalarRisk& rho, const EmpiricalDist& dist,
                        std::span<const double> t_grid) {
    std::vector<double> fallback;
    if (t_grid.empty()) {
        fallback = default_t_grid();
        t_grid = fallback;
    }
    double best = -std::numeric_limits<double>::infinity();
    for (double t : t_grid) {
        if (!(t > 0.0)) throw ConfigError("homogenise: grid points must be positive");
        best = std::max(best, rho(scale(dist, t)) / t);
    }
    if (!std::isfinite(best)) throw ConfigError("homogenise: supremum is not finite");
    return {best, false};
}

BoundedValue translate_construct(const ScalarRisk& rho, const EmpiricalDist& dist,
                                 std::span<const double> z_grid) {
    if (dist.dim() != 1) throw ConfigError("translate_construct: distribution is not univariate");
    if (z_grid.empty()) throw ConfigError("translate_construct: empty grid");
    double best = -std::numeric_limits<double>::infinity();
    for (double z : z_grid) {
        const Vec shift{z};
        best = std::max(best, rho(translate(dist, shift)) + z);
    }
    if (!std::isfinite(best)) throw ConfigError("translate_construct: supremum is not finite");
    return {best, false};
}

// --- re-centring, minimisation, scalarization ---------------------------------

RiskPoint recenter(const VectorRisk& rho, const EmpiricalDist& dist) {
    const Vec mu = dist.mean();
    Vec neg_mu(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) neg_mu[i] = -mu[i];
    RiskPoint rp = rho(translate(dist, neg_mu));
    if (rp.point.size() != mu.size()) throw ConfigError("recenter: risk dimension mismatch");
    for (std::size_t i = 0; i < mu.size(); ++i) rp.point[i] -= mu[i];
    return rp;
}

RiskValue minimise(std::span<const ScalarRisk> rhos, const EmpiricalDist& dist) {
    if (rhos.empty()) throw ConfigError("minimise: no risk measures given");
    double best = -std::numeric_limits<double>::infinity();
    for (const ScalarRisk& rho : rhos) best = std::max(best, rho(dist));
    return RiskValue::of(best);
}

RiskValue scalarize(const RiskPoint& rp, std::span<const double> u) {
    if (u.size() != rp.point.size()) throw ConfigError("scalarize: direction dimension mismatch");
    if (!rp.cone.dual_contains(u))
        throw ConfigError("scalarize: direction outside the dual cone");
    return RiskValue::of(dot(rp.point, u));
}

RiskPoint linear_conjugate(const VectorRisk& rho, const EmpiricalDist& dist, const Matrix& a) {
    if (a.n != dist.dim()) throw ConfigError("linear_conjugate: matrix dimension mismatch");
    for (double v : a.a)
        if (v < 0.0) throw ConfigError("linear_conjugate: matrix entries must be nonnegative");
    const Matrix a_inv = invert(a);
    RiskPoint inner = rho(linear_transform(dist, a));
    Vec mapped = matvec(a_inv, inner.point);
    // The conjugate order cone is A^{-1} K: transfer matrix A_K A.
    RieszCone cone(matmul(inner.cone.transfer(), a));
    return RiskPoint{std::move(mapped), std::move(cone)};
}

RiskValue monotone_function_risk(const EmpiricalDist& dist, const DecreasingBijection& bij) {
    if (dist.dim() != 1) throw ConfigError("monotone_function_risk: distribution is not univariate");
    const auto values = dist.scalar_values();
    const auto weights = dist.weights();

    // Spot-check strict decrease on the sorted distinct atoms.
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    double acc = 0.0;
    double prev_x = 0.0, prev_fx = 0.0;
    bool have_prev = false;
    for (double x : sorted) {
        if (have_prev && x <= prev_x) continue;  // tie
        const double fx = bij.f(x);
        if (!std::isfinite(fx)) throw ConfigError("monotone_function_risk: f is not finite on an atom");
        if (have_prev && fx >= prev_fx - 1e-15 * (1.0 + std::abs(prev_fx)))
            throw ConfigError("monotone_function_risk: f is not strictly decreasing on the atoms");
        prev_x = x;
        prev_fx = fx;
        have_prev = true;
    }
    for (std::size_t i = 0; i < values.size(); ++i) acc += weights[i] * bij.f(values[i]);
    if (!std::isfinite(acc)) throw ConfigError("monotone_function_risk: E f(X) is not finite");
    const double y = bij.f_inv(acc);
    if (!std::isfinite(y) || std::abs(bij.f(y) - acc) > 1e-8 * (1.0 + std::abs(acc)))
        throw ConfigError("monotone_function_risk: E f(X) is outside the range of f");
    return RiskValue::of(-y);
}

bool is_acceptable(const RiskPoint& rp) {
    Vec neg(rp.point.size());
    for (std::size_t i = 0; i < rp.point.size(); ++i) neg[i] = -rp.point[i];
    return rp.cone.contains(neg);
}

}  // namespace riskgeom
