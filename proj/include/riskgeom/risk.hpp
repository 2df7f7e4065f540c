#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "riskgeom/depth.hpp"

// Cone-ordered vector risks derived from depth-trimmed regions, plus the
// construction toolbox (worst conditioning, homogenisation, translations,
// re-centring, minimisation, linear conjugation, monotone transforms).

namespace riskgeom {

// Canonical form of a set-valued risk x* + K: the measure itself is the
// K-upper set spanned by `point`; acceptability of the position means
// -point in K.
struct RiskPoint {
    Vec point;
    RieszCone cone;
};

// x* = -(K-infimum of the region).  The region grid must carry the cone's
// negated dual directions.
RiskPoint vector_risk_from_region(const SupportRegion& region, const RieszCone& cone);

// Halfspace route: the region's tight corner solves A x = (q_i |a_i|); the
// risk point is its negation.  Every dual generator direction must be stored.
RiskPoint vector_risk_from_region(const ConstraintRegion& region);

RiskPoint vector_risk_from_region(const Region& region, const RieszCone& cone);

// Closed-form zonoid route: x* = A^{-1} (ES_alpha((A X)_i))_i.  Agrees with
// the region route on any grid carrying the cone directions.
RiskPoint srisk_zonoid_direct(const EmpiricalDist& dist, double alpha, const RieszCone& cone);

// Convenience: build the region named by the spec and derive its risk point.
RiskPoint region_vector_risk(const EmpiricalDist& dist, const RegionSpec& spec,
                             const GridPtr& grid);

// A value together with an exactness marker: grid suprema and local searches
// report honest lower bounds, closed forms report exact values.
struct BoundedValue {
    double value = 0.0;
    bool exact = false;
};

// Law-invariant scalar risk functional with enough structure for the
// toolbox to dispatch closed forms where they exist.
struct ScalarRisk {
    enum class Kind { NegExpectation, ExpectedShortfall, ValueAtRisk, ExpectedMinimum, Entropic, Custom };

    Kind kind = Kind::Custom;
    double level = 0.0;  // alpha for es/var, gamma for entropic
    int n = 0;           // em only
    std::string name;
    std::function<double(const EmpiricalDist&)> eval;

    double operator()(const EmpiricalDist& dist) const { return eval(dist); }

    static ScalarRisk neg_expectation();
    static ScalarRisk expected_shortfall(double alpha);
    static ScalarRisk value_at_risk(double alpha);
    static ScalarRisk expected_minimum(int n);
    static ScalarRisk entropic_risk(double gamma);
    static ScalarRisk custom(std::string name, std::function<double(const EmpiricalDist&)> fn);
};

struct SearchOptions {
    int restarts = 8;
    int max_rounds = 64;
    std::uint64_t seed = 0x5eed;
};

// Worst conditioning over laws with relative density capped at 1/alpha.
// Dispatches exact closed forms: (-E)_alpha = es_alpha,
// (es_beta)_alpha = es_{alpha beta}, (var_beta)_alpha = var_{alpha beta}.
// Everything else runs a seeded local search over vertex densities and is
// flagged as a lower bound.
BoundedValue worst_conditioning(const ScalarRisk& rho, const EmpiricalDist& dist, double alpha,
                                const SearchOptions& opts = {});

// Log-spaced homogenisation grid 10^-3 .. 10^6 (quarter-decade steps).
std::vector<double> default_t_grid();

// sup_t rho(tX)/t over the grid (lower bound unless rho is already
// positively homogeneous).
BoundedValue homogenise(const ScalarRisk& rho, const EmpiricalDist& dist,
                        std::span<const double> t_grid = {});

// sup_z (rho(X + z) + z) over the grid; univariate.
BoundedValue translate_construct(const ScalarRisk& rho, const EmpiricalDist& dist,
                                 std::span<const double> z_grid);

using VectorRisk = std::function<RiskPoint(const EmpiricalDist&)>;

// rho_o(X) = rho(X - EX) - EX in canonical form.
RiskPoint recenter(const VectorRisk& rho, const EmpiricalDist& dist);

// Pointwise infimum in the reversed scalar order = max of the risk numbers.
RiskValue minimise(std::span<const ScalarRisk> rhos, const EmpiricalDist& dist);

// <x*, u> for u in K*.
RiskValue scalarize(const RiskPoint& rp, std::span<const double> u);

// rho~(X) = A^{-1} rho(A X) for nonsingular nonnegative A; the result's cone
// transfer is A_K A.
RiskPoint linear_conjugate(const VectorRisk& rho, const EmpiricalDist& dist, const Matrix& a);

// Strictly decreasing continuous bijection with explicit inverse.
struct DecreasingBijection {
    std::function<double(double)> f;
    std::function<double(double)> f_inv;
};

// -f^{-1}(E f(X)); f's monotonicity is spot-checked on the atoms.
RiskValue monotone_function_risk(const EmpiricalDist& dist, const DecreasingBijection& bij);

// Position is acceptable when -x* lies in the cone.
bool is_acceptable(const RiskPoint& rp);

}  // namespace riskgeom
