#pragma once

#include <variant>

#include "riskgeom/empirical.hpp"
#include "riskgeom/region.hpp"
#include "riskgeom/univariate.hpp"

// Depth-trimmed regions of an empirical law.  Zonoid and expected-convex-hull
// regions are compact and carried as support functions on a shared grid; the
// monotone halfspace region is a K-upper (unbounded) set and stays in
// constraint form.

namespace riskgeom {

enum class RegionFamily { Zonoid, Halfspace, Ech };

// Trim level: a real alpha in (0,1] or, for the expected-convex-hull family,
// an integer sample count n >= 1 (alpha = 1/n).
using TrimLevel = std::variant<double, int>;

struct RegionSpec {
    RegionFamily family = RegionFamily::Zonoid;
    TrimLevel level = 1.0;
    RieszCone cone = RieszCone::identity(1);
    std::vector<Vec> extra_dirs;  // halfspace only; must lie in K*
};

// h(ZD^alpha(X), u): optimal cap-constrained reweighting of <X,u>, computed by
// the greedy fractional tail mean (no LP involved).
double zonoid_support(const EmpiricalDist& dist, double alpha, std::span<const double> u);

// h(CD^{1/n}(X), u) = E max of n iid copies of <X,u> (integer path).
double ech_support(const EmpiricalDist& dist, int n, std::span<const double> u);

// Real-level extension via the spectral minimum on the reflected projection.
double ech_support(const EmpiricalDist& dist, double alpha, std::span<const double> u);

// Monotone halfspace region at level alpha in (0,1): one constraint
// <u,x> >= q(u) per direction, q(u) the strict alpha-quantile of <X,u>.
// Directions are the normalized dual generators of the cone plus any extras,
// each of which must lie in K*.
ConstraintRegion halfspace_constraints(const EmpiricalDist& dist, double alpha,
                                       const RieszCone& cone,
                                       const std::vector<Vec>& extra_dirs = {});

using Region = std::variant<SupportRegion, ConstraintRegion>;

// Evaluate the family named by the spec on the given grid (support families)
// or on the cone's dual directions (halfspace).
Region build_region(const EmpiricalDist& dist, const RegionSpec& spec, const GridPtr& grid);

}  // namespace riskgeom
