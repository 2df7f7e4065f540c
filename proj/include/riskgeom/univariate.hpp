#pragma once

#include <span>

#include "riskgeom/empirical.hpp"

// Scalar risk measures on univariate empirical laws.  Sign convention:
// positive value = capital that must be added to make the position
// acceptable (so a certain payoff of c carries risk -c).

namespace riskgeom {

struct RiskValue {
    double value = 0.0;

    // Guards the finiteness invariant at every producer.
    static RiskValue of(double v);
};

// --- shared tail primitives ------------------------------------------------
// Both the scalar measures and the depth-trimmed region supports are built
// from these two quantities, so identities that tie a measure to a region
// boundary hold to the last bit rather than to a tolerance.

// Mean of the top alpha probability mass (fractional boundary atom), i.e. the
// optimal value of the cap-constrained reweighting of the values.
double tail_mean(std::span<const double> values, std::span<const double> weights, double alpha);

// E[min] of the spectral family with exponent p >= 1: for a step CDF,
// sum_k y_k [ (1-F_{k-1})^p - (1-F_k)^p ].  p = n integer gives the expected
// minimum of n iid copies.
double spectral_min(std::span<const double> values, std::span<const double> weights, double p);

// E[max] of n iid copies through CDF powers (kept as the separate integer
// path; the real-exponent route goes through spectral_min on the reflection).
double power_max(std::span<const double> values, std::span<const double> weights, int n);

// --- measures ----------------------------------------------------------------

// Value at risk: -inf{ x : P(X <= x) > alpha }, alpha in (0,1).
RiskValue var(const EmpiricalDist& dist, double alpha);

// Expected shortfall: -(1/alpha) integral_0^alpha F^{-1}(t) dt, alpha in (0,1];
// exact on the sorted atoms with a fractional boundary atom; es(.,1) = -E X.
RiskValue es(const EmpiricalDist& dist, double alpha);

// Expected minimum of n >= 1 iid copies: -E min{X_1..X_n}.
RiskValue em(const EmpiricalDist& dist, int n);

// Spectral extension of em to real levels alpha in (0,1]: kernel
// alpha^{-1} (1-t)^{1/alpha - 1}; em_alpha(., 1/n) agrees with em(., n).
RiskValue em_alpha(const EmpiricalDist& dist, double alpha);

// Entropic risk gamma log E exp(-X/gamma), gamma > 0, computed with a
// max-shift so extreme atoms cannot overflow.
RiskValue entropic(const EmpiricalDist& dist, double gamma);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Expected convex hull interval [ -EM_alpha(X), EM_alpha(-X) ].
Interval cd_interval(const EmpiricalDist& dist, double alpha);

}  // namespace riskgeom
