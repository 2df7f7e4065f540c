#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "riskgeom/empirical.hpp"
#include "riskgeom/risk.hpp"
#include "riskgeom/rng.hpp"

// Independent reference implementations.  Each one solves the defining
// optimization/enumeration problem directly (subsets, tuples, merged atoms)
// rather than reusing the library's greedy/analytic shortcuts, so agreement
// is evidence, not circularity.

namespace oracles {

using riskgeom::EmpiricalDist;
using riskgeom::Rng;
using riskgeom::Vec;

// max E[V l] over densities 0 <= l <= 1/alpha, E[l] = 1, by enumerating all
// capped subsets plus one fractional atom.  Feasible for m <= ~16.
inline double capped_max(std::span<const double> values, std::span<const double> weights,
                         double alpha) {
    const std::size_t m = values.size();
    double best = -std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        double wS = 0.0, acc = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) {
                wS += weights[i];
                acc += weights[i] * values[i];
            }
        if (wS > alpha + 1e-12) continue;
        const double remaining = alpha - wS;
        if (remaining > 1e-12) {
            // One fractional atom per vertex, and it can absorb at most its
            // own weight: only count non-members j with w_j >= remaining.
            double top = -std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < m; ++i)
                if (!(mask & (1u << i)) && weights[i] + 1e-12 >= remaining)
                    top = std::max(top, values[i]);
            if (!std::isfinite(top)) continue;  // no atom can take the rest of the budget
            acc += remaining * top;
        }
        best = std::max(best, acc / alpha);
    }
    return best;
}

// E[min] / E[max] of n iid copies by direct n-tuple enumeration (m^n terms).
inline double tuple_extreme(std::span<const double> values, std::span<const double> weights,
                            int n, bool want_min) {
    const std::size_t m = values.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    double acc = 0.0;
    while (true) {
        double p = 1.0;
        double ext = values[idx[0]];
        for (int k = 0; k < n; ++k) {
            p *= weights[idx[static_cast<std::size_t>(k)]];
            const double v = values[idx[static_cast<std::size_t>(k)]];
            ext = want_min ? std::min(ext, v) : std::max(ext, v);
        }
        acc += p * ext;
        int k = n - 1;
        while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == m) {
            idx[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return acc;
}

// Quantiles on merged atoms with long-double cumulative sums.  Exact when the
// weights are binary fractions.
inline double quantile_merged(const EmpiricalDist& dist, double t, bool strict) {
    std::map<double, long double> cdf;
    for (std::size_t i = 0; i < dist.size(); ++i)
        cdf[dist.scalar_values()[i]] += static_cast<long double>(dist.weights()[i]);
    long double cum = 0.0L;
    double last = cdf.rbegin()->first;
    for (const auto& [v, w] : cdf) {
        cum += w;
        if (strict ? (cum > static_cast<long double>(t)) : (cum >= static_cast<long double>(t)))
            return v;
    }
    return last;
}

// Worst conditioning by enumerating every vertex density: a capped subset S
// plus at most one fractional boundary atom j.
inline double worst_vertex(const riskgeom::ScalarRisk& rho, const EmpiricalDist& dist,
                           double alpha) {
    const std::size_t m = dist.size();
    const auto w = dist.weights();
    double best = -std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        double wS = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) wS += w[i];
        if (wS > alpha + 1e-12) continue;
        const double remaining = alpha - wS;
        auto eval_density = [&](std::ptrdiff_t frac) {
            riskgeom::Density den;
            den.cap = 1.0 / alpha;
            den.l.assign(m, 0.0);
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) den.l[i] = den.cap;
            if (frac >= 0) den.l[static_cast<std::size_t>(frac)] = remaining / (w[static_cast<std::size_t>(frac)] * alpha);
            best = std::max(best, rho(riskgeom::reweight(dist, den)));
        };
        if (remaining <= 1e-12) {
            eval_density(-1);
            continue;
        }
        for (std::size_t j = 0; j < m; ++j)
            if (!(mask & (1u << j)) && w[j] + 1e-12 >= remaining) eval_density(static_cast<std::ptrdiff_t>(j));
    }
    return best;
}

// --- seeded generators ---------------------------------------------------------

inline std::vector<double> random_weights(Rng& rng, std::size_t m) {
    if (rng.below(2) == 0) return {};
    std::vector<double> w(m);
    for (double& v : w) v = rng.uniform(0.1, 1.0);
    return w;
}

// Weights k_i/64 with sum exactly 1: every cumulative sum is an exact binary
// fraction, which pins quantile tie behavior without tolerance games.
// Requires m <= 64.
inline std::vector<double> binary_weights(Rng& rng, std::size_t m) {
    std::vector<int> k(m, 1);
    for (std::size_t extra = 64 - m; extra > 0; --extra) ++k[rng.below(m)];
    std::vector<double> w(m);
    for (std::size_t i = 0; i < m; ++i) w[i] = static_cast<double>(k[i]) / 64.0;
    return w;
}

inline EmpiricalDist random_cloud(Rng& rng, std::size_t d, std::size_t max_m = 50,
                                  std::vector<double> weights = {}, bool draw_weights = true) {
    const std::size_t m = 2 + rng.below(max_m - 1);
    if (draw_weights && weights.empty()) weights = random_weights(rng, m);
    std::vector<Vec> rows(m, Vec(d));
    for (std::size_t j = 0; j < d; ++j) {
        const bool lognormal = rng.below(2) == 1;
        const double c = rng.uniform(-2.0, 2.0);
        const double s = rng.uniform(0.1, 3.0);
        for (std::size_t i = 0; i < m; ++i) {
            rows[i][j] = lognormal ? std::exp(0.3 * rng.normal()) - 1.0 + c
                                   : c + s * (2.0 * rng.uniform() - 1.0);
        }
    }
    return EmpiricalDist(rows, std::move(weights));
}

inline EmpiricalDist random_univariate(Rng& rng, std::size_t max_m = 50) {
    return random_cloud(rng, 1, max_m);
}

inline riskgeom::RieszCone random_cone(Rng& rng, std::size_t d) {
    riskgeom::Matrix a(d);
    for (std::size_t i = 0; i < d; ++i) {
        double off = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            a(i, j) = rng.uniform(0.0, 0.5);
            off += a(i, j);
        }
        a(i, i) = off + 1.0 + rng.uniform(0.0, 1.0);
    }
    return riskgeom::RieszCone(a);
}

}  // namespace oracles
