#include "riskgeom/depth.hpp"

#include <cmath>

#include "riskgeom/errors.hpp"

namespace riskgeom {

namespace {

void check_level(double alpha, bool allow_one, const char* what) {
    const bool ok = alpha > 0.0 && (allow_one ? alpha <= 1.0 : alpha < 1.0);
    if (!std::isfinite(alpha) || !ok) throw ConfigError(std::string(what) + ": level out of range");
}

}  // namespace

double zonoid_support(const EmpiricalDist& dist, double alpha, std::span<const double> u) {
    check_level(alpha, /*allow_one=*/true, "zonoid_support");
    const EmpiricalDist proj = dist.project(u);
    return tail_mean(proj.scalar_values(), proj.weights(), alpha);
}

double ech_support(const EmpiricalDist& dist, int n, std::span<const double> u) {
    if (n < 1) throw ConfigError("ech_support: need n >= 1");
    const EmpiricalDist proj = dist.project(u);
    return power_max(proj.scalar_values(), proj.weights(), n);
}

double ech_support(const EmpiricalDist& dist, double alpha, std::span<const double> u) {
    check_level(alpha, /*allow_one=*/true, "ech_support");
    // E max of the spectral family of P equals -E min of the family of -P.
    const EmpiricalDist proj = dist.project(u);
    const auto values = proj.scalar_values();
    std::vector<double> neg(values.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -values[i];
    return -spectral_min(neg, proj.weights(), 1.0 / alpha);
}

ConstraintRegion halfspace_constraints(const EmpiricalDist& dist, double alpha,
                                       const RieszCone& cone,
                                       const std::vector<Vec>& extra_dirs) {
    check_level(alpha, /*allow_one=*/false, "halfspace_constraints");
    if (cone.dim() != dist.dim())
        throw ConfigError("halfspace_constraints: cone dimension mismatch");

    std::vector<Vec> dirs;
    for (const Vec& row : cone.dual_generators()) {
        const double len = norm2(row);
        if (!(len > 0.0)) throw ConfigError("halfspace_constraints: zero dual generator");
        Vec unit(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) unit[j] = row[j] / len;
        dirs.push_back(std::move(unit));
    }
    for (const Vec& e : extra_dirs) {
        if (e.size() != dist.dim())
            throw ConfigError("halfspace_constraints: extra direction dimension mismatch");
        const double len = norm2(e);
        if (!(len > 0.0)) throw ConfigError("halfspace_constraints: zero extra direction");
        Vec unit(e.size());
        for (std::size_t j = 0; j < e.size(); ++j) unit[j] = e[j] / len;
        if (!cone.dual_contains(unit))
            throw ConfigError("halfspace_constraints: extra direction outside the dual cone");
        bool dup = false;
        for (const Vec& v : dirs) {
            bool eq = true;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (std::abs(v[j] - unit[j]) > 1e-12) { eq = false; break; }
            if (eq) { dup = true; break; }
        }
        if (!dup) dirs.push_back(std::move(unit));
    }

    std::vector<ConstraintRegion::Constraint> cs;
    cs.reserve(dirs.size());
    for (Vec& u : dirs) {
        const double q = quantile(dist.project(u), alpha, QuantileKind::Strict);
        cs.push_back({std::move(u), q});
    }
    return ConstraintRegion(cone, std::move(cs));
}

Region build_region(const EmpiricalDist& dist, const RegionSpec& spec, const GridPtr& grid) {
    if (spec.cone.dim() != dist.dim()) throw ConfigError("build_region: cone dimension mismatch");

    if (spec.family == RegionFamily::Halfspace) {
        if (!std::holds_alternative<double>(spec.level))
            throw ConfigError("build_region: halfspace needs a real level");
        return halfspace_constraints(dist, std::get<double>(spec.level), spec.cone,
                                     spec.extra_dirs);
    }

    if (!grid) throw ConfigError("build_region: support families need a grid");
    if (grid->dim() != dist.dim()) throw ConfigError("build_region: grid dimension mismatch");

    std::vector<double> h(grid->size());
    if (spec.family == RegionFamily::Zonoid) {
        if (!std::holds_alternative<double>(spec.level))
            throw ConfigError("build_region: zonoid needs a real level");
        const double alpha = std::get<double>(spec.level);
        for (std::size_t i = 0; i < grid->size(); ++i)
            h[i] = zonoid_support(dist, alpha, grid->dir(i));
    } else {
        if (std::holds_alternative<int>(spec.level)) {
            const int n = std::get<int>(spec.level);
            for (std::size_t i = 0; i < grid->size(); ++i)
                h[i] = ech_support(dist, n, grid->dir(i));
        } else {
            const double alpha = std::get<double>(spec.level);
            for (std::size_t i = 0; i < grid->size(); ++i)
                h[i] = ech_support(dist, alpha, grid->dir(i));
        }
    }
    return SupportRegion(grid, std::move(h));
}

}  // namespace riskgeom
