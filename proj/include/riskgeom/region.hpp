#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "riskgeom/cone.hpp"
#include "riskgeom/grid.hpp"

namespace riskgeom {

// Convex compact region represented by its support function sampled on a
// shared direction grid: h(u) = sup{ <x,u> : x in F }.  All region algebra
// stays in support-function space; no halfspace intersections are performed
// except for 2D polygon reconstruction at the reporting boundary.
class SupportRegion {
public:
    SupportRegion(GridPtr grid, std::vector<double> support);

    // Support function of the convex hull of a point cloud.
    static SupportRegion from_points(GridPtr grid, const std::vector<Vec>& pts);

    const GridPtr& grid() const { return grid_; }
    std::size_t size() const { return h_.size(); }
    double h(std::size_t i) const { return h_[i]; }
    const std::vector<double>& values() const { return h_; }

    // Support value in an arbitrary direction present on the grid.
    double h_at(std::span<const double> u) const;

private:
    GridPtr grid_;
    std::vector<double> h_;
};

// h(F + G) = h(F) + h(G); both regions must share one grid.
SupportRegion minkowski_sum(const SupportRegion& f, const SupportRegion& g);

// h(tF + y) = t h(F) + <y,u>, t > 0.
SupportRegion scale_translate(const SupportRegion& f, double t, std::span<const double> y);

// F subset of G certified on the grid: h_F <= h_G + 1e-9 everywhere.
bool subset_on_grid(const SupportRegion& f, const SupportRegion& g);

// Vertices of the polygon carved by the support lines of a 2D region, in
// angular order.  Nearly parallel support lines are merged (tighter bound
// wins); a singleton region collapses to coincident vertices.
std::vector<std::array<double, 2>> polygon_2d(const SupportRegion& f);

// Closed K-upper region { x : <u,x> >= bound for every stored constraint },
// directions unit and inside K*.  Produced by the halfspace family; kept as
// constraints because the set is unbounded (support functions do not apply).
class ConstraintRegion {
public:
    struct Constraint {
        Vec dir;       // unit, in K*
        double bound;  // <dir, x> >= bound
    };

    ConstraintRegion(RieszCone cone, std::vector<Constraint> constraints);

    const RieszCone& cone() const { return cone_; }
    const std::vector<Constraint>& constraints() const { return cs_; }

    // Bound for a direction (max-abs match within 1e-12), if stored.
    std::optional<double> bound_for(std::span<const double> u) const;

    bool contains(std::span<const double> x) const;

private:
    RieszCone cone_;
    std::vector<Constraint> cs_;
};

}  // namespace riskgeom
