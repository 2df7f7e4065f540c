#include "riskgeom/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riskgeom/errors.hpp"
#include "riskgeom/kernels.hpp"

namespace riskgeom {

namespace {
constexpr double kSubsetTol = 1e-9;
}

SupportRegion::SupportRegion(GridPtr grid, std::vector<double> support)
    : grid_(std::move(grid)), h_(std::move(support)) {
    if (!grid_) throw ConfigError("region: null grid");
    if (h_.size() != grid_->size()) throw ConfigError("region: support size does not match grid");
    for (double v : h_)
        if (!std::isfinite(v)) throw ConfigError("region: non-finite support value");
    // h(u) + h(-u) >= 0 is necessary for nonemptiness; check wherever the
    // grid stores both signs.
    for (std::size_t i = 0; i < h_.size(); ++i) {
        if (auto j = grid_->antipode(i); j && *j > i) {
            if (h_[i] + h_[*j] < -kSubsetTol)
                throw ConfigError("region: empty (support pair sums negative)");
        }
    }
}

SupportRegion SupportRegion::from_points(GridPtr grid, const std::vector<Vec>& pts) {
    if (!grid) throw ConfigError("region: null grid");
    if (pts.empty()) throw ConfigError("region: empty point set");
    std::vector<double> h(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const Vec& u = grid->dir(i);
        double best = -std::numeric_limits<double>::infinity();
        for (const Vec& p : pts) {
            if (p.size() != grid->dim()) throw ConfigError("region: point dimension mismatch");
            best = std::max(best, dot(p, u));
        }
        h[i] = best;
    }
    return SupportRegion(std::move(grid), std::move(h));
}

double SupportRegion::h_at(std::span<const double> u) const {
    const auto idx = grid_->find(u);
    if (!idx) throw ConfigError("region: direction not on grid");
    return h_[*idx];
}

SupportRegion minkowski_sum(const SupportRegion& f, const SupportRegion& g) {
    if (f.grid() != g.grid() && !(f.grid()->dirs() == g.grid()->dirs()))
        throw ConfigError("minkowski_sum: regions use different grids");
    std::vector<double> h(f.size());
    kernels::add(h.data(), f.values().data(), g.values().data(), h.size());
    return SupportRegion(f.grid(), std::move(h));
}

SupportRegion scale_translate(const SupportRegion& f, double t, std::span<const double> y) {
    if (!(t > 0.0)) throw ConfigError("scale_translate: scale must be positive");
    if (y.size() != f.grid()->dim()) throw ConfigError("scale_translate: shift dimension mismatch");
    std::vector<double> h(f.size());
    kernels::scale(h.data(), f.values().data(), t, h.size());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += dot(f.grid()->dir(i), y);
    return SupportRegion(f.grid(), std::move(h));
}

bool subset_on_grid(const SupportRegion& f, const SupportRegion& g) {
    if (f.grid() != g.grid() && !(f.grid()->dirs() == g.grid()->dirs()))
        throw ConfigError("subset_on_grid: regions use different grids");
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.h(i) > g.h(i) + kSubsetTol) return false;
    return true;
}

std::vector<std::array<double, 2>> polygon_2d(const SupportRegion& f) {
    if (f.grid()->dim() != 2) throw ConfigError("polygon_2d: region is not 2D");

    struct Line {
        double ux, uy, h;
    };
    std::vector<Line> lines;
    lines.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        lines.push_back({f.grid()->dir(i)[0], f.grid()->dir(i)[1], f.h(i)});
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return std::atan2(a.uy, a.ux) < std::atan2(b.uy, b.ux);
    });

    // Merge effectively identical normals, keeping the tighter bound.
    std::vector<Line> eff;
    for (const Line& l : lines) {
        if (!eff.empty()) {
            const Line& p = eff.back();
            const double cross = p.ux * l.uy - p.uy * l.ux;
            const double along = p.ux * l.ux + p.uy * l.uy;
            if (std::abs(cross) < 1e-12 && along > 0.0) {
                eff.back().h = std::min(p.h, l.h);
                continue;
            }
        }
        eff.push_back(l);
    }
    if (eff.size() >= 2) {
        const Line& first = eff.front();
        const Line& last = eff.back();
        const double cross = last.ux * first.uy - last.uy * first.ux;
        const double along = last.ux * first.ux + last.uy * first.uy;
        if (std::abs(cross) < 1e-12 && along > 0.0) {
            eff.front().h = std::min(first.h, last.h);
            eff.pop_back();
        }
    }
    if (eff.size() < 3) throw ConfigError("polygon_2d: fewer than 3 effective directions");

    std::vector<std::array<double, 2>> verts;
    verts.reserve(eff.size());
    for (std::size_t i = 0; i < eff.size(); ++i) {
        const Line& a = eff[i];
        const Line& b = eff[(i + 1) % eff.size()];
        const double det = a.ux * b.uy - a.uy * b.ux;
        if (std::abs(det) < 1e-12)
            throw ConfigError("polygon_2d: antipodal support lines cannot close a polygon");
        verts.push_back({(a.h * b.uy - b.h * a.uy) / det, (a.ux * b.h - b.ux * a.h) / det});
    }

    // Collapse consecutive coincident vertices (degenerate faces).
    std::vector<std::array<double, 2>> out;
    for (const auto& v : verts) {
        if (!out.empty() && std::abs(v[0] - out.back()[0]) <= 1e-9 &&
            std::abs(v[1] - out.back()[1]) <= 1e-9)
            continue;
        out.push_back(v);
    }
    while (out.size() > 1 && std::abs(out.front()[0] - out.back()[0]) <= 1e-9 &&
           std::abs(out.front()[1] - out.back()[1]) <= 1e-9)
        out.pop_back();
    return out;
}

ConstraintRegion::ConstraintRegion(RieszCone cone, std::vector<Constraint> constraints)
    : cone_(std::move(cone)), cs_(std::move(constraints)) {
    if (cs_.empty()) throw ConfigError("constraint region: no constraints");
    for (const Constraint& c : cs_) {
        if (c.dir.size() != cone_.dim())
            throw ConfigError("constraint region: direction dimension mismatch");
        if (std::abs(norm2(c.dir) - 1.0) > 1e-12)
            throw ConfigError("constraint region: direction is not unit length");
        if (!cone_.dual_contains(c.dir))
            throw ConfigError("constraint region: direction outside the dual cone");
        if (!std::isfinite(c.bound)) throw ConfigError("constraint region: non-finite bound");
    }
}

std::optional<double> ConstraintRegion::bound_for(std::span<const double> u) const {
    for (const Constraint& c : cs_) {
        bool eq = c.dir.size() == u.size();
        for (std::size_t j = 0; eq && j < u.size(); ++j)
            if (std::abs(c.dir[j] - u[j]) > 1e-12) eq = false;
        if (eq) return c.bound;
    }
    return std::nullopt;
}

bool ConstraintRegion::contains(std::span<const double> x) const {
    for (const Constraint& c : cs_) {
        const double v = dot(c.dir, x);
        if (v < c.bound - 1e-9 * (1.0 + std::abs(c.bound))) return false;
    }
    return true;
}

}  // namespace riskgeom
