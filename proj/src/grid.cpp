#include "riskgeom/grid.hpp"

#include <algorithm>
#include <cmath>

#include "riskgeom/cone.hpp"
#include "riskgeom/errors.hpp"

namespace riskgeom {

namespace {

constexpr double kDupTol = 1e-12;

bool same_dir(const Vec& a, const Vec& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (std::abs(a[j] - b[j]) > kDupTol) return false;
    return true;
}

Vec normalized(Vec u) {
    for (double v : u)
        if (!std::isfinite(v)) throw ConfigError("grid: non-finite direction component");
    const double len = norm2(u);
    if (!(len > 0.0)) throw ConfigError("grid: zero direction");
    for (double& v : u) v /= len;
    return u;
}

// Snap components that vanish up to rounding so axis directions are exact and
// duplicate detection against cone generators stays stable.
Vec snapped(Vec u) {
    bool changed = false;
    for (double& v : u) {
        if (v != 0.0 && std::abs(v) < 1e-15) {
            v = 0.0;
            changed = true;
        }
    }
    return changed ? normalized(std::move(u)) : u;
}

void push_unique(std::vector<Vec>& dirs, Vec u) {
    for (const Vec& v : dirs)
        if (same_dir(v, u)) return;
    dirs.push_back(std::move(u));
}

std::vector<Vec> cone_directions(const RieszCone& cone) {
    std::vector<Vec> out;
    for (const Vec& row : cone.dual_generators()) {
        Vec g = snapped(normalized(row));
        Vec neg(g.size());
        for (std::size_t j = 0; j < g.size(); ++j) neg[j] = -g[j];
        out.push_back(std::move(g));
        out.push_back(std::move(neg));
    }
    return out;
}

}  // namespace

DirectionGrid::DirectionGrid(std::size_t d, std::vector<Vec> dirs)
    : dim_(d), dirs_(std::move(dirs)) {
    if (dim_ == 0) throw ConfigError("grid: zero dimension");
    if (dirs_.empty()) throw ConfigError("grid: no directions");
    for (const Vec& u : dirs_) {
        if (u.size() != dim_) throw ConfigError("grid: direction dimension mismatch");
        if (std::abs(norm2(u) - 1.0) > 1e-12) throw ConfigError("grid: direction is not unit length");
    }
    for (std::size_t i = 0; i < dirs_.size(); ++i)
        for (std::size_t j = i + 1; j < dirs_.size(); ++j)
            if (same_dir(dirs_[i], dirs_[j])) throw ConfigError("grid: duplicate direction");

    antipode_.assign(dirs_.size(), -1);
    for (std::size_t i = 0; i < dirs_.size(); ++i) {
        Vec neg(dim_);
        for (std::size_t j = 0; j < dim_; ++j) neg[j] = -dirs_[i][j];
        if (auto k = find(neg)) antipode_[i] = static_cast<std::ptrdiff_t>(*k);
    }
}

std::shared_ptr<const DirectionGrid> DirectionGrid::from_directions(std::vector<Vec> dirs) {
    if (dirs.empty()) throw ConfigError("grid: no directions");
    const std::size_t d = dirs[0].size();
    return std::shared_ptr<const DirectionGrid>(new DirectionGrid(d, std::move(dirs)));
}

std::shared_ptr<const DirectionGrid> DirectionGrid::make_default(
    std::size_t d, const RieszCone& cone, std::size_t n_2d, const std::vector<Vec>& extras) {
    if (cone.dim() != d) throw ConfigError("grid: cone dimension mismatch");
    std::vector<Vec> dirs;

    if (d == 1) {
        dirs.push_back({1.0});
        dirs.push_back({-1.0});
    } else if (d == 2) {
        if (n_2d < 4) throw ConfigError("grid: 2D grids need at least 4 directions");
        const double two_pi = 8.0 * std::atan(1.0);
        for (std::size_t k = 0; k < n_2d; ++k) {
            const double th = two_pi * static_cast<double>(k) / static_cast<double>(n_2d);
            push_unique(dirs, snapped(normalized({std::cos(th), std::sin(th)})));
        }
    } else {
        for (std::size_t j = 0; j < d; ++j) {
            Vec plus(d, 0.0), minus(d, 0.0);
            plus[j] = 1.0;
            minus[j] = -1.0;
            dirs.push_back(std::move(plus));
            dirs.push_back(std::move(minus));
        }
    }

    for (Vec g : cone_directions(cone)) push_unique(dirs, std::move(g));
    for (const Vec& e : extras) {
        if (e.size() != d) throw ConfigError("grid: extra direction dimension mismatch");
        push_unique(dirs, snapped(normalized(e)));
    }

    if (d == 2) {
        std::sort(dirs.begin(), dirs.end(), [](const Vec& a, const Vec& b) {
            return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
        });
    }
    return std::shared_ptr<const DirectionGrid>(new DirectionGrid(d, std::move(dirs)));
}

std::optional<std::size_t> DirectionGrid::find(std::span<const double> u) const {
    if (u.size() != dim_) return std::nullopt;
    for (std::size_t i = 0; i < dirs_.size(); ++i) {
        bool eq = true;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (std::abs(dirs_[i][j] - u[j]) > kDupTol) {
                eq = false;
                break;
            }
        }
        if (eq) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> DirectionGrid::antipode(std::size_t i) const {
    if (i >= antipode_.size() || antipode_[i] < 0) return std::nullopt;
    return static_cast<std::size_t>(antipode_[i]);
}

}  // namespace riskgeom
