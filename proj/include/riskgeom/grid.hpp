#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "riskgeom/linalg.hpp"

namespace riskgeom {

class RieszCone;

// Fixed evaluation grid of unit directions shared by every region in a run.
// Regions on the same grid support exact Minkowski/scaling arithmetic and
// subset tests; regions on different grids are deliberately incomparable.
//
// 2D grids are kept sorted by angle (polygon reconstruction relies on it);
// grids always carry both signs of the cone's normalized dual generators so
// the K-infimum is evaluable.
class DirectionGrid {
public:
    // Default grid for dimension d: 1D -> {+1,-1}; 2D -> n_2d equally spaced
    // angles (axis components snapped exactly) plus cone directions; d >= 3 ->
    // +-e_i plus cone directions.  User extras are normalized and merged.
    static std::shared_ptr<const DirectionGrid> make_default(
        std::size_t d, const RieszCone& cone, std::size_t n_2d = 64,
        const std::vector<Vec>& extras = {});

    // Grid from explicit directions (e.g. a region file).  Directions must be
    // finite, unit within 1e-12 and pairwise distinct.
    static std::shared_ptr<const DirectionGrid> from_directions(std::vector<Vec> dirs);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return dirs_.size(); }
    const Vec& dir(std::size_t i) const { return dirs_[i]; }
    const std::vector<Vec>& dirs() const { return dirs_; }

    // Index of u (max-abs distance <= 1e-12), if present.
    std::optional<std::size_t> find(std::span<const double> u) const;

    // Index of -dir(i), or nullopt when the grid lacks it.
    std::optional<std::size_t> antipode(std::size_t i) const;

private:
    explicit DirectionGrid(std::size_t d, std::vector<Vec> dirs);

    std::size_t dim_ = 0;
    std::vector<Vec> dirs_;
    std::vector<std::ptrdiff_t> antipode_;
};

using GridPtr = std::shared_ptr<const DirectionGrid>;

}  // namespace riskgeom
