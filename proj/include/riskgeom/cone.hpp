#pragma once

#include <span>
#include <vector>

#include "riskgeom/linalg.hpp"

// Riesz cones K = A^{-1} R^d_+ for a nonsingular matrix A with nonnegative
// entries.  The induced order x <=_K y  <=>  y - x in K is a lattice order,
// which is what makes the coordinatewise-infimum construction below work.

namespace riskgeom {

class SupportRegion;  // convex_region.hpp

class RieszCone {
public:
    static RieszCone identity(std::size_t d);

    // Validates: nonnegative entries, nonsingularity, conditioning, and the
    // A * A^{-1} = I round trip.  Throws ConfigError otherwise.
    explicit RieszCone(Matrix transfer);

    std::size_t dim() const { return a_.n; }
    const Matrix& transfer() const { return a_; }           // A
    const Matrix& transfer_inverse() const { return a_inv_; }  // A^{-1}

    // x in K, i.e. A x >= 0 up to a scale-aware tolerance.
    bool contains(std::span<const double> x) const;

    // x <=_K y
    bool leq(std::span<const double> x, std::span<const double> y) const;

    // Generators of the dual cone K* (rows of A, unnormalized).
    std::vector<Vec> dual_generators() const;

    // u in K*, i.e. A^{-T} u >= 0 up to tolerance.
    bool dual_contains(std::span<const double> u) const;

    bool is_identity() const;

private:
    Matrix a_;
    Matrix a_inv_;
    Matrix a_inv_t_;
};

// Greatest <=_K lower bound of a region evaluated through its support grid:
// component i of A * result is inf{ <a_i, x> : x in F } = -h(F, -a_i).
// The grid must contain every normalized direction -a_i / |a_i|.
Vec k_infimum(const SupportRegion& region, const RieszCone& cone);

}  // namespace riskgeom
