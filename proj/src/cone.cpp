#include "riskgeom/cone.hpp"

#include <cmath>

#include "riskgeom/errors.hpp"
#include "riskgeom/region.hpp"

namespace riskgeom {

namespace {

// Scale-aware componentwise nonnegativity: y >= -(1e-12 |y|_inf + 1e-15).
bool nonneg_within_tol(std::span<const double> y) {
    const double tol = 1e-12 * norm_inf(y) + 1e-15;
    for (double v : y)
        if (v < -tol) return false;
    return true;
}

}  // namespace

RieszCone RieszCone::identity(std::size_t d) {
    return RieszCone(Matrix::identity(d));
}

RieszCone::RieszCone(Matrix transfer) : a_(std::move(transfer)) {
    const std::size_t d = a_.n;
    if (d == 0) throw ConfigError("cone: empty transfer matrix");
    double scale = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const double v = a_(i, j);
            if (!std::isfinite(v)) throw ConfigError("cone: non-finite entry in transfer matrix");
            if (v < 0.0) throw ConfigError("cone: transfer matrix entries must be nonnegative");
            if (v > scale) scale = v;
        }
    if (scale == 0.0) throw ConfigError("cone: transfer matrix is zero");

    double det = 0.0;
    a_inv_ = invert(a_, &det);
    double det_floor = 1e-12;
    for (std::size_t i = 0; i < d; ++i) det_floor *= scale;
    if (!(det > det_floor))
        throw ConfigError("cone: transfer matrix is numerically singular");
    if (norm_inf(a_) * norm_inf(a_inv_) > 1e12)
        throw ConfigError("cone: transfer matrix condition number exceeds 1e12");

    // Round-trip check: A * A^{-1} must reproduce the identity closely.
    const Matrix probe = matmul(a_, a_inv_);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const double want = (i == j) ? 1.0 : 0.0;
            if (std::abs(probe(i, j) - want) > 1e-10)
                throw ConfigError("cone: inverse round-trip exceeds tolerance");
        }
    a_inv_t_ = a_inv_.transposed();
}

bool RieszCone::contains(std::span<const double> x) const {
    if (x.size() != dim()) throw ConfigError("cone: point dimension mismatch");
    return nonneg_within_tol(matvec(a_, x));
}

bool RieszCone::leq(std::span<const double> x, std::span<const double> y) const {
    if (x.size() != dim() || y.size() != dim()) throw ConfigError("cone: point dimension mismatch");
    Vec diff(dim());
    for (std::size_t i = 0; i < dim(); ++i) diff[i] = y[i] - x[i];
    return contains(diff);
}

std::vector<Vec> RieszCone::dual_generators() const {
    std::vector<Vec> rows;
    rows.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) rows.push_back(a_.row(i));
    return rows;
}

bool RieszCone::dual_contains(std::span<const double> u) const {
    if (u.size() != dim()) throw ConfigError("cone: direction dimension mismatch");
    return nonneg_within_tol(matvec(a_inv_t_, u));
}

bool RieszCone::is_identity() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
            const double want = (i == j) ? 1.0 : 0.0;
            if (a_(i, j) != want) return false;
        }
    return true;
}

Vec k_infimum(const SupportRegion& region, const RieszCone& cone) {
    const std::size_t d = cone.dim();
    if (region.grid()->dim() != d) throw ConfigError("k_infimum: region/cone dimension mismatch");
    // m_i = inf over F of <a_i, x> = -|a_i| * h(F, -a_i/|a_i|); the grid is
    // required to carry each normalized direction exactly.
    Vec m(d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec gen = cone.transfer().row(i);
        const double len = norm2(gen);
        if (!(len > 0.0)) throw ConfigError("k_infimum: zero dual generator");
        Vec neg(d);
        for (std::size_t j = 0; j < d; ++j) neg[j] = -gen[j] / len;
        const auto idx = region.grid()->find(neg);
        if (!idx)
            throw ConfigError("k_infimum: grid lacks required cone direction (no interpolation)");
        m[i] = -len * region.h(*idx);
    }
    return matvec(cone.transfer_inverse(), m);
}

}  // namespace riskgeom
