#pragma once

#include <span>
#include <string>
#include <vector>

#include "riskgeom/linalg.hpp"

namespace riskgeom {

// Weighted empirical distribution of a d-variate portfolio outcome: m atoms,
// strictly positive weights summing to one.  Coordinates are stored
// column-major so projections and linear maps run as contiguous axpy/dot
// kernels over the atom axis.
class EmpiricalDist {
public:
    // Row-oriented construction; empty weights mean the uniform law.
    EmpiricalDist(const std::vector<Vec>& points, std::vector<double> weights = {});

    static EmpiricalDist from_columns(std::size_t m, std::size_t d, std::vector<double> cols,
                                      std::vector<double> weights);

    // CSV with a header row of asset names; an optional "weight" column
    // carries unnormalized positive weights.  Duplicate rows stay distinct
    // atoms.  Parse failures name the offending row and column.
    static EmpiricalDist load_csv(const std::string& path);

    std::size_t size() const { return m_; }
    std::size_t dim() const { return d_; }

    std::span<const double> weights() const { return w_; }
    std::span<const double> col(std::size_t j) const { return {cols_.data() + j * m_, m_}; }
    // Univariate shortcut.
    std::span<const double> scalar_values() const;

    Vec point(std::size_t i) const;
    Vec mean() const;

    // Law of <X, u> as a univariate distribution over the same atoms (ties
    // are not merged).
    EmpiricalDist project(std::span<const double> u) const;

private:
    EmpiricalDist() = default;

    // Trusted path for transforms that provably keep unit mass: copies the
    // weights of an existing distribution bitwise instead of renormalizing,
    // so measure-preserving maps never perturb the law they act on.
    static EmpiricalDist carrying(std::size_t m, std::size_t d, std::vector<double> cols,
                                  std::vector<double> unit_weights);

    friend EmpiricalDist linear_transform(const EmpiricalDist&, const Matrix&);
    friend EmpiricalDist coupled_sum(const EmpiricalDist&, const EmpiricalDist&);
    friend EmpiricalDist coupled_mix(const EmpiricalDist&, const EmpiricalDist&, double);
    friend EmpiricalDist translate(const EmpiricalDist&, std::span<const double>);
    friend EmpiricalDist scale(const EmpiricalDist&, double);

    std::size_t m_ = 0, d_ = 0;
    std::vector<double> cols_;  // d blocks of length m
    std::vector<double> w_;
};

enum class QuantileKind {
    Left,   // inf{ x : F(x) >= t },  t in (0, 1]
    Strict  // inf{ x : F(x) >  t },  t in [0, 1)
};

double quantile(const EmpiricalDist& dist, double t, QuantileKind kind);

// Law of A X.
EmpiricalDist linear_transform(const EmpiricalDist& dist, const Matrix& a);

// Law of X + Y for two coupled scenario tables: equal atom counts and
// rowwise equal weights.
EmpiricalDist coupled_sum(const EmpiricalDist& x, const EmpiricalDist& y);

// Coupled convex mix tX + (1-t)Y on a shared scenario table.
EmpiricalDist coupled_mix(const EmpiricalDist& x, const EmpiricalDist& y, double t);

EmpiricalDist translate(const EmpiricalDist& dist, std::span<const double> y);
EmpiricalDist scale(const EmpiricalDist& dist, double t);
EmpiricalDist negate(const EmpiricalDist& dist);

// Relative density with respect to the empirical law: 0 <= l_i <= cap and
// sum l_i w_i = 1 within 1e-12.
struct Density {
    std::vector<double> l;
    double cap = 0.0;
};

// Law reweighted by a capped density; zero-weight atoms are dropped and the
// result renormalized exactly.  Violating the cap or drifting off unit mass
// by more than 1e-9 is an error.
EmpiricalDist reweight(const EmpiricalDist& dist, const Density& density);

}  // namespace riskgeom
