#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Dense helpers for the small (d x d, d rarely above 4) matrices that carry
// cone bases.  Deliberately minimal: partial-pivot elimination is all the
// artifact needs, and keeping it local makes the conditioning checks explicit.

namespace riskgeom {

using Vec = std::vector<double>;

struct Matrix {
    std::size_t n = 0;       // square, row-major
    std::vector<double> a;

    Matrix() = default;
    Matrix(std::size_t size, double fill = 0.0) : n(size), a(size * size, fill) {}

    static Matrix identity(std::size_t size);

    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    Vec row(std::size_t i) const;
    Matrix transposed() const;
};

Vec matvec(const Matrix& m, std::span<const double> x);
Matrix matmul(const Matrix& lhs, const Matrix& rhs);

double norm_inf(const Matrix& m);   // max absolute row sum
double norm_inf(std::span<const double> x);

// Inverse via Gauss-Jordan with partial pivoting; throws ConfigError when the
// matrix is singular at working precision.  |det| is written to det_out when
// requested.
Matrix invert(const Matrix& m, double* det_out = nullptr);

double dot(std::span<const double> x, std::span<const double> y);
double norm2(std::span<const double> x);

}  // namespace riskgeom
