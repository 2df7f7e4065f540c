#include "riskgeom/linalg.hpp"

#include <cmath>
#include <cstdlib>

#include "riskgeom/errors.hpp"
#include "riskgeom/kernels.hpp"

namespace riskgeom {

Matrix Matrix::identity(std::size_t size) {
    Matrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1.0;
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(a.begin() + static_cast<std::ptrdiff_t>(i * n),
               a.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
}

Matrix Matrix::transposed() const {
    Matrix t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vec matvec(const Matrix& m, std::span<const double> x) {
    if (x.size() != m.n) throw ConfigError("matvec: dimension mismatch");
    Vec out(m.n, 0.0);
    for (std::size_t i = 0; i < m.n; ++i)
        out[i] = kernels::dot(m.a.data() + i * m.n, x.data(), m.n);
    return out;
}

Matrix matmul(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.n != rhs.n) throw ConfigError("matmul: dimension mismatch");
    Matrix out(lhs.n);
    for (std::size_t i = 0; i < lhs.n; ++i)
        for (std::size_t k = 0; k < lhs.n; ++k) {
            const double v = lhs(i, k);
            if (v != 0.0)
                kernels::axpy(out.a.data() + i * out.n, rhs.a.data() + k * rhs.n, v, rhs.n);
        }
    return out;
}

double norm_inf(const Matrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.n; ++j) s += std::abs(m(i, j));
        if (s > best) best = s;
    }
    return best;
}

double norm_inf(std::span<const double> x) {
    double best = 0.0;
    for (double v : x)
        if (std::abs(v) > best) best = std::abs(v);
    return best;
}

Matrix invert(const Matrix& m, double* det_out) {
    const std::size_t n = m.n;
    Matrix work = m;
    Matrix inv = Matrix::identity(n);
    double det = 1.0;

    for (std::size_t col = 0; col < n; ++col) {
        // Partial pivot: largest magnitude entry on or below the diagonal.
        std::size_t pivot = col;
        double best = std::abs(work(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(work(r, col)) > best) {
                best = std::abs(work(r, col));
                pivot = r;
            }
        }
        if (!(best > 0.0)) throw ConfigError("matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
            det = -det;
        }
        const double p = work(col, col);
        det *= p;
        const double ip = 1.0 / p;
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) *= ip;
            inv(col, j) *= ip;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = work(r, col);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work(r, j) -= f * work(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    if (det_out != nullptr) *det_out = std::abs(det);
    return inv;
}

double dot(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ConfigError("dot: dimension mismatch");
    return kernels::dot(x.data(), y.data(), x.size());
}

double norm2(std::span<const double> x) {
    return std::sqrt(kernels::dot(x.data(), x.data(), x.size()));
}

}  // namespace riskgeom
