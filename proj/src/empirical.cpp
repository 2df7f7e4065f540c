#include "riskgeom/empirical.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "riskgeom/errors.hpp"
#include "riskgeom/kernels.hpp"

namespace riskgeom {

namespace {

std::vector<double> uniform_weights(std::size_t m) {
    return std::vector<double>(m, 1.0 / static_cast<double>(m));
}

// Positive weights are required; normalization to unit mass happens here so
// the invariant holds by construction.
std::vector<double> normalized_weights(std::vector<double> w, std::size_t m) {
    if (w.empty()) return uniform_weights(m);
    if (w.size() != m) throw DataError("weights do not match the number of atoms");
    double total = 0.0;
    for (double v : w) {
        if (!std::isfinite(v) || v <= 0.0) throw DataError("weights must be strictly positive");
        total += v;
    }
    for (double& v : w) v /= total;
    return w;
}

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            cells.push_back(trimmed(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return cells;
}

double parse_cell(std::string_view cell, std::size_t line_no, std::size_t col_no) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last || cell.empty()) {
        std::ostringstream msg;
        msg << "csv: non-numeric cell at row " << line_no << ", column " << col_no << " ('"
            << std::string(cell) << "')";
        throw DataError(msg.str());
    }
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "csv: non-finite value at row " << line_no << ", column " << col_no;
        throw DataError(msg.str());
    }
    return value;
}

}  // namespace

EmpiricalDist::EmpiricalDist(const std::vector<Vec>& points, std::vector<double> weights) {
    if (points.empty()) throw DataError("distribution needs at least one atom");
    m_ = points.size();
    d_ = points[0].size();
    if (d_ == 0) throw DataError("distribution needs at least one coordinate");
    cols_.assign(m_ * d_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
        if (points[i].size() != d_) throw DataError("atom dimension mismatch");
        for (std::size_t j = 0; j < d_; ++j) {
            const double v = points[i][j];
            if (!std::isfinite(v)) throw DataError("non-finite atom coordinate");
            cols_[j * m_ + i] = v;
        }
    }
    w_ = normalized_weights(std::move(weights), m_);
}

EmpiricalDist EmpiricalDist::from_columns(std::size_t m, std::size_t d, std::vector<double> cols,
                                          std::vector<double> weights) {
    if (m == 0 || d == 0) throw DataError("distribution needs atoms and coordinates");
    if (cols.size() != m * d) throw DataError("column data size mismatch");
    for (double v : cols)
        if (!std::isfinite(v)) throw DataError("non-finite atom coordinate");
    EmpiricalDist out;
    out.m_ = m;
    out.d_ = d;
    out.cols_ = std::move(cols);
    out.w_ = normalized_weights(std::move(weights), m);
    return out;
}

EmpiricalDist EmpiricalDist::load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open scenario file: " + path);

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trimmed(line).empty()) continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw DataError("csv: file is empty: " + path);
    if (lines.size() == 1) throw DataError("csv: no data rows: " + path);

    const auto header = split_csv_line(lines[0]);
    std::ptrdiff_t weight_col = -1;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == "weight") {
            if (weight_col >= 0) throw DataError("csv: duplicate weight column");
            weight_col = static_cast<std::ptrdiff_t>(c);
        }
    }
    const std::size_t d = header.size() - (weight_col >= 0 ? 1 : 0);
    if (d == 0) throw DataError("csv: no asset columns");

    const std::size_t m = lines.size() - 1;
    std::vector<double> cols(m * d, 0.0);
    std::vector<double> weights;
    if (weight_col >= 0) weights.resize(m);

    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t line_no = r + 2;  // 1-based, after the header
        const auto cells = split_csv_line(lines[r + 1]);
        if (cells.size() != header.size()) {
            std::ostringstream msg;
            msg << "csv: row " << line_no << " has " << cells.size() << " cells, expected "
                << header.size();
            throw DataError(msg.str());
        }
        std::size_t j = 0;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const double v = parse_cell(cells[c], line_no, c + 1);
            if (static_cast<std::ptrdiff_t>(c) == weight_col) {
                if (v <= 0.0) {
                    std::ostringstream msg;
                    msg << "csv: nonpositive weight at row " << line_no;
                    throw DataError(msg.str());
                }
                weights[r] = v;
            } else {
                cols[j * m + r] = v;
                ++j;
            }
        }
    }
    return from_columns(m, d, std::move(cols), std::move(weights));
}

std::span<const double> EmpiricalDist::scalar_values() const {
    if (d_ != 1) throw ConfigError("scalar_values: distribution is not univariate");
    return col(0);
}

Vec EmpiricalDist::point(std::size_t i) const {
    Vec p(d_);
    for (std::size_t j = 0; j < d_; ++j) p[j] = cols_[j * m_ + i];
    return p;
}

Vec EmpiricalDist::mean() const {
    Vec mu(d_);
    for (std::size_t j = 0; j < d_; ++j) mu[j] = kernels::dot(w_.data(), col(j).data(), m_);
    return mu;
}

EmpiricalDist EmpiricalDist::project(std::span<const double> u) const {
    if (u.size() != d_) throw ConfigError("project: direction dimension mismatch");
    std::vector<double> vals(m_, 0.0);
    kernels::scale(vals.data(), col(0).data(), u[0], m_);
    for (std::size_t j = 1; j < d_; ++j) kernels::axpy(vals.data(), col(j).data(), u[j], m_);
    EmpiricalDist out;
    out.m_ = m_;
    out.d_ = 1;
    out.cols_ = std::move(vals);
    out.w_ = w_;
    return out;
}

double quantile(const EmpiricalDist& dist, double t, QuantileKind kind) {
    if (dist.dim() != 1) throw ConfigError("quantile: distribution is not univariate");
    if (!std::isfinite(t)) throw ConfigError("quantile: level is not finite");
    if (kind == QuantileKind::Left && !(t > 0.0 && t <= 1.0))
        throw ConfigError("quantile: left kind needs t in (0,1]");
    if (kind == QuantileKind::Strict && !(t >= 0.0 && t < 1.0))
        throw ConfigError("quantile: strict kind needs t in [0,1)");

    const auto values = dist.scalar_values();
    const auto weights = dist.weights();
    std::vector<std::size_t> order(dist.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    constexpr double eps = 1e-12;
    double cum = 0.0;
    for (std::size_t k : order) {
        cum += weights[k];
        if (kind == QuantileKind::Left ? cum >= t - eps : cum > t + eps) return values[k];
    }
    return values[order.back()];  // mass rounding fell short of t; F(max) = 1
}

EmpiricalDist EmpiricalDist::carrying(std::size_t m, std::size_t d, std::vector<double> cols,
                                      std::vector<double> unit_weights) {
    EmpiricalDist out;
    out.m_ = m;
    out.d_ = d;
    out.cols_ = std::move(cols);
    out.w_ = std::move(unit_weights);
    return out;
}

EmpiricalDist linear_transform(const EmpiricalDist& dist, const Matrix& a) {
    if (a.n != dist.dim()) throw ConfigError("linear_transform: matrix dimension mismatch");
    const std::size_t m = dist.size(), d = dist.dim();
    std::vector<double> cols(m * d, 0.0);
    for (std::size_t k = 0; k < d; ++k) {
        double* out = cols.data() + k * m;
        kernels::scale(out, dist.col(0).data(), a(k, 0), m);
        for (std::size_t j = 1; j < d; ++j) kernels::axpy(out, dist.col(j).data(), a(k, j), m);
    }
    return EmpiricalDist::carrying(m, d, std::move(cols), dist.w_);
}

namespace {

void require_coupled(const EmpiricalDist& x, const EmpiricalDist& y) {
    if (x.dim() != y.dim()) throw ConfigError("coupled tables: dimension mismatch");
    if (x.size() != y.size()) throw ConfigError("coupled tables: atom count mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (std::abs(x.weights()[i] - y.weights()[i]) > 1e-12)
            throw ConfigError("coupled tables: rowwise weights differ");
}

}  // namespace

EmpiricalDist coupled_sum(const EmpiricalDist& x, const EmpiricalDist& y) {
    require_coupled(x, y);
    const std::size_t m = x.size(), d = x.dim();
    std::vector<double> cols(m * d);
    for (std::size_t j = 0; j < d; ++j)
        kernels::add(cols.data() + j * m, x.col(j).data(), y.col(j).data(), m);
    return EmpiricalDist::carrying(m, d, std::move(cols), x.w_);
}

EmpiricalDist coupled_mix(const EmpiricalDist& x, const EmpiricalDist& y, double t) {
    require_coupled(x, y);
    if (!(t >= 0.0 && t <= 1.0)) throw ConfigError("coupled_mix: t must lie in [0,1]");
    const std::size_t m = x.size(), d = x.dim();
    std::vector<double> cols(m * d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        double* out = cols.data() + j * m;
        kernels::scale(out, x.col(j).data(), t, m);
        kernels::axpy(out, y.col(j).data(), 1.0 - t, m);
    }
    return EmpiricalDist::carrying(m, d, std::move(cols), x.w_);
}

EmpiricalDist translate(const EmpiricalDist& dist, std::span<const double> y) {
    if (y.size() != dist.dim()) throw ConfigError("translate: shift dimension mismatch");
    const std::size_t m = dist.size(), d = dist.dim();
    std::vector<double> cols(m * d);
    for (std::size_t j = 0; j < d; ++j)
        kernels::adds(cols.data() + j * m, dist.col(j).data(), y[j], m);
    return EmpiricalDist::carrying(m, d, std::move(cols), dist.w_);
}

EmpiricalDist scale(const EmpiricalDist& dist, double t) {
    if (!std::isfinite(t)) throw ConfigError("scale: factor is not finite");
    const std::size_t m = dist.size(), d = dist.dim();
    std::vector<double> cols(m * d);
    for (std::size_t j = 0; j < d; ++j)
        kernels::scale(cols.data() + j * m, dist.col(j).data(), t, m);
    return EmpiricalDist::carrying(m, d, std::move(cols), dist.w_);
}

EmpiricalDist negate(const EmpiricalDist& dist) { return scale(dist, -1.0); }

EmpiricalDist reweight(const EmpiricalDist& dist, const Density& density) {
    if (density.l.size() != dist.size()) throw ConfigError("reweight: density size mismatch");
    if (!(density.cap > 0.0)) throw ConfigError("reweight: cap must be positive");
    const double cap_tol = 1e-12 * density.cap + 1e-15;
    double mass = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const double l = density.l[i];
        if (!std::isfinite(l) || l < -cap_tol || l > density.cap + cap_tol)
            throw ConfigError("reweight: density violates its cap");
        mass += l * dist.weights()[i];
    }
    if (std::abs(mass - 1.0) > 1e-9)
        throw ConfigError("reweight: density mass is off unit by more than 1e-9");

    std::vector<Vec> pts;
    std::vector<double> w;
    pts.reserve(dist.size());
    w.reserve(dist.size());
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const double wi = density.l[i] * dist.weights()[i];
        if (wi <= 0.0) continue;  // dropped atom
        pts.push_back(dist.point(i));
        w.push_back(wi);
    }
    if (pts.empty()) throw ConfigError("reweight: all atoms dropped");
    return EmpiricalDist(pts, std::move(w));
}

}  // namespace riskgeom
