#include "riskgeom/kernels.hpp"

namespace riskgeom::kernels {
namespace {

double dot_ref(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double sum_ref(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

void scale_ref(double* out, const double* x, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i];
}

void axpy_ref(double* out, const double* x, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] += a * x[i];
}

void add_ref(double* out, const double* x, const double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + y[i];
}

void adds_ref(double* out, const double* x, double c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + c;
}

double vmin_ref(const double* x, std::size_t n) {
    double m = x[0];
    for (std::size_t i = 1; i < n; ++i)
        if (x[i] < m) m = x[i];
    return m;
}

double vmax_ref(const double* x, std::size_t n) {
    double m = x[0];
    for (std::size_t i = 1; i < n; ++i)
        if (x[i] > m) m = x[i];
    return m;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {"scalar", dot_ref,  sum_ref,  scale_ref,
                            axpy_ref, add_ref,  adds_ref, vmin_ref,
                            vmax_ref};
    return ops;
}

}  // namespace riskgeom::kernels
