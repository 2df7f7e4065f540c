#pragma once

#include <cstddef>

// Low-level array kernels used by the distribution / region layers.
//
// Every kernel has a portable scalar reference implementation and may have
// vectorised variants compiled for specific ISAs.  A backend is selected once
// at runtime from CPU capabilities; callers go through the dispatching
// wrappers below and never depend on which variant runs.  The reference
// implementations stay available unconditionally so tests can assert
// scalar/vector equivalence.

namespace riskgeom::kernels {

struct Ops {
    const char* name;
    double (*dot)(const double* x, const double* y, std::size_t n);
    double (*sum)(const double* x, std::size_t n);
    // out[i] = a * x[i]
    void (*scale)(double* out, const double* x, double a, std::size_t n);
    // out[i] += a * x[i]
    void (*axpy)(double* out, const double* x, double a, std::size_t n);
    // out[i] = x[i] + y[i]   (aliasing out == x allowed)
    void (*add)(double* out, const double* x, const double* y, std::size_t n);
    // out[i] = x[i] + c
    void (*adds)(double* out, const double* x, double c, std::size_t n);
    double (*vmin)(const double* x, std::size_t n);
    double (*vmax)(const double* x, std::size_t n);
};

// Portable reference backend (always present).
const Ops& scalar_ops();

// AVX2/FMA backend, or nullptr when unsupported by the build or the CPU.
const Ops* avx2_ops();

// Best backend for this process; resolved once.
const Ops& active_ops();

inline double dot(const double* x, const double* y, std::size_t n) { return active_ops().dot(x, y, n); }
inline double sum(const double* x, std::size_t n) { return active_ops().sum(x, n); }
inline void scale(double* out, const double* x, double a, std::size_t n) { active_ops().scale(out, x, a, n); }
inline void axpy(double* out, const double* x, double a, std::size_t n) { active_ops().axpy(out, x, a, n); }
inline void add(double* out, const double* x, const double* y, std::size_t n) { active_ops().add(out, x, y, n); }
inline void adds(double* out, const double* x, double c, std::size_t n) { active_ops().adds(out, x, c, n); }
inline double vmin(const double* x, std::size_t n) { return active_ops().vmin(x, n); }
inline double vmax(const double* x, std::size_t n) { return active_ops().vmax(x, n); }

}  // namespace riskgeom::kernels
