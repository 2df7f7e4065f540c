// Runtime backend selection.  The AVX2 table is used only when both the
// build produced it and the host CPU reports the feature; everything else
// falls back to the scalar reference kernels.

#include "riskgeom/kernels.hpp"

namespace riskgeom::kernels {

// Defined in kernels_avx2.cpp (returns nullptr when compiled out).
const Ops* avx2_ops_impl();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops* select_backend() {
    if (const Ops* v = avx2_ops_impl(); v != nullptr && cpu_has_avx2()) return v;
    return &scalar_ops();
}

}  // namespace

const Ops* avx2_ops() {
    static const Ops* ops = cpu_has_avx2() ? avx2_ops_impl() : nullptr;
    return ops;
}

const Ops& active_ops() {
    static const Ops* ops = select_backend();
    return *ops;
}

}  // namespace riskgeom::kernels
