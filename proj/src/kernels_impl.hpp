#pragma once

#include "orelax/kernels.hpp"

// Per-point update expressions shared by all backends. The SIMD kernels
// evaluate exactly these operation trees lane-wise; any deviation breaks
// the bitwise equivalence contract.

namespace orelax::kernels::detail {

inline double transport_w(double wm, double wp, double zm, double zp,
                          double cz) {
    return (wm + wp) * 0.5 + (zm - zp) * cz;
}

inline double transport_z(double zm, double zp, double wm, double wp,
                          double cw) {
    return (zm + zp) * 0.5 + (wm - wp) * cw;
}

inline double relax_instant_point(double w, double z, double c) {
    const double e = c * w;
    return (e + e) - z;
}

inline double relax_blend_point(double w, double z, double c, double theta) {
    const double e = c * w;
    return e + theta * (z - e);
}

extern const KernelTable scalar_table;

// Null when the build target has no AVX2 code path.
const KernelTable* avx2_table();

}  // namespace orelax::kernels::detail
