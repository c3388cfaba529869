// AVX2 variants of the lattice kernels. Compiled with -mavx2 on x86-64
// (see src/CMakeLists.txt); only reached after the runtime CPU probe in
// kernels_dispatch.cpp. Plain mul/add intrinsics, no FMA: each lane must
// round exactly like the scalar reference.

#include "kernels_impl.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

namespace orelax::kernels::detail {
namespace {

void transport_interior_avx2(const double* w, const double* z, double* w_out,
                             double* z_out, std::size_t n, double cz,
                             double cw) {
    const std::size_t end = n - 1;
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d vcz = _mm256_set1_pd(cz);
    const __m256d vcw = _mm256_set1_pd(cw);
    std::size_t i = 1;
    for (; i + 4 <= end; i += 4) {
        const __m256d wm = _mm256_loadu_pd(w + i - 1);
        const __m256d wp = _mm256_loadu_pd(w + i + 1);
        const __m256d zm = _mm256_loadu_pd(z + i - 1);
        const __m256d zp = _mm256_loadu_pd(z + i + 1);
        const __m256d wn =
            _mm256_add_pd(_mm256_mul_pd(_mm256_add_pd(wm, wp), half),
                          _mm256_mul_pd(_mm256_sub_pd(zm, zp), vcz));
        const __m256d zn =
            _mm256_add_pd(_mm256_mul_pd(_mm256_add_pd(zm, zp), half),
                          _mm256_mul_pd(_mm256_sub_pd(wm, wp), vcw));
        _mm256_storeu_pd(w_out + i, wn);
        _mm256_storeu_pd(z_out + i, zn);
    }
    for (; i < end; ++i) {
        w_out[i] = transport_w(w[i - 1], w[i + 1], z[i - 1], z[i + 1], cz);
        z_out[i] = transport_z(z[i - 1], z[i + 1], w[i - 1], w[i + 1], cw);
    }
}

void relax_instant_avx2(const double* w, double* z, std::size_t n, double c) {
    const __m256d vc = _mm256_set1_pd(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d e = _mm256_mul_pd(vc, _mm256_loadu_pd(w + i));
        const __m256d zn =
            _mm256_sub_pd(_mm256_add_pd(e, e), _mm256_loadu_pd(z + i));
        _mm256_storeu_pd(z + i, zn);
    }
    for (; i < n; ++i) {
        z[i] = relax_instant_point(w[i], z[i], c);
    }
}

void relax_blend_avx2(const double* w, double* z, std::size_t n, double c,
                      double theta) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vt = _mm256_set1_pd(theta);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d e = _mm256_mul_pd(vc, _mm256_loadu_pd(w + i));
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(z + i), e);
        const __m256d zn = _mm256_add_pd(e, _mm256_mul_pd(vt, d));
        _mm256_storeu_pd(z + i, zn);
    }
    for (; i < n; ++i) {
        z[i] = relax_blend_point(w[i], z[i], c, theta);
    }
}

const KernelTable avx2_kernels = {
    transport_interior_avx2,
    relax_instant_avx2,
    relax_blend_avx2,
};

}  // namespace

const KernelTable* avx2_table() { return &avx2_kernels; }

}  // namespace orelax::kernels::detail

#else

namespace orelax::kernels::detail {

const KernelTable* avx2_table() { return nullptr; }

}  // namespace orelax::kernels::detail

#endif
