#include "embkit/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "kernels_lanes.h"

namespace embkit::kernels {
namespace {

// acc0 carries lanes 0..3 (elements i..i+3), acc1 lanes 4..7. The fused
// multiply-add is exact here because each f32*f32 product fits a double, so
// the result matches the scalar mul-then-add reference bit for bit.
double dot_avx2(const float* x, const float* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d x0 = _mm256_cvtps_pd(_mm_loadu_ps(x + i));
        const __m256d y0 = _mm256_cvtps_pd(_mm_loadu_ps(y + i));
        const __m256d x1 = _mm256_cvtps_pd(_mm_loadu_ps(x + i + 4));
        const __m256d y1 = _mm256_cvtps_pd(_mm_loadu_ps(y + i + 4));
        acc0 = _mm256_fmadd_pd(x0, y0, acc0);
        acc1 = _mm256_fmadd_pd(x1, y1, acc1);
    }
    alignas(32) double lane[8];
    _mm256_store_pd(lane, acc0);
    _mm256_store_pd(lane + 4, acc1);
    return detail::reduce8_dot(lane, x, y, i, n);
}

double sumsq_avx2(const float* x, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d x0 = _mm256_cvtps_pd(_mm_loadu_ps(x + i));
        const __m256d x1 = _mm256_cvtps_pd(_mm_loadu_ps(x + i + 4));
        acc0 = _mm256_fmadd_pd(x0, x0, acc0);
        acc1 = _mm256_fmadd_pd(x1, x1, acc1);
    }
    alignas(32) double lane[8];
    _mm256_store_pd(lane, acc0);
    _mm256_store_pd(lane + 4, acc1);
    return detail::reduce8_sumsq(lane, x, i, n);
}

void scale_avx2(const float* x, float s, float* out, std::size_t n) {
    const __m256 vs = _mm256_set1_ps(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(out + i, _mm256_mul_ps(_mm256_loadu_ps(x + i), vs));
    }
    for (; i < n; ++i) out[i] = x[i] * s;
}

float max_abs_avx2(const float* x, std::size_t n) {
    const __m256 abs_mask = _mm256_castsi256_ps(_mm256_set1_epi32(0x7fffffff));
    __m256 m = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        m = _mm256_max_ps(m, _mm256_and_ps(_mm256_loadu_ps(x + i), abs_mask));
    }
    alignas(32) float t[8];
    _mm256_store_ps(t, m);
    float r = 0.0f;
    for (int j = 0; j < 8; ++j) r = std::max(r, t[j]);
    for (; i < n; ++i) r = std::max(r, std::fabs(x[i]));
    return r;
}

void quantize_avx2(const float* x, float scale, std::int8_t* out, std::size_t n) {
    const __m256 vs = _mm256_set1_ps(scale);
    const __m256i lo = _mm256_set1_epi32(-127);
    const __m256i hi = _mm256_set1_epi32(127);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 v = _mm256_div_ps(_mm256_loadu_ps(x + i), vs);
        __m256i q = _mm256_cvtps_epi32(v);  // nearest-even, as lrintf
        q = _mm256_min_epi32(_mm256_max_epi32(q, lo), hi);
        const __m128i q16 =
            _mm_packs_epi32(_mm256_castsi256_si128(q), _mm256_extracti128_si256(q, 1));
        const __m128i q8 = _mm_packs_epi16(q16, q16);
        _mm_storel_epi64(reinterpret_cast<__m128i*>(out + i), q8);
    }
    for (; i < n; ++i) out[i] = detail::quantize_one(x[i], scale);
}

void dequantize_avx2(const std::int8_t* q, float scale, float* out, std::size_t n) {
    const __m256 vs = _mm256_set1_ps(scale);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m128i bytes = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(q + i));
        const __m256i wide = _mm256_cvtepi8_epi32(bytes);
        _mm256_storeu_ps(out + i, _mm256_mul_ps(_mm256_cvtepi32_ps(wide), vs));
    }
    for (; i < n; ++i) out[i] = static_cast<float>(q[i]) * scale;
}

constexpr Ops kAvx2Ops = {
    "avx2",        dot_avx2,      sumsq_avx2,      scale_avx2,
    max_abs_avx2,  quantize_avx2, dequantize_avx2,
};

}  // namespace

const Ops* avx2_ops() { return &kAvx2Ops; }

}  // namespace embkit::kernels

#else

namespace embkit::kernels {

const Ops* avx2_ops() { return nullptr; }

}  // namespace embkit::kernels

#endif
