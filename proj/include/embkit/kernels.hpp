#pragma once

#include <cstddef>
#include <cstdint>

namespace embkit::kernels {

// f32 row kernels behind the vector operations. Two implementations exist: a
// scalar reference and an AVX2 variant selected once at startup. Dot products
// accumulate into eight interleaved double lanes (element i -> lane i mod 8)
// reduced in a fixed order; an f32*f32 product is exact in double, so the two
// variants are bit-identical and the equivalence tests assert exact equality.
struct Ops {
    const char* name;
    double (*dot)(const float* x, const float* y, std::size_t n);
    double (*sumsq)(const float* x, std::size_t n);
    void (*scale)(const float* x, float s, float* out, std::size_t n);
    float (*max_abs)(const float* x, std::size_t n);
    void (*quantize_i8)(const float* x, float scale, std::int8_t* out, std::size_t n);
    void (*dequantize_i8)(const std::int8_t* q, float scale, float* out, std::size_t n);
};

const Ops& scalar_ops();

// Null when the build target is not x86-64.
const Ops* avx2_ops();

// Runtime selection: AVX2 when the CPU supports it, scalar otherwise.
// Setting EMBKIT_DISABLE_SIMD=1 forces the scalar path.
const Ops& active_ops();

inline double dot(const float* x, const float* y, std::size_t n) {
    return active_ops().dot(x, y, n);
}
inline double sumsq(const float* x, std::size_t n) { return active_ops().sumsq(x, n); }
inline void scale(const float* x, float s, float* out, std::size_t n) {
    active_ops().scale(x, s, out, n);
}
inline float max_abs(const float* x, std::size_t n) { return active_ops().max_abs(x, n); }
inline void quantize_i8(const float* x, float s, std::int8_t* out, std::size_t n) {
    active_ops().quantize_i8(x, s, out, n);
}
inline void dequantize_i8(const std::int8_t* q, float s, float* out, std::size_t n) {
    active_ops().dequantize_i8(q, s, out, n);
}

}  // namespace embkit::kernels
