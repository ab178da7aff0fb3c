#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

// Tail handling and lane reduction shared by the scalar and SIMD dot/sumsq
// kernels. The lane layout (element i -> lane i mod 8) and the reduction
// order below define the kernel's exact result; both variants must use them.

namespace embkit::kernels::detail {

inline double reduce8_dot(double lane[8], const float* x, const float* y, std::size_t i,
                          std::size_t n) {
    for (std::size_t j = 0; i < n; ++i, ++j) {
        lane[j] += static_cast<double>(x[i]) * static_cast<double>(y[i]);
    }
    const double p0 = lane[0] + lane[4];
    const double p1 = lane[1] + lane[5];
    const double p2 = lane[2] + lane[6];
    const double p3 = lane[3] + lane[7];
    return ((p0 + p1) + p2) + p3;
}

inline double reduce8_sumsq(double lane[8], const float* x, std::size_t i, std::size_t n) {
    return reduce8_dot(lane, x, x, i, n);
}

// Round-to-nearest-even (the default FP environment), clamp to [-127, 127].
// Matches _mm256_cvtps_epi32 under the default MXCSR rounding mode.
inline std::int8_t quantize_one(float x, float scale) {
    long v = std::lrintf(x / scale);
    if (v < -127) v = -127;
    if (v > 127) v = 127;
    return static_cast<std::int8_t>(v);
}

}  // namespace embkit::kernels::detail
