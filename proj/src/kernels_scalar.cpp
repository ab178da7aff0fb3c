#include <algorithm>
#include <cmath>

#include "embkit/kernels.hpp"
#include "kernels_lanes.h"

namespace embkit::kernels {
namespace {

double dot_scalar(const float* x, const float* y, std::size_t n) {
    double lane[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        lane[0] += static_cast<double>(x[i + 0]) * static_cast<double>(y[i + 0]);
        lane[1] += static_cast<double>(x[i + 1]) * static_cast<double>(y[i + 1]);
        lane[2] += static_cast<double>(x[i + 2]) * static_cast<double>(y[i + 2]);
        lane[3] += static_cast<double>(x[i + 3]) * static_cast<double>(y[i + 3]);
        lane[4] += static_cast<double>(x[i + 4]) * static_cast<double>(y[i + 4]);
        lane[5] += static_cast<double>(x[i + 5]) * static_cast<double>(y[i + 5]);
        lane[6] += static_cast<double>(x[i + 6]) * static_cast<double>(y[i + 6]);
        lane[7] += static_cast<double>(x[i + 7]) * static_cast<double>(y[i + 7]);
    }
    return detail::reduce8_dot(lane, x, y, i, n);
}

double sumsq_scalar(const float* x, std::size_t n) { return dot_scalar(x, x, n); }

void scale_scalar(const float* x, float s, float* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * s;
}

float max_abs_scalar(const float* x, std::size_t n) {
    float m = 0.0f;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
    return m;
}

void quantize_scalar(const float* x, float scale, std::int8_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = detail::quantize_one(x[i], scale);
}

void dequantize_scalar(const std::int8_t* q, float scale, float* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<float>(q[i]) * scale;
}

constexpr Ops kScalarOps = {
    "scalar",        dot_scalar,      sumsq_scalar,      scale_scalar,
    max_abs_scalar,  quantize_scalar, dequantize_scalar,
};

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

}  // namespace embkit::kernels
