#include <cstdlib>

#include "embkit/kernels.hpp"

namespace embkit::kernels {

const Ops& active_ops() {
    static const Ops* selected = [] {
        if (const char* env = std::getenv("EMBKIT_DISABLE_SIMD"); env && env[0] == '1') {
            return &scalar_ops();
        }
#if defined(__x86_64__) || defined(__i386__)
        if (const Ops* avx2 = avx2_ops();
            avx2 && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
            return avx2;
        }
#endif
        return &scalar_ops();
    }();
    return *selected;
}

}  // namespace embkit::kernels
