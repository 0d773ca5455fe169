// Runtime backend selection.

#include "cptkit/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace cptkit::kernels {

bool avx2_supported()
{
#if defined(__x86_64__) || defined(__i386__)
    return avx2_backend() != nullptr && __builtin_cpu_supports("avx2") &&
           __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

std::atomic<const Backend*> g_active{nullptr};

const Backend* pick_default()
{
    if (const char* env = std::getenv("CPTKIT_SIMD")) {
        const std::string want(env);
        if (want == "scalar")
            return &scalar_backend();
        if (want == "avx2" && avx2_supported())
            return avx2_backend();
        // "auto" or anything unusable falls through to detection.
    }
    return avx2_supported() ? avx2_backend() : &scalar_backend();
}

} // namespace

const Backend& active()
{
    const Backend* b = g_active.load(std::memory_order_acquire);
    if (!b) {
        b = pick_default();
        g_active.store(b, std::memory_order_release);
    }
    return *b;
}

bool select_backend(std::string_view name)
{
    if (name == "scalar") {
        g_active.store(&scalar_backend(), std::memory_order_release);
        return true;
    }
    if (name == "avx2") {
        if (!avx2_supported())
            return false;
        g_active.store(avx2_backend(), std::memory_order_release);
        return true;
    }
    if (name == "auto") {
        g_active.store(avx2_supported() ? avx2_backend() : &scalar_backend(),
                       std::memory_order_release);
        return true;
    }
    return false;
}

} // namespace cptkit::kernels
