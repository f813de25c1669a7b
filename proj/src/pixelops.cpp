#include "tabforge/pixelops.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace tabforge::pixelops {
namespace {

void fill_span_scalar(std::uint8_t* dst, std::size_t count, std::uint8_t r, std::uint8_t g,
                      std::uint8_t b) {
    for (std::size_t i = 0; i < count; ++i) {
        dst[3 * i + 0] = r;
        dst[3 * i + 1] = g;
        dst[3 * i + 2] = b;
    }
}

void blend_span_scalar(std::uint8_t* dst, const std::uint8_t* cov, const std::uint8_t* fg96,
                       std::size_t bytes) {
    for (std::size_t i = 0; i < bytes; ++i) {
        unsigned c = cov[i];
        unsigned x = fg96[i % 96] * c + dst[i] * (255u - c) + 127u;
        dst[i] = static_cast<std::uint8_t>(x / 255u);
    }
}

std::uint64_t count_mismatch_scalar(const std::uint8_t* px, std::size_t count, std::uint8_t r,
                                    std::uint8_t g, std::uint8_t b) {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < count; ++i)
        n += (px[3 * i] != r || px[3 * i + 1] != g || px[3 * i + 2] != b) ? 1 : 0;
    return n;
}

std::uint64_t count_nonzero_scalar(const std::uint8_t* buf, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += buf[i] != 0;
    return c;
}

constexpr Kernels kScalar{fill_span_scalar, blend_span_scalar, count_mismatch_scalar,
                          count_nonzero_scalar, "scalar"};

std::atomic<const Kernels*> g_active{nullptr};

const Kernels* pick_default() {
    if (const char* env = std::getenv("TABFORGE_SIMD")) {
        std::string want(env);
        if (want == "scalar") return &kScalar;
        if (want == "avx2" && avx2_kernels()) return avx2_kernels();
        // "auto" or anything unavailable falls through to detection.
    }
    if (const Kernels* k = avx2_kernels()) return k;
    return &kScalar;
}

}  // namespace

void make_pattern96(std::uint8_t r, std::uint8_t g, std::uint8_t b, std::uint8_t out[96]) {
    for (int i = 0; i < 32; ++i) {
        out[3 * i + 0] = r;
        out[3 * i + 1] = g;
        out[3 * i + 2] = b;
    }
}

const Kernels& scalar_kernels() { return kScalar; }

const Kernels& active() {
    const Kernels* k = g_active.load(std::memory_order_acquire);
    if (!k) {
        k = pick_default();
        g_active.store(k, std::memory_order_release);
    }
    return *k;
}

bool select(const std::string& name) {
    if (name == "scalar") {
        g_active.store(&kScalar, std::memory_order_release);
        return true;
    }
    if (name == "avx2") {
        if (const Kernels* k = avx2_kernels()) {
            g_active.store(k, std::memory_order_release);
            return true;
        }
        return false;
    }
    if (name == "auto") {
        g_active.store(pick_default(), std::memory_order_release);
        return true;
    }
    return false;
}

const char* active_name() { return active().name; }

}  // namespace tabforge::pixelops
