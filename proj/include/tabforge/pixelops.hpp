#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace tabforge::pixelops {

// Inner-loop kernels for the rasterizer. The scalar implementations are the
// reference; the AVX2 variants must produce bit-identical results and are
// equivalence-tested against them. Selection happens once at runtime, either
// automatically from CPU capabilities or via the TABFORGE_SIMD environment
// variable ("scalar", "avx2", "auto").
struct Kernels {
    // Fills `count` RGB pixels starting at dst.
    void (*fill_span)(std::uint8_t* dst, std::size_t count, std::uint8_t r, std::uint8_t g,
                      std::uint8_t b);

    // Alpha-blends a foreground pattern into dst over `bytes` bytes:
    //   dst[i] = (fg[i] * cov[i] + dst[i] * (255 - cov[i]) + 127) / 255
    // cov holds per-byte coverage (the caller expands per-pixel coverage to
    // three bytes); fg96 is a 96-byte repeating RGB pattern aligned to dst[0].
    void (*blend_span)(std::uint8_t* dst, const std::uint8_t* cov, const std::uint8_t* fg96,
                       std::size_t bytes);

    // Number of RGB pixels in the span that differ from (r,g,b) in any channel.
    std::uint64_t (*count_mismatch)(const std::uint8_t* px, std::size_t count, std::uint8_t r,
                                    std::uint8_t g, std::uint8_t b);

    // Number of non-zero bytes.
    std::uint64_t (*count_nonzero)(const std::uint8_t* buf, std::size_t n);

    const char* name;
};

const Kernels& scalar_kernels();

// nullptr when the binary lacks AVX2 support or the CPU does not have it.
const Kernels* avx2_kernels();

// The active implementation (lazily selected).
const Kernels& active();

// Force an implementation by name; returns false (and leaves the selection
// unchanged) when it is unavailable.
bool select(const std::string& name);

const char* active_name();

// Builds the 96-byte repeating RGB pattern blend_span/fill use internally.
void make_pattern96(std::uint8_t r, std::uint8_t g, std::uint8_t b, std::uint8_t out[96]);

}  // namespace tabforge::pixelops
