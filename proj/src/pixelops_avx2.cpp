// AVX2 variants of the raster kernels. This translation unit is the only one
// compiled with -mavx2; callers reach it through the runtime dispatch table.

#include "tabforge/pixelops.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define TABFORGE_HAVE_AVX2_TU 1
#include <immintrin.h>
#else
#define TABFORGE_HAVE_AVX2_TU 0
#endif

namespace tabforge::pixelops {

#if TABFORGE_HAVE_AVX2_TU
namespace {

void fill_span_avx2(std::uint8_t* dst, std::size_t count, std::uint8_t r, std::uint8_t g,
                    std::uint8_t b) {
    alignas(32) std::uint8_t pattern[96];
    make_pattern96(r, g, b, pattern);
    std::size_t bytes = count * 3;
    std::size_t i = 0;
    const __m256i p0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(pattern));
    const __m256i p1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(pattern + 32));
    const __m256i p2 = _mm256_load_si256(reinterpret_cast<const __m256i*>(pattern + 64));
    for (; i + 96 <= bytes; i += 96) {
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), p0);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 32), p1);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 64), p2);
    }
    for (; i < bytes; i += 3) {
        dst[i] = r;
        dst[i + 1] = g;
        dst[i + 2] = b;
    }
}

// Exact (x + 127) / 255 over 16-bit lanes: t = x + 127; (t + 1 + (t >> 8)) >> 8.
// Proven equal to the scalar division exhaustively in the unit tests.
inline __m256i div255_round(__m256i x) {
    const __m256i bias = _mm256_set1_epi16(127);
    const __m256i one = _mm256_set1_epi16(1);
    __m256i t = _mm256_add_epi16(x, bias);
    __m256i q = _mm256_add_epi16(_mm256_add_epi16(t, one), _mm256_srli_epi16(t, 8));
    return _mm256_srli_epi16(q, 8);
}

inline __m256i blend16(__m256i dst16, __m256i cov16, __m256i fg16) {
    const __m256i full = _mm256_set1_epi16(255);
    __m256i inv = _mm256_sub_epi16(full, cov16);
    __m256i x = _mm256_add_epi16(_mm256_mullo_epi16(fg16, cov16), _mm256_mullo_epi16(dst16, inv));
    return div255_round(x);
}

void blend_span_avx2(std::uint8_t* dst, const std::uint8_t* cov, const std::uint8_t* fg96,
                     std::size_t bytes) {
    std::size_t i = 0;
    std::size_t pattern_off = 0;
    for (; i + 32 <= bytes; i += 32) {
        __m128i dlo = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
        __m128i dhi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i + 16));
        __m128i clo = _mm_loadu_si128(reinterpret_cast<const __m128i*>(cov + i));
        __m128i chi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(cov + i + 16));
        __m128i flo = _mm_loadu_si128(reinterpret_cast<const __m128i*>(fg96 + pattern_off));
        __m128i fhi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(fg96 + pattern_off + 16));

        __m256i out_lo = blend16(_mm256_cvtepu8_epi16(dlo), _mm256_cvtepu8_epi16(clo),
                                 _mm256_cvtepu8_epi16(flo));
        __m256i out_hi = blend16(_mm256_cvtepu8_epi16(dhi), _mm256_cvtepu8_epi16(chi),
                                 _mm256_cvtepu8_epi16(fhi));
        __m256i packed = _mm256_packus_epi16(out_lo, out_hi);
        packed = _mm256_permute4x64_epi64(packed, 0xD8);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), packed);
        pattern_off = (pattern_off + 32) % 96;
    }
    for (; i < bytes; ++i) {
        unsigned c = cov[i];
        unsigned x = fg96[i % 96] * c + dst[i] * (255u - c) + 127u;
        dst[i] = static_cast<std::uint8_t>(x / 255u);
    }
}

std::uint64_t count_mismatch_avx2(const std::uint8_t* px, std::size_t count, std::uint8_t r,
                                  std::uint8_t g, std::uint8_t b) {
    alignas(32) std::uint8_t pattern[96];
    make_pattern96(r, g, b, pattern);
    const __m256i p0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(pattern));
    const __m256i p1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(pattern + 32));
    const __m256i p2 = _mm256_load_si256(reinterpret_cast<const __m256i*>(pattern + 64));

    // Bits at positions 0, 3, 6, ... inside a 96-bit mask.
    constexpr unsigned __int128 kEvery3 = ((static_cast<unsigned __int128>(0x4924924924924924ULL) << 64) |
                                           0x9249249249249249ULL);

    std::uint64_t equal = 0;
    std::size_t i = 0;
    for (; i + 32 <= count; i += 32) {
        const std::uint8_t* base = px + 3 * i;
        auto m0 = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base)), p0)));
        auto m1 = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base + 32)), p1)));
        auto m2 = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base + 64)), p2)));
        unsigned __int128 e = (static_cast<unsigned __int128>(m2) << 64) |
                              (static_cast<unsigned __int128>(m1) << 32) | m0;
        unsigned __int128 all3 = e & (e >> 1) & (e >> 2) & kEvery3;
        equal += static_cast<std::uint64_t>(__builtin_popcountll(static_cast<std::uint64_t>(all3)));
        equal += static_cast<std::uint64_t>(__builtin_popcountll(static_cast<std::uint64_t>(all3 >> 64)));
    }
    std::uint64_t mismatch = static_cast<std::uint64_t>(i) - equal;
    for (; i < count; ++i)
        mismatch += (px[3 * i] != r || px[3 * i + 1] != g || px[3 * i + 2] != b) ? 1 : 0;
    return mismatch;
}

std::uint64_t count_nonzero_avx2(const std::uint8_t* buf, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    std::uint64_t zeros = 0;
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(buf + i));
        auto m = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
        zeros += static_cast<std::uint64_t>(__builtin_popcount(m));
    }
    std::uint64_t nonzero = static_cast<std::uint64_t>(i) - zeros;
    for (; i < n; ++i) nonzero += buf[i] != 0;
    return nonzero;
}

constexpr Kernels kAvx2{fill_span_avx2, blend_span_avx2, count_mismatch_avx2, count_nonzero_avx2,
                        "avx2"};

}  // namespace

const Kernels* avx2_kernels() {
    static const Kernels* available = [] {
        return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
    }();
    return available;
}

#else

const Kernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace tabforge::pixelops
