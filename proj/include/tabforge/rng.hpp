#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace tabforge {

// FNV-1a, for deriving seeds from string ids portably (std::hash is
// implementation-defined).
inline std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

// SplitMix64 finalizer. Full-avalanche mix used both as the RNG step and for
// deriving independent seed streams from (master seed, index) pairs.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seed for table `index` under `master_seed`. Stable across platforms and
// independent of generation order, which is what makes parallel builds
// reproducible. Indices above 2^40 are reserved for internal streams
// (retries, competition picks, split shuffles).
inline std::uint64_t derive_table_seed(std::uint64_t master_seed, std::uint64_t index) {
    return mix64(mix64(master_seed) ^ (index + 0x632BE59BD9B4E019ULL));
}

namespace seed_stream {
// Disjoint index spaces layered on derive_table_seed.
constexpr std::uint64_t kRetryBase = 1ULL << 40;        // + index * 256 + attempt
constexpr std::uint64_t kCompetitionBase = 1ULL << 41;  // + index
constexpr std::uint64_t kSplitShuffleBase = 1ULL << 42; // + theme
constexpr std::uint64_t kCorruptionBase = 1ULL << 43;   // + word index
}  // namespace seed_stream

// Small deterministic generator (SplitMix64 stream). Distribution helpers are
// hand-rolled so output is identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound). Lemire's multiply-shift with rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound < 2) return 0;
        while (true) {
            std::uint64_t x = next();
            __uint128_t m = static_cast<__uint128_t>(x) * bound;
            auto low = static_cast<std::uint64_t>(m);
            if (low >= bound || low >= (0ULL - bound) % bound)
                return static_cast<std::uint64_t>(m >> 64);
        }
    }

    // Inclusive integer range.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform double in [0, 1).
    double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return real01() < p; }

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[below(items.size())];
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace tabforge
