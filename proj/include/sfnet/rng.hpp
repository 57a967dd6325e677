#pragma once

#include <cstdint>
#include <random>

namespace sfnet {

/// SplitMix64 finalizer. Used both to expand seeds and to derive
/// per-replica seeds; see derive_seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of replica `replica` in sweep cell `cell`:
///   splitmix64(splitmix64(splitmix64(master) ^ cell) ^ replica)
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t cell, std::uint64_t replica) noexcept {
    return splitmix64(splitmix64(splitmix64(master) ^ cell) ^ replica);
}

/// Deterministic random stream. Draws are produced from mt19937_64 with the
/// uniform mapping done here (not through <random> distributions, whose
/// output is library-specific), so a seed reproduces on any platform.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // Lemire-style rejection to avoid modulo bias.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace sfnet
