#pragma once

#include <cstdint>

namespace vlab::rng {

/// Seeded 64-bit generator: splitmix64 (Vigna, 2015). The whole state is one
/// word and the update is a handful of shifts and multiplies, so seeded
/// sweeps reproduce bit-for-bit in any language. Reference stream, seed 0:
/// 0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * uniform();
    }

private:
    std::uint64_t state_;
};

} // namespace vlab::rng
