#pragma once

#include <cstdint>
#include <utility>

namespace negbounds::rng {

/// SplitMix64 finalizer. Full-period bijective mixer on 64-bit words.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Derive a per-trial seed from (campaign seed, trial index); counter-based
/// so scheduled order of trials cannot affect results.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial_index) {
    return mix64(seed ^ mix64(trial_index + 0x632BE59BD9B4E019ULL));
}

/// Counter-based generator: output k = mix(seed, stream, k). Fully specified
/// here so campaigns reproduce bit-for-bit on any platform.
class CounterRng {
   public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix64(seed ^ mix64(stream))) {}

    std::uint64_t next_u64() { return mix64(state_ ^ mix64(counter_++)); }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal pair via Box-Muller.
    std::pair<double, double> next_gaussian_pair();

    double next_gaussian();

   private:
    std::uint64_t state_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace negbounds::rng
