#pragma once

#include <cstdint>

namespace contestlab {

// SplitMix64 generator with cheap keyed substreams. stream(seed, id) yields a
// generator whose draws are a deterministic function of (seed, id) alone, so
// trial i of a simulation can be replayed in isolation and trials can be
// dealt to any number of workers without coordination.
class Rng {
  public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    static Rng stream(std::uint64_t seed, std::uint64_t id) {
        return Rng(mix(mix(seed + 0x9E3779B97F4A7C15ull) ^ mix(id + 0xD1B54A32D192ED03ull)));
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in {0, ..., bound - 1}, unbiased via rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace contestlab
