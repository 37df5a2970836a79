// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dockchain {

// Deterministic random source. mt19937_64 output is pinned by the standard;
// the double conversions are done by hand because the std distributions are
// implementation-defined and traces must be bit-identical for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return (engine_() >> 11) * 0x1.0p-53; }

    // Bernoulli draw: true with probability p.
    bool flip(double p) { return uniform01() < p; }

    // Standard normal via Box-Muller (one value per call, no caching, so the
    // stream position is a pure function of the call count).
    double gaussian() {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Derives an independent stream for substream `index` of a parent seed.
    static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
        // splitmix64 over (seed, index); good diffusion, stable across platforms
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace dockchain
