#pragma once

#include <cstdint>

#include "achull/geom.hpp"

namespace achull {

// splitmix64: the fixed PRNG for every seeded corpus, so generated data is
// bit-identical across platforms and implementations.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n); n > 0. Rejection-free modulo is fine here:
    // corpus quality does not hinge on the negligible modulo bias.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }
};

struct GenConfig {
    int n = 3;                    // vertex count, >= 3
    std::uint64_t seed = 0;
    long max_2opt_rounds = -1;    // applied 2-opt moves; < 0 means 10 * n * n
};

struct GenOutcome {
    SimplePolygon polygon;
    std::uint64_t seed_used;  // final seed after deterministic reseeding
    int reseeds;              // how many times seed+1 reseeding kicked in
};

// n points sampled uniformly in the unit square (exact duplicates resampled),
// arranged in a random cycle, then uncrossed by 2-opt reversals until simple;
// output is CCW. If the move budget runs out the generator restarts from
// seed + 1; the outcome reports the seed that finally produced the polygon.
SimplePolygon random_simple_polygon(const GenConfig& cfg);
GenOutcome random_simple_polygon_traced(const GenConfig& cfg);

// Translate the bounding box corner to the origin and scale uniformly so the
// longer side becomes 1. Idempotent; preserves simplicity, orientation and
// interior angles.
SimplePolygon scale_to_unit(const SimplePolygon& poly);

// Seed for polygon k of a batch: one splitmix64 step of (batch_seed XOR k),
// making batches order-independent and parallelizable.
std::uint64_t batch_polygon_seed(std::uint64_t batch_seed, std::uint64_t k);

}  // namespace achull
