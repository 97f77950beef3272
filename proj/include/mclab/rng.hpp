#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace mclab {

// All stochastic code draws from one explicit engine type so that a run is
// fully determined by its seed on a given build.
using RngEngine = std::mt19937_64;

// Child-seed derivation (splitmix64). The recipe is pure 64-bit integer
// arithmetic with wrap-around, so any implementation in any language can
// reproduce the same per-row seeds:
//
//   state = base_seed + (index + 1) * 0x9E3779B97F4A7C15   (mod 2^64)
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
uint64_t stable_mix(uint64_t base_seed, uint64_t index);

// Uniform draw in [0, n) by rejection sampling on the raw 64-bit output,
// free of modulo bias. n must be nonzero.
uint64_t draw_below(RngEngine& rng, uint64_t n);

// Seeded Fisher-Yates permutation of {0, ..., n-1}. Uses draw_below, so the
// permutation depends only on the seed and n.
std::vector<size_t> shuffled_indices(size_t n, uint64_t seed);

} // namespace mclab
