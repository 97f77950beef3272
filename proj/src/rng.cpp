#include "mclab/rng.hpp"

#include <limits>
#include <stdexcept>

namespace mclab {

uint64_t stable_mix(uint64_t base_seed, uint64_t index) {
    uint64_t z = base_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t draw_below(RngEngine& rng, uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("draw_below: n must be nonzero");
    }
    const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
    uint64_t v = rng();
    while (v >= limit) {
        v = rng();
    }
    return v % n;
}

std::vector<size_t> shuffled_indices(size_t n, uint64_t seed) {
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) {
        idx[i] = i;
    }
    RngEngine rng(seed);
    for (size_t i = n; i > 1; --i) {
        const size_t j = static_cast<size_t>(draw_below(rng, i));
        std::swap(idx[i - 1], idx[j]);
    }
    return idx;
}

} // namespace mclab
