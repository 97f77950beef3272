#pragma once

#include <cstdint>
#include <vector>

#include "mclab/geometry.hpp"
#include "mclab/rng.hpp"

namespace mclab {

// Full configuration of one diffusion run. The transmitter sphere sits at
// the origin; the receiver sphere is centred on the z axis at
// (0, 0, r_T + d + r_R), i.e. d is the surface-to-surface gap. The vessel is
// an infinite circular cylinder of radius vessel_radius around the z axis.
struct ChannelParams {
    double transmitter_radius = 1.0; // r_T
    double receiver_radius = 1.0;    // r_R
    double gap = 1.0;                // d, surface-to-surface along z
    double diffusion = 1.0;          // D, length^2 / time
    double vessel_radius = 2.0;      // R_v
    int molecules = 1000;            // N
    int steps = 3000;                // T
    double dt = 0.01;                // step duration
    uint64_t seed = 0;

    Point3 receiver_center() const {
        return Point3{0.0, 0.0, transmitter_radius + gap + receiver_radius};
    }

    // Throws std::invalid_argument when any invariant is broken.
    void validate() const;
};

// Per-step cumulative absorption counts plus the derived mAP.
struct SimResult {
    std::vector<long> cumulative_hits; // length = params.steps, non-decreasing
    double map = 0.0;                  // (1/T) * sum_t hits[t] / N
    ChannelParams params;              // echo of the configuration used
};

// Uniform point on the sphere surface of the given radius around center.
// Consumes exactly two uniform draws: z = 2u1 - 1, phi = 2*pi*u2.
Point3 sample_transmitter_point(const Point3& center, double radius, RngEngine& rng);

// One Brownian step: each coordinate gets an independent N(0, 2*D*dt) draw
// (variance 2*D*dt, i.e. standard deviation sqrt(2*D*dt)).
Point3 diffusion_step(const Point3& p, double diffusion, double dt, RngEngine& rng);

// Time-average of the per-step cumulative precision hits[t] / n.
double compute_map(const std::vector<long>& cumulative_hits, long n);

// Runs the full release / diffuse / reflect / absorb loop. Randomness is
// consumed in a fixed order: first one release draw per molecule in index
// order, then per step every still-alive molecule in index order, so the
// result is bit-identical across runs for a given seed.
SimResult simulate_channel(const ChannelParams& params);

} // namespace mclab
