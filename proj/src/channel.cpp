#include "mclab/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mclab/errors.hpp"

namespace mclab {

namespace {

// A reflected end point can land outside again when the step grazes the
// wall; re-reflect from the last intersection a few times, then clamp just
// inside the wall.
constexpr int kMaxReflections = 10;
constexpr double kClampFactor = 1.0 - 1e-9;

Point3 clamp_to_wall(const Point3& p, double vessel_radius) {
    const double r = lateral_radius(p);
    const double scale = vessel_radius * kClampFactor / r;
    return Point3{p.x * scale, p.y * scale, p.z};
}

} // namespace

void ChannelParams::validate() const {
    if (!(transmitter_radius > 0.0)) {
        throw std::invalid_argument("transmitter radius must be positive");
    }
    if (!(receiver_radius > 0.0)) {
        throw std::invalid_argument("receiver radius must be positive");
    }
    if (!(gap > 0.0)) {
        throw std::invalid_argument("distance must be positive");
    }
    if (!(diffusion >= 0.0)) {
        throw std::invalid_argument("diffusion coefficient must be non-negative");
    }
    if (!(vessel_radius > std::max(transmitter_radius, receiver_radius))) {
        throw std::invalid_argument("vessel radius must exceed both sphere radii");
    }
    if (molecules < 1) {
        throw std::invalid_argument("molecule count must be at least 1");
    }
    if (steps < 1) {
        throw std::invalid_argument("step count must be at least 1");
    }
    if (!(dt > 0.0)) {
        throw std::invalid_argument("time step must be positive");
    }
}

Point3 sample_transmitter_point(const Point3& center, double radius, RngEngine& rng) {
    if (!(radius > 0.0)) {
        throw std::invalid_argument("sample_transmitter_point: radius must be positive");
    }
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double u1 = uni(rng);
    const double u2 = uni(rng);
    const double z = 2.0 * u1 - 1.0;
    const double phi = 2.0 * std::numbers::pi * u2;
    const double lateral = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Point3{center.x + radius * lateral * std::cos(phi),
                  center.y + radius * lateral * std::sin(phi),
                  center.z + radius * z};
}

Point3 diffusion_step(const Point3& p, double diffusion, double dt, RngEngine& rng) {
    if (diffusion < 0.0) {
        throw std::invalid_argument("diffusion_step: diffusion coefficient must be non-negative");
    }
    if (!(dt > 0.0)) {
        throw std::invalid_argument("diffusion_step: dt must be positive");
    }
    if (diffusion == 0.0) {
        return p;
    }
    std::normal_distribution<double> gauss(0.0, std::sqrt(2.0 * diffusion * dt));
    const double dx = gauss(rng);
    const double dy = gauss(rng);
    const double dz = gauss(rng);
    return Point3{p.x + dx, p.y + dy, p.z + dz};
}

double compute_map(const std::vector<long>& cumulative_hits, long n) {
    if (n < 1) {
        throw std::invalid_argument("compute_map: molecule count must be at least 1");
    }
    if (cumulative_hits.empty()) {
        throw std::invalid_argument("compute_map: empty hit sequence");
    }
    long prev = 0;
    long long total = 0;
    for (size_t i = 0; i < cumulative_hits.size(); ++i) {
        const long h = cumulative_hits[i];
        if (h < prev) {
            throw std::invalid_argument("compute_map: hit sequence decreases at step " + std::to_string(i));
        }
        if (h > n) {
            throw std::invalid_argument("compute_map: hit count exceeds molecule count at step " +
                                        std::to_string(i));
        }
        prev = h;
        total += h;
    }
    return static_cast<double>(total) /
           (static_cast<double>(n) * static_cast<double>(cumulative_hits.size()));
}

SimResult simulate_channel(const ChannelParams& params) {
    params.validate();

    RngEngine rng(params.seed);
    const Point3 origin{0.0, 0.0, 0.0};
    const Point3 receiver = params.receiver_center();
    const double absorb_sq = params.receiver_radius * params.receiver_radius;
    const double wall_sq = params.vessel_radius * params.vessel_radius;

    const int n = params.molecules;
    std::vector<Point3> pos(static_cast<size_t>(n));
    std::vector<char> alive(static_cast<size_t>(n), 1);
    for (int i = 0; i < n; ++i) {
        pos[i] = sample_transmitter_point(origin, params.transmitter_radius, rng);
    }

    SimResult result;
    result.params = params;
    result.cumulative_hits.assign(static_cast<size_t>(params.steps), 0);

    long absorbed = 0;
    for (int step = 0; step < params.steps; ++step) {
        if (absorbed == n) {
            // Everyone is gone; the cumulative count stays flat.
            for (int rest = step; rest < params.steps; ++rest) {
                result.cumulative_hits[rest] = absorbed;
            }
            break;
        }
        for (int i = 0; i < n; ++i) {
            if (!alive[i]) {
                continue;
            }
            Point3 next = diffusion_step(pos[i], params.diffusion, params.dt, rng);
            if (lateral_radius_sq(next) > wall_sq) {
                Point3 from = pos[i];
                int bounces = 0;
                while (lateral_radius_sq(next) > wall_sq && bounces < kMaxReflections) {
                    const ReflectionSolution sol = reflect_off_vessel(from, next, params.vessel_radius);
                    from = sol.intersection;
                    next = sol.reflected;
                    ++bounces;
                }
                if (lateral_radius_sq(next) > wall_sq) {
                    next = clamp_to_wall(next, params.vessel_radius);
                }
            }
            pos[i] = next;
            if (distance_sq(next, receiver) <= absorb_sq) {
                alive[i] = 0;
                ++absorbed;
            }
        }
        result.cumulative_hits[static_cast<size_t>(step)] = absorbed;
    }

    result.map = compute_map(result.cumulative_hits, n);
    return result;
}

} // namespace mclab
