#include "mclab/geometry.hpp"

#include <stdexcept>

#include "mclab/errors.hpp"

namespace mclab {

ReflectionSolution reflect_off_vessel(const Point3& p1, const Point3& p2, double vessel_radius) {
    if (!(vessel_radius > 0.0)) {
        throw std::invalid_argument("reflect_off_vessel: vessel_radius must be positive");
    }
    const double rv_sq = vessel_radius * vessel_radius;
    // p1 may sit exactly on the wall after a previous reflection; allow a
    // small relative slack on the inside test.
    if (lateral_radius_sq(p1) > rv_sq * (1.0 + 1e-9)) {
        throw std::invalid_argument("reflect_off_vessel: p1 is laterally outside the vessel");
    }
    if (lateral_radius_sq(p2) <= rv_sq) {
        throw std::invalid_argument("reflect_off_vessel: p2 is laterally inside the vessel");
    }

    const double dx = p2.x - p1.x;
    const double dy = p2.y - p1.y;

    ReflectionSolution sol;
    sol.a = dx * dx + dy * dy;
    sol.b = 2.0 * (dx * p1.x + dy * p1.y);
    sol.c = p1.x * p1.x + p1.y * p1.y - rv_sq;

    if (sol.a == 0.0) {
        throw GeometryError("reflect_off_vessel: no lateral motion between p1 and p2");
    }
    const double disc = sol.b * sol.b - 4.0 * sol.a * sol.c;
    if (disc < 0.0) {
        throw GeometryError("reflect_off_vessel: segment does not cross the wall");
    }

    const double sq = std::sqrt(disc);
    sol.t1 = (-sol.b + sq) / (2.0 * sol.a);
    sol.t2 = (-sol.b - sq) / (2.0 * sol.a);

    // Squared lateral distance from p1 to each candidate is t^2 * a; the
    // closer candidate wins, a tie goes to the smaller root.
    const double d1 = sol.t1 * sol.t1 * sol.a;
    const double d2 = sol.t2 * sol.t2 * sol.a;
    if (d1 < d2 || (d1 == d2 && sol.t1 < sol.t2)) {
        sol.chosen_root = sol.t1;
    } else {
        sol.chosen_root = sol.t2;
    }

    sol.intersection = Point3{p1.x + dx * sol.chosen_root, p1.y + dy * sol.chosen_root,
                              p1.z + (p2.z - p1.z) * sol.chosen_root};
    sol.reflected = Point3{2.0 * sol.intersection.x - p2.x, 2.0 * sol.intersection.y - p2.y, p2.z};
    return sol;
}

} // namespace mclab
