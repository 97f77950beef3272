#pragma once

#include <cmath>

namespace mclab {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline double lateral_radius_sq(const Point3& p) { return p.x * p.x + p.y * p.y; }
inline double lateral_radius(const Point3& p) { return std::sqrt(lateral_radius_sq(p)); }

inline double distance_sq(const Point3& a, const Point3& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return dx * dx + dy * dy + dz * dz;
}

inline double distance(const Point3& a, const Point3& b) { return std::sqrt(distance_sq(a, b)); }

// Full record of one wall reflection: the quadratic whose roots parametrise
// the crossing of the segment p1->p2 with the cylinder x^2 + y^2 = Rv^2, the
// root that was kept, the wall intersection, and the reflected end point.
struct ReflectionSolution {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    double chosen_root = 0.0;
    Point3 intersection;
    Point3 reflected;
};

// Reflects the step end point p2 back inside the vessel wall (an infinite
// circular cylinder of radius vessel_radius around the z axis). p1 must be
// laterally inside or on the wall, p2 laterally outside. Of the two crossing
// candidates the one closer to p1 (squared lateral distance) is kept, ties
// going to the smaller root; the reflected point is the point reflection of
// p2 through the intersection in x/y, with z kept as p2.z.
//
// Throws GeometryError when the segment has no lateral motion or no real
// crossing, std::invalid_argument when the inside/outside precondition fails.
ReflectionSolution reflect_off_vessel(const Point3& p1, const Point3& p2, double vessel_radius);

} // namespace mclab
