#include "wrinklepath/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace wrinklepath {

Pose::Pose(double x_, double y_, double heading_)
    : x(x_), y(y_), heading(normalize_angle(heading_)) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::domain_error("Pose: non-finite position");
}

Ray::Ray(Point origin_, double direction_)
    : origin(origin_), direction(normalize_angle(direction_)) {
    if (!std::isfinite(origin.x) || !std::isfinite(origin.y))
        throw std::domain_error("Ray: non-finite origin");
}

Pose advance(const Pose& p, double distance_mm) {
    if (!(distance_mm >= 0.0))
        throw std::domain_error("advance: negative distance (the robot only grows)");
    return Pose(p.x + distance_mm * std::cos(p.heading),
                p.y + distance_mm * std::sin(p.heading), p.heading);
}

Pose rotate_in_place(const Pose& p, double delta_rad) {
    return Pose(p.x, p.y, p.heading + delta_rad);
}

std::optional<Point> ray_intersection(const Ray& a, const Ray& b) {
    const double ca = std::cos(a.direction), sa = std::sin(a.direction);
    const double cb = std::cos(b.direction), sb = std::sin(b.direction);

    // Each ray's line in normal form: sin(d)*x - cos(d)*y = sin(d)*ox - cos(d)*oy.
    // Cramer's rule on this system flips the sign of both determinant and
    // numerators under argument swap, so the point is bit-identical either way.
    const double det = ca * sb - sa * cb;  // sin(b.direction - a.direction)
    if (std::abs(det) < kParallelEpsilon) return std::nullopt;

    const double ka = sa * a.origin.x - ca * a.origin.y;
    const double kb = sb * b.origin.x - cb * b.origin.y;
    const Point p{(ca * kb - cb * ka) / det, (sa * kb - sb * ka) / det};

    // The point must lie ahead of both origins.
    const double ta = (p.x - a.origin.x) * ca + (p.y - a.origin.y) * sa;
    const double tb = (p.x - b.origin.x) * cb + (p.y - b.origin.y) * sb;
    if (ta < kRayParamEpsilon || tb < kRayParamEpsilon) return std::nullopt;
    return p;
}

double vertex_turn_angle(const Ray& incoming, const Ray& outgoing) {
    return wrap_signed(outgoing.direction - incoming.direction);
}

}  // namespace wrinklepath
