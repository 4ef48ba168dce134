#pragma once

#include <optional>

#include "wrinklepath/angles.hpp"

namespace wrinklepath {

/// Planar tip state: position in mm, heading in radians CCW from +x.
/// The heading is stored normalized to [0, 2*pi).
struct Pose {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;

    Pose() = default;
    Pose(double x_, double y_, double heading_);

    bool operator==(const Pose&) const = default;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Half-line from origin (mm) along direction (rad, normalized to [0, 2*pi)).
struct Ray {
    Point origin;
    double direction = 0.0;

    Ray() = default;
    Ray(Point origin_, double direction_);
};

// Intersections whose parameter along either ray is below this count as
// misses; keeps zero-length segments out of plans.
inline constexpr double kRayParamEpsilon = 1e-9;

// Rays with |sin(direction delta)| below this are treated as parallel.
inline constexpr double kParallelEpsilon = 1e-12;

/// Translates the pose by distance_mm along its heading. The robot only
/// grows, so negative distances are a domain error.
Pose advance(const Pose& p, double distance_mm);

/// Changes the heading in place; position is untouched.
Pose rotate_in_place(const Pose& p, double delta_rad);

/// Unique point lying ahead of both ray origins, or empty when the rays are
/// parallel, diverge, or meet essentially at an origin. Symmetric in its
/// arguments.
std::optional<Point> ray_intersection(const Ray& a, const Ray& b);

/// Signed heading change, in (-pi, pi], a traveler makes when switching from
/// the incoming ray's direction to the outgoing ray's direction.
double vertex_turn_angle(const Ray& incoming, const Ray& outgoing);

}  // namespace wrinklepath
