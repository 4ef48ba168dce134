#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wrinklepath/geometry.hpp"
#include "wrinklepath/plan.hpp"

namespace wrinklepath {

struct PlanQuery {
    Pose start;
    Pose goal;
    double increment_rad = 0.0;
    double tolerance_rad = deg_to_rad(0.5);
    double min_segment_mm = 20.0;
    std::string path_type;  // recorded in plan metadata, never interpreted

    /// increment in (0, pi), tolerance in (0, increment/2), min_segment >= 0.
    void validate() const;
};

struct HeadingDecomposition {
    int count = 0;
    TurnDirection direction = TurnDirection::Left;
    double residual_rad = 0.0;  // count*increment - |delta|, >= 0
};

class NoPathFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CorrectionTooTight : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Splits a desired heading change into whole fixed-angle turns, never
/// under-rotating: count = ceil(|delta|/increment), with exact multiples
/// (up to degree-conversion noise) kept exact. delta = 0 gives (0, Left, 0).
HeadingDecomposition decompose_heading(double delta_rad, double increment_rad);

/// floor(2*pi/increment) rays from p's position at headings
/// p.heading + k*increment, each reachable by k whole left turns. When the
/// increment does not divide the circle the wrap gap is left uncovered
/// rather than emitting a ray no turn sequence can reach. With reverse set
/// the fan is traced backward (offset by pi), for rays cast from a goal.
std::vector<Ray> cast_rays(const Pose& p, double increment_rad, bool reverse);

/// Fixed-angle Dubins construction: casts ray fans from start and goal,
/// keeps intersections whose vertex heading change is one increment within
/// tolerance, appends whole turns to meet the goal heading on the nearest
/// reachable lattice point, and returns the candidate with the least total
/// grow length (ties: fewer turns, then smaller ray indices). Goals lying
/// directly on a start ray are handled as single-segment candidates, and a
/// collinear-ahead goal with matching heading short-circuits to one grow.
/// Throws NoPathFound when no candidate survives, and std::domain_error when
/// start and goal positions coincide.
Plan plan_dubins(const PlanQuery& q);

/// Serial reference for plan_dubins; same construction without the OpenMP
/// candidate sweep. Kept for tests and benchmarks.
Plan plan_dubins_serial(const PlanQuery& q);

/// Pure rotation plan: decompose_heading applied to the wrapped heading
/// difference. The over-rotation left over is reported in plan metadata.
Plan plan_heading_only(double start_heading_rad, double goal_heading_rad,
                       double increment_rad);

/// Turn, grow, counter-turn maneuver producing a pure lateral offset with
/// the original heading restored. Positive offsets displace to the left.
/// Throws CorrectionTooTight when the required segment is shorter than
/// min_segment. increment must be in (0, pi/2].
Plan dogleg_correction(double lateral_offset_mm, double increment_rad,
                       double min_segment_mm);

/// Polyline approximation of a circular arc using only fixed-angle turns:
/// the tangent polygon with ceil(|sweep|/increment) vertices. Entry and exit
/// segments are half the interior ones, so when the sweep is an exact
/// multiple of the increment the endpoints coincide with the arc's.
Plan discretize_arc(double radius_mm, double sweep_rad, double increment_rad);

}  // namespace wrinklepath
