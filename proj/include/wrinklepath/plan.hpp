#pragma once

#include <string>
#include <vector>

namespace wrinklepath {

enum class TurnDirection { Left, Right };

// Left turns are CCW-positive.
inline double direction_sign(TurnDirection d) {
    return d == TurnDirection::Left ? 1.0 : -1.0;
}

inline char direction_letter(TurnDirection d) {
    return d == TurnDirection::Left ? 'L' : 'R';
}

/// One executable step: grow by a length, or make one fixed-angle turn.
struct Primitive {
    enum class Kind { Grow, Turn };

    Kind kind = Kind::Grow;
    double grow_mm = 0.0;                     // meaningful when kind == Grow
    TurnDirection dir = TurnDirection::Left;  // meaningful when kind == Turn

    static Primitive grow(double mm) { return Primitive{Kind::Grow, mm, TurnDirection::Left}; }
    static Primitive turn(TurnDirection d) { return Primitive{Kind::Turn, 0.0, d}; }

    bool operator==(const Primitive&) const = default;
};

struct PlanMeta {
    double heading_residual_rad = 0.0;  // heading error left at the end of the plan
    std::string path_type;              // accepted for interface compatibility, never interpreted

    bool operator==(const PlanMeta&) const = default;
};

/// Ordered primitive sequence plus the fixed turn increment it was built for.
/// Invariants: increment > 0, grow lengths > 0, no two consecutive grows.
struct Plan {
    std::vector<Primitive> primitives;
    double increment_rad = 0.0;
    PlanMeta meta;

    double total_grow_mm() const;
    int turn_count() const;

    /// Throws std::invalid_argument naming the offending primitive index.
    void validate() const;
};

/// Appends a grow, merging with a trailing grow. Zero-length grows are
/// dropped; negative lengths throw.
void append_grow(Plan& plan, double mm);
void append_turn(Plan& plan, TurnDirection dir);

/// Structural equality with exact grow lengths; angles compared to 1e-12
/// relative so a degrees round trip at the file boundary still counts.
bool plans_equal(const Plan& a, const Plan& b);

}  // namespace wrinklepath
