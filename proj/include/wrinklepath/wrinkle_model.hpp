#pragma once

#include <numbers>

namespace wrinklepath {

/// Physical tube parameters. Lengths in mm, angles in radians.
struct TubeParams {
    double tube_width_mm = 105.0;   // L: width of the flat-laid tube
    double fold_length_mm = 19.0;   // D: length of one wrinkle fold
    double tape_placement_rad = std::numbers::pi / 4.0;  // tape angle from the horizontal plane

    /// Throws std::domain_error when L <= 0, D outside [0, L), or the tape
    /// angle outside [0, pi/2].
    void validate() const;
};

/// Turn angles a single wrinkle produces with the given tube.
struct TurnCapability {
    double theta_3d_rad = 0.0;      // bend angle of the tube segment in space
    double theta_planar_rad = 0.0;  // effective angle once projected onto the table
    bool left_available = true;     // the inducer makes wrinkles on either side
    bool right_available = true;
};

/// Bend angle of one wrinkle: D*pi/L. Each fold shortens the taped side by
/// 2D while the outer arc keeps its length, which forces this rotation on
/// inflation.
double turn_angle_3d(const TubeParams& p);

/// Projection of a 3D bend onto the table: theta_3d * cos(tape_placement).
double planar_projection(double theta_3d_rad, double tape_placement_rad);

TurnCapability turn_capability(const TubeParams& p);

/// Angular misalignment of the feed material caused by a one-sided wrinkle.
/// Zero when the compensation mechanism pre-bonds the opposite tape; equal to
/// the wrinkle turn angle otherwise (modeling choice: the fold geometry that
/// shifts the feed is the same fold that turns the tube).
double feed_shift(const TubeParams& p, bool compensated);

/// Fold length D that yields the requested planar turn angle, inverting the
/// bend formula and the projection. Throws std::domain_error when the target
/// needs D >= L or the preconditions (target > 0, tape < pi/2) fail.
double required_fold_length(double tube_width_mm, double theta_planar_target_rad,
                            double tape_placement_rad);

// Planar turn angle reported for the physical build (degrees). The formula
// evaluated at the default build parameters gives 23.03 deg instead; the
// measured value is kept as a preset so experiment-scale runs stay
// reproducible (CLI flag --paper-reported).
inline constexpr double kReportedPlanarTurnDeg = 21.44;

}  // namespace wrinklepath
