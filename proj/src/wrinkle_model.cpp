#include "wrinklepath/wrinkle_model.hpp"

#include <cmath>
#include <stdexcept>

namespace wrinklepath {

void TubeParams::validate() const {
    if (!(tube_width_mm > 0.0))
        throw std::domain_error("TubeParams: tube width L must be positive");
    if (!(fold_length_mm >= 0.0) || !(fold_length_mm < tube_width_mm))
        throw std::domain_error("TubeParams: fold length D must be in [0, L)");
    if (!(tape_placement_rad >= 0.0) || !(tape_placement_rad <= std::numbers::pi / 2.0))
        throw std::domain_error("TubeParams: tape placement must be in [0, pi/2]");
}

double turn_angle_3d(const TubeParams& p) {
    p.validate();
    // The inflated tube has radius r = L/pi; an arc of length D bent around
    // it rotates the segment by D/r.
    return p.fold_length_mm * std::numbers::pi / p.tube_width_mm;
}

double planar_projection(double theta_3d_rad, double tape_placement_rad) {
    if (!std::isfinite(theta_3d_rad) || !std::isfinite(tape_placement_rad))
        throw std::domain_error("planar_projection: non-finite input");
    return theta_3d_rad * std::cos(tape_placement_rad);
}

TurnCapability turn_capability(const TubeParams& p) {
    TurnCapability cap;
    cap.theta_3d_rad = turn_angle_3d(p);
    cap.theta_planar_rad = planar_projection(cap.theta_3d_rad, p.tape_placement_rad);
    return cap;
}

double feed_shift(const TubeParams& p, bool compensated) {
    p.validate();
    if (compensated) return 0.0;
    return turn_angle_3d(p);
}

double required_fold_length(double tube_width_mm, double theta_planar_target_rad,
                            double tape_placement_rad) {
    if (!(tube_width_mm > 0.0))
        throw std::domain_error("required_fold_length: tube width must be positive");
    if (!(theta_planar_target_rad > 0.0))
        throw std::domain_error("required_fold_length: target angle must be positive");
    if (!(tape_placement_rad >= 0.0) || !(tape_placement_rad < std::numbers::pi / 2.0))
        throw std::domain_error("required_fold_length: tape placement must be in [0, pi/2)");

    const double d = theta_planar_target_rad * tube_width_mm /
                     (std::numbers::pi * std::cos(tape_placement_rad));
    if (d >= tube_width_mm)
        throw std::domain_error("required_fold_length: target unreachable, needs D >= L");
    return d;
}

}  // namespace wrinklepath
