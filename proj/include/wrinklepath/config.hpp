#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "wrinklepath/sim.hpp"
#include "wrinklepath/wrinkle_model.hpp"

namespace wrinklepath {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Toolkit configuration. File format is flat "key = value" text with #
/// comments; unknown keys are errors. Angles are degrees in the file and
/// radians here.
struct Config {
    TubeParams tube;
    std::optional<double> increment_override_rad;
    double tolerance_rad = deg_to_rad(0.5);
    double min_segment_mm = 20.0;
    ErrorModel error_model;

    void validate() const;
};

Config load_config_file(const std::string& path);

/// Planner increment: the reported-build preset wins when requested,
/// otherwise an explicit override, otherwise the wrinkle-model formula
/// evaluated on the configured tube.
double effective_increment_rad(const Config& cfg, bool paper_reported);

}  // namespace wrinklepath
