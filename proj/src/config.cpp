#include "wrinklepath/config.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <string>

namespace wrinklepath {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_number(const std::string& value, int lineno) {
    std::size_t consumed = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &consumed);
    } catch (const std::exception&) {
        throw ConfigError("config line " + std::to_string(lineno) + ": bad number '" +
                          value + "'");
    }
    if (consumed != value.size())
        throw ConfigError("config line " + std::to_string(lineno) + ": bad number '" +
                          value + "'");
    return v;
}

std::int64_t parse_integer(const std::string& value, int lineno) {
    std::size_t consumed = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(value, &consumed);
    } catch (const std::exception&) {
        throw ConfigError("config line " + std::to_string(lineno) + ": bad integer '" +
                          value + "'");
    }
    if (consumed != value.size())
        throw ConfigError("config line " + std::to_string(lineno) + ": bad integer '" +
                          value + "'");
    return v;
}

void apply_key(Config& cfg, const std::string& key, const std::string& value, int lineno) {
    if (key == "tube_width_L_mm")
        cfg.tube.tube_width_mm = parse_number(value, lineno);
    else if (key == "fold_length_D_mm")
        cfg.tube.fold_length_mm = parse_number(value, lineno);
    else if (key == "tape_placement_deg")
        cfg.tube.tape_placement_rad = deg_to_rad(parse_number(value, lineno));
    else if (key == "increment_override_deg")
        cfg.increment_override_rad = deg_to_rad(parse_number(value, lineno));
    else if (key == "tolerance_deg")
        cfg.tolerance_rad = deg_to_rad(parse_number(value, lineno));
    else if (key == "min_segment_mm")
        cfg.min_segment_mm = parse_number(value, lineno);
    else if (key == "turn_mean_deg")
        cfg.error_model.turn_mean_rad = deg_to_rad(parse_number(value, lineno));
    else if (key == "turn_sigma_deg")
        cfg.error_model.turn_sigma_rad = deg_to_rad(parse_number(value, lineno));
    else if (key == "degradation_per_repeat_deg")
        cfg.error_model.degradation_per_repeat_rad = deg_to_rad(parse_number(value, lineno));
    else if (key == "max_consecutive_same_dir")
        cfg.error_model.max_consecutive_same_dir =
            static_cast<int>(parse_integer(value, lineno));
    else if (key == "seed")
        cfg.error_model.seed = static_cast<std::uint64_t>(parse_integer(value, lineno));
    else
        throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" +
                          key + "'");
}

}  // namespace

void Config::validate() const {
    try {
        tube.validate();
        error_model.validate();
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (increment_override_rad && !(*increment_override_rad > 0.0))
        throw ConfigError("config: increment_override_deg must be positive");
    if (!(tolerance_rad > 0.0))
        throw ConfigError("config: tolerance_deg must be positive");
    if (!(min_segment_mm >= 0.0))
        throw ConfigError("config: min_segment_mm must be >= 0");
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");

    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        apply_key(cfg, key, value, lineno);
    }
    cfg.validate();
    return cfg;
}

double effective_increment_rad(const Config& cfg, bool paper_reported) {
    if (paper_reported) return deg_to_rad(kReportedPlanarTurnDeg);
    if (cfg.increment_override_rad) return *cfg.increment_override_rad;
    return planar_projection(turn_angle_3d(cfg.tube), cfg.tube.tape_placement_rad);
}

}  // namespace wrinklepath
