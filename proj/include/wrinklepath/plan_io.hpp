#pragma once

#include <stdexcept>
#include <string>

#include "wrinklepath/plan.hpp"
#include "wrinklepath/sim.hpp"

namespace wrinklepath {

class PlanFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Plan file schema (degrees at the boundary, radians inside):
///   {"increment_deg": <num>,
///    "primitives": [{"op":"grow","mm":<num>} | {"op":"turn","dir":"L"|"R"}],
///    "meta": {"residual_deg": <num>, "path_type": <str>, ...}}
/// Unknown meta entries are informational and ignored on load.
std::string plan_to_json(const Plan& plan);

/// Parses and validates a plan document. Throws PlanFormatError with the
/// offending field or primitive index in the message.
Plan plan_from_json(const std::string& text);

Plan load_plan_file(const std::string& path);
void save_plan_file(const Plan& plan, const std::string& path);

/// CSV trace: header "index,x_mm,y_mm,heading_deg,event", one row per pose
/// (row 0 is the start), 6-decimal fixed formatting so outputs diff cleanly.
/// A failed run repeats the terminal pose in a final failed row.
std::string trace_to_csv(const SimTrace& trace);

/// SVG render at 1 px per mm with the y axis flipped for screen convention:
/// a single polyline through every pose, plus a circle per turn vertex,
/// green for left and red for right (the tape color convention).
std::string trace_to_svg(const SimTrace& trace);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace wrinklepath
