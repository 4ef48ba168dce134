#include "wrinklepath/plan_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wrinklepath/angles.hpp"

namespace wrinklepath {

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

const nlohmann::json& require_field(const nlohmann::json& j, const char* key,
                                    const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw PlanFormatError("plan: " + where + ": missing field '" + key + "'");
    return *it;
}

double require_number(const nlohmann::json& j, const char* key, const std::string& where) {
    const auto& field = require_field(j, key, where);
    if (!field.is_number())
        throw PlanFormatError("plan: " + where + ": field '" + key + "' must be a number");
    return field.get<double>();
}

}  // namespace

std::string plan_to_json(const Plan& plan) {
    nlohmann::ordered_json j;
    j["increment_deg"] = rad_to_deg(plan.increment_rad);
    auto& prims = j["primitives"] = nlohmann::ordered_json::array();
    for (const auto& pr : plan.primitives) {
        if (pr.kind == Primitive::Kind::Grow)
            prims.push_back({{"op", "grow"}, {"mm", pr.grow_mm}});
        else
            prims.push_back({{"op", "turn"}, {"dir", std::string(1, direction_letter(pr.dir))}});
    }
    nlohmann::ordered_json meta;
    meta["residual_deg"] = rad_to_deg(plan.meta.heading_residual_rad);
    if (!plan.meta.path_type.empty()) meta["path_type"] = plan.meta.path_type;
    meta["turns"] = plan.turn_count();
    meta["total_grow_mm"] = plan.total_grow_mm();
    j["meta"] = std::move(meta);
    return j.dump(2) + "\n";
}

Plan plan_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw PlanFormatError(std::string("plan: ") + e.what());
    }
    if (!j.is_object()) throw PlanFormatError("plan: top level must be an object");

    Plan plan;
    const double increment_deg = require_number(j, "increment_deg", "top level");
    if (!(increment_deg > 0.0))
        throw PlanFormatError("plan: top level: 'increment_deg' must be positive");
    plan.increment_rad = deg_to_rad(increment_deg);

    const auto& prims = require_field(j, "primitives", "top level");
    if (!prims.is_array()) throw PlanFormatError("plan: 'primitives' must be an array");

    for (std::size_t k = 0; k < prims.size(); ++k) {
        const std::string where = "primitives[" + std::to_string(k) + "]";
        const auto& item = prims[k];
        if (!item.is_object()) throw PlanFormatError("plan: " + where + ": must be an object");
        const auto& op = require_field(item, "op", where);
        if (op == "grow") {
            const double mm = require_number(item, "mm", where);
            if (!(mm > 0.0))
                throw PlanFormatError("plan: " + where + ": 'mm' must be positive");
            plan.primitives.push_back(Primitive::grow(mm));
        } else if (op == "turn") {
            const auto& dir = require_field(item, "dir", where);
            if (dir == "L")
                plan.primitives.push_back(Primitive::turn(TurnDirection::Left));
            else if (dir == "R")
                plan.primitives.push_back(Primitive::turn(TurnDirection::Right));
            else
                throw PlanFormatError("plan: " + where + ": 'dir' must be \"L\" or \"R\"");
        } else {
            throw PlanFormatError("plan: " + where + ": unknown op " + op.dump());
        }
    }

    if (auto meta = j.find("meta"); meta != j.end() && meta->is_object()) {
        if (auto r = meta->find("residual_deg"); r != meta->end() && r->is_number())
            plan.meta.heading_residual_rad = deg_to_rad(r->get<double>());
        if (auto p = meta->find("path_type"); p != meta->end() && p->is_string())
            plan.meta.path_type = p->get<std::string>();
    }

    try {
        plan.validate();
    } catch (const std::invalid_argument& e) {
        throw PlanFormatError(e.what());
    }
    return plan;
}

Plan load_plan_file(const std::string& path) {
    return plan_from_json(read_text_file(path));
}

void save_plan_file(const Plan& plan, const std::string& path) {
    write_text_file(path, plan_to_json(plan));
}

namespace {

std::string event_text(const SimEvent& ev) {
    switch (ev.kind) {
        case SimEvent::Kind::Grew:
            return "grow:" + fmt("%.6f", ev.grew_mm);
        case SimEvent::Kind::Turned:
            return std::string("turn:") + direction_letter(ev.dir) + ":" +
                   fmt("%.6f", rad_to_deg(ev.effective_angle_rad));
        case SimEvent::Kind::Failed:
            return "failed:" + ev.reason;
    }
    return "?";
}

}  // namespace

std::string trace_to_csv(const SimTrace& trace) {
    std::string out = "index,x_mm,y_mm,heading_deg,event\n";
    auto row = [&out](std::size_t index, const Pose& p, const std::string& event) {
        out += std::to_string(index) + "," + fmt("%.6f", p.x) + "," + fmt("%.6f", p.y) +
               "," + fmt("%.6f", rad_to_deg(p.heading)) + "," + event + "\n";
    };
    if (trace.poses.empty()) return out;
    row(0, trace.poses.front(), "start");
    std::size_t pose_index = 1;
    for (std::size_t k = 0; k < trace.events.size(); ++k) {
        const auto& ev = trace.events[k];
        // A failed primitive produced no pose; repeat the terminal one.
        const Pose& p = ev.kind == SimEvent::Kind::Failed ? trace.poses.back()
                                                          : trace.poses[pose_index++];
        row(k + 1, p, event_text(ev));
    }
    return out;
}

std::string trace_to_svg(const SimTrace& trace) {
    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
    if (!trace.poses.empty()) {
        min_x = max_x = trace.poses.front().x;
        min_y = max_y = trace.poses.front().y;
        for (const auto& p : trace.poses) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double margin = 10.0;
    const double width = max_x - min_x + 2.0 * margin;
    const double height = max_y - min_y + 2.0 * margin;
    // 1 px per mm, y flipped for screen convention.
    auto sx = [&](double x) { return x - min_x + margin; };
    auto sy = [&](double y) { return max_y - y + margin; };

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt("%.3f", width) +
           "\" height=\"" + fmt("%.3f", height) + "\" viewBox=\"0 0 " +
           fmt("%.3f", width) + " " + fmt("%.3f", height) + "\">\n";

    out += "  <polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"1\" points=\"";
    for (std::size_t k = 0; k < trace.poses.size(); ++k) {
        if (k > 0) out += " ";
        out += fmt("%.3f", sx(trace.poses[k].x)) + "," + fmt("%.3f", sy(trace.poses[k].y));
    }
    out += "\"/>\n";

    std::size_t pose_index = 1;
    for (const auto& ev : trace.events) {
        if (ev.kind == SimEvent::Kind::Failed) break;
        const Pose& p = trace.poses[pose_index++];
        if (ev.kind != SimEvent::Kind::Turned) continue;
        const char* color = ev.dir == TurnDirection::Left ? "#22aa22" : "#cc2222";
        out += "  <circle cx=\"" + fmt("%.3f", sx(p.x)) + "\" cy=\"" + fmt("%.3f", sy(p.y)) +
               "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace wrinklepath
