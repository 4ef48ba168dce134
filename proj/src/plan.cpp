#include "wrinklepath/plan.hpp"

#include <cmath>
#include <stdexcept>

namespace wrinklepath {

double Plan::total_grow_mm() const {
    double total = 0.0;
    for (const auto& pr : primitives)
        if (pr.kind == Primitive::Kind::Grow) total += pr.grow_mm;
    return total;
}

int Plan::turn_count() const {
    int n = 0;
    for (const auto& pr : primitives)
        if (pr.kind == Primitive::Kind::Turn) ++n;
    return n;
}

void Plan::validate() const {
    if (!(increment_rad > 0.0))
        throw std::invalid_argument("plan: increment must be positive");
    bool prev_grow = false;
    for (std::size_t k = 0; k < primitives.size(); ++k) {
        const auto& pr = primitives[k];
        if (pr.kind == Primitive::Kind::Grow) {
            if (!(pr.grow_mm > 0.0) || !std::isfinite(pr.grow_mm))
                throw std::invalid_argument("plan: primitives[" + std::to_string(k) +
                                            "]: grow length must be positive");
            if (prev_grow)
                throw std::invalid_argument("plan: primitives[" + std::to_string(k) +
                                            "]: consecutive grow primitives must be merged");
            prev_grow = true;
        } else {
            prev_grow = false;
        }
    }
}

void append_grow(Plan& plan, double mm) {
    if (!(mm >= 0.0))
        throw std::invalid_argument("append_grow: negative length");
    if (mm == 0.0) return;
    if (!plan.primitives.empty() && plan.primitives.back().kind == Primitive::Kind::Grow) {
        plan.primitives.back().grow_mm += mm;
        return;
    }
    plan.primitives.push_back(Primitive::grow(mm));
}

void append_turn(Plan& plan, TurnDirection dir) {
    plan.primitives.push_back(Primitive::turn(dir));
}

namespace {

bool angles_close(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

bool plans_equal(const Plan& a, const Plan& b) {
    if (!angles_close(a.increment_rad, b.increment_rad)) return false;
    if (!angles_close(a.meta.heading_residual_rad, b.meta.heading_residual_rad)) return false;
    if (a.meta.path_type != b.meta.path_type) return false;
    return a.primitives == b.primitives;
}

}  // namespace wrinklepath
