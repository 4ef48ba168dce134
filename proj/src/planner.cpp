#include "wrinklepath/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace wrinklepath {

namespace {

// Forgives degree->radian quantization when a ratio of angles should be a
// whole number.
constexpr double kAngleSnapEpsilon = 1e-9;

// Perpendicular slack, in mm, for deciding that the goal sits on a ray.
constexpr double kOnRayEpsilonMm = 1e-9;

// Turn count nearest to delta on the increment lattice. Unlike
// decompose_heading this may under-rotate: at the goal the best reachable
// heading is wanted, not an overshoot.
HeadingDecomposition nearest_heading_match(double delta_rad, double increment_rad) {
    HeadingDecomposition d;
    const double mag = std::abs(delta_rad);
    const long long count = std::llround(mag / increment_rad);
    d.count = static_cast<int>(count);
    d.direction = (d.count == 0 || delta_rad >= 0.0) ? TurnDirection::Left
                                                     : TurnDirection::Right;
    d.residual_rad = std::abs(static_cast<double>(count) * increment_rad - mag);
    return d;
}

struct Candidate {
    double length_mm = std::numeric_limits<double>::infinity();
    int turns = std::numeric_limits<int>::max();
    int i = std::numeric_limits<int>::max();  // start ray index == start turn count
    int j = std::numeric_limits<int>::max();  // goal ray index, -1 for single-leg
    double leg1_mm = 0.0;
    double leg2_mm = 0.0;
    bool has_mid_turn = false;
    TurnDirection mid_dir = TurnDirection::Left;
    HeadingDecomposition goal_turns;

    bool valid() const { return std::isfinite(length_mm); }
};

// Strict total order: shortest, then fewest turns, then smaller ray indices.
// Total over distinct (i, j), so a parallel reduction cannot be
// schedule-dependent.
bool better(const Candidate& a, const Candidate& b) {
    if (a.length_mm != b.length_mm) return a.length_mm < b.length_mm;
    if (a.turns != b.turns) return a.turns < b.turns;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

// Goal lying on start ray i: i turns, one grow, then whole turns to the
// nearest reachable heading. Covers plans with no mid-course vertex, which
// the ray-pair search cannot represent.
Candidate eval_single_leg(const PlanQuery& q, const Ray& ray, int i) {
    Candidate c;
    const double dx = q.goal.x - q.start.x;
    const double dy = q.goal.y - q.start.y;
    const double ca = std::cos(ray.direction), sa = std::sin(ray.direction);
    const double along = dx * ca + dy * sa;
    const double across = ca * dy - sa * dx;
    if (std::abs(across) > kOnRayEpsilonMm) return c;
    if (along < std::max(kRayParamEpsilon, q.min_segment_mm)) return c;

    const auto goal_turns =
        nearest_heading_match(wrap_signed(q.goal.heading - ray.direction), q.increment_rad);
    c.length_mm = along;
    c.turns = i + goal_turns.count;
    c.i = i;
    c.j = -1;
    c.leg1_mm = along;
    c.goal_turns = goal_turns;
    return c;
}

Candidate eval_ray_pair(const PlanQuery& q, const Ray& start_ray, const Ray& end_ray,
                        int i, int j) {
    Candidate c;
    const auto vertex = ray_intersection(start_ray, end_ray);
    if (!vertex) return c;

    // end_ray points backward out of the goal; travel direction is opposite.
    const Ray outgoing(*vertex, end_ray.direction + std::numbers::pi);
    const double turn = vertex_turn_angle(start_ray, outgoing);
    if (std::abs(std::abs(turn) - q.increment_rad) >= q.tolerance_rad) return c;
    const double leg2_dir = outgoing.direction;

    const double leg1 = std::hypot(vertex->x - q.start.x, vertex->y - q.start.y);
    const double leg2 = std::hypot(q.goal.x - vertex->x, q.goal.y - vertex->y);
    if (leg1 < q.min_segment_mm || leg2 < q.min_segment_mm) return c;

    const auto goal_turns =
        nearest_heading_match(wrap_signed(q.goal.heading - leg2_dir), q.increment_rad);
    c.length_mm = leg1 + leg2;
    c.turns = i + 1 + goal_turns.count;
    c.i = i;
    c.j = j;
    c.leg1_mm = leg1;
    c.leg2_mm = leg2;
    c.has_mid_turn = true;
    c.mid_dir = turn > 0.0 ? TurnDirection::Left : TurnDirection::Right;
    c.goal_turns = goal_turns;
    return c;
}

Plan assemble(const PlanQuery& q, const Candidate& c) {
    Plan plan;
    plan.increment_rad = q.increment_rad;
    plan.meta.path_type = q.path_type;
    for (int k = 0; k < c.i; ++k) append_turn(plan, TurnDirection::Left);
    append_grow(plan, c.leg1_mm);
    if (c.has_mid_turn) {
        append_turn(plan, c.mid_dir);
        append_grow(plan, c.leg2_mm);
    }
    for (int k = 0; k < c.goal_turns.count; ++k) append_turn(plan, c.goal_turns.direction);
    plan.meta.heading_residual_rad = c.goal_turns.residual_rad;
    return plan;
}

// A collinear-ahead goal with matching heading needs no vertex at all; the
// ray search cannot represent the turn-free path.
std::optional<Plan> try_straight_line(const PlanQuery& q) {
    const double dx = q.goal.x - q.start.x;
    const double dy = q.goal.y - q.start.y;
    const double bearing = std::atan2(dy, dx);
    if (std::abs(wrap_signed(bearing - q.start.heading)) > q.tolerance_rad)
        return std::nullopt;
    const double heading_err = wrap_signed(q.goal.heading - q.start.heading);
    if (std::abs(heading_err) > q.tolerance_rad) return std::nullopt;

    Plan plan;
    plan.increment_rad = q.increment_rad;
    plan.meta.path_type = q.path_type;
    append_grow(plan, std::hypot(dx, dy));
    plan.meta.heading_residual_rad = std::abs(heading_err);
    return plan;
}

Candidate best_for_start_ray(const PlanQuery& q, const std::vector<Ray>& start_rays,
                             const std::vector<Ray>& end_rays, int i) {
    Candidate best = eval_single_leg(q, start_rays[i], i);
    for (int j = 0; j < static_cast<int>(end_rays.size()); ++j) {
        const Candidate c = eval_ray_pair(q, start_rays[i], end_rays[j], i, j);
        if (c.valid() && better(c, best)) best = c;
    }
    return best;
}

Candidate search_serial(const PlanQuery& q, const std::vector<Ray>& start_rays,
                        const std::vector<Ray>& end_rays) {
    Candidate best;
    for (int i = 0; i < static_cast<int>(start_rays.size()); ++i) {
        const Candidate c = best_for_start_ray(q, start_rays, end_rays, i);
        if (c.valid() && better(c, best)) best = c;
    }
    return best;
}

Candidate search_parallel(const PlanQuery& q, const std::vector<Ray>& start_rays,
                          const std::vector<Ray>& end_rays) {
#ifdef _OPENMP
    const int n = static_cast<int>(start_rays.size());
    Candidate best;
#pragma omp parallel
    {
        Candidate local;
#pragma omp for schedule(static) nowait
        for (int i = 0; i < n; ++i) {
            const Candidate c = best_for_start_ray(q, start_rays, end_rays, i);
            if (c.valid() && better(c, local)) local = c;
        }
#pragma omp critical(wrinklepath_plan_reduce)
        {
            if (local.valid() && better(local, best)) best = local;
        }
    }
    return best;
#else
    return search_serial(q, start_rays, end_rays);
#endif
}

Plan plan_dubins_impl(const PlanQuery& q, bool parallel) {
    q.validate();
    if (q.start.x == q.goal.x && q.start.y == q.goal.y)
        throw std::domain_error("plan_dubins: start and goal positions coincide");

    if (auto straight = try_straight_line(q)) return *straight;

    const auto start_rays = cast_rays(q.start, q.increment_rad, false);
    const auto end_rays = cast_rays(q.goal, q.increment_rad, true);
    const Candidate best = parallel ? search_parallel(q, start_rays, end_rays)
                                    : search_serial(q, start_rays, end_rays);
    if (!best.valid()) throw NoPathFound("no valid path found");
    return assemble(q, best);
}

}  // namespace

void PlanQuery::validate() const {
    if (!(increment_rad > 0.0) || !(increment_rad < std::numbers::pi))
        throw std::domain_error("PlanQuery: increment must be in (0, pi)");
    if (!(tolerance_rad > 0.0) || !(tolerance_rad < increment_rad / 2.0))
        throw std::domain_error("PlanQuery: tolerance must be in (0, increment/2)");
    if (!(min_segment_mm >= 0.0))
        throw std::domain_error("PlanQuery: min_segment must be >= 0");
}

HeadingDecomposition decompose_heading(double delta_rad, double increment_rad) {
    if (!(increment_rad > 0.0))
        throw std::domain_error("decompose_heading: increment must be positive");
    if (!std::isfinite(delta_rad))
        throw std::domain_error("decompose_heading: non-finite delta");

    HeadingDecomposition d;
    const double mag = std::abs(delta_rad);
    const double ratio = mag / increment_rad;
    const long long nearest = std::llround(ratio);
    long long count;
    if (std::abs(ratio - static_cast<double>(nearest)) < kAngleSnapEpsilon)
        count = nearest;  // exact multiple up to quantization
    else
        count = static_cast<long long>(std::ceil(ratio));
    d.count = static_cast<int>(count);
    d.direction = (delta_rad < 0.0) ? TurnDirection::Right : TurnDirection::Left;
    d.residual_rad = std::max(0.0, static_cast<double>(count) * increment_rad - mag);
    return d;
}

std::vector<Ray> cast_rays(const Pose& p, double increment_rad, bool reverse) {
    if (!(increment_rad > 0.0))
        throw std::domain_error("cast_rays: increment must be positive");
    const int n = static_cast<int>(std::floor(kTwoPi / increment_rad + kAngleSnapEpsilon));
    std::vector<Ray> rays;
    rays.reserve(static_cast<std::size_t>(std::max(n, 0)));
    const double base = reverse ? p.heading + std::numbers::pi : p.heading;
    for (int k = 0; k < n; ++k)
        rays.emplace_back(Point{p.x, p.y}, base + k * increment_rad);
    return rays;
}

Plan plan_dubins(const PlanQuery& q) { return plan_dubins_impl(q, true); }

Plan plan_dubins_serial(const PlanQuery& q) { return plan_dubins_impl(q, false); }

Plan plan_heading_only(double start_heading_rad, double goal_heading_rad,
                       double increment_rad) {
    const double delta = wrap_signed(goal_heading_rad - start_heading_rad);
    const auto d = decompose_heading(delta, increment_rad);
    Plan plan;
    plan.increment_rad = increment_rad;
    for (int k = 0; k < d.count; ++k) append_turn(plan, d.direction);
    plan.meta.heading_residual_rad = d.residual_rad;
    return plan;
}

Plan dogleg_correction(double lateral_offset_mm, double increment_rad,
                       double min_segment_mm) {
    if (!(increment_rad > 0.0) ||
        increment_rad > std::numbers::pi / 2.0 + kAngleSnapEpsilon)
        throw std::domain_error("dogleg_correction: increment must be in (0, pi/2]");
    if (!std::isfinite(lateral_offset_mm))
        throw std::domain_error("dogleg_correction: non-finite offset");

    Plan plan;
    plan.increment_rad = increment_rad;
    if (lateral_offset_mm == 0.0) return plan;

    const double segment = std::abs(lateral_offset_mm) / std::sin(increment_rad);
    if (segment < min_segment_mm)
        throw CorrectionTooTight("dogleg_correction: offset needs a " +
                                 std::to_string(segment) + " mm segment, below the " +
                                 std::to_string(min_segment_mm) + " mm minimum");

    const bool left_first = lateral_offset_mm > 0.0;
    append_turn(plan, left_first ? TurnDirection::Left : TurnDirection::Right);
    append_grow(plan, segment);
    append_turn(plan, left_first ? TurnDirection::Right : TurnDirection::Left);
    return plan;
}

Plan discretize_arc(double radius_mm, double sweep_rad, double increment_rad) {
    if (!(radius_mm > 0.0))
        throw std::domain_error("discretize_arc: radius must be positive");
    if (sweep_rad == 0.0 || !std::isfinite(sweep_rad))
        throw std::domain_error("discretize_arc: sweep must be nonzero");
    if (!(increment_rad > 0.0) || !(increment_rad < std::numbers::pi))
        throw std::domain_error("discretize_arc: increment must be in (0, pi)");

    const auto d = decompose_heading(sweep_rad, increment_rad);

    // Tangent polygon: every segment touches the arc, entry and exit are
    // half-length, all turns are whole increments. For exact-multiple sweeps
    // the endpoints land exactly on the arc's.
    const double half = radius_mm * std::tan(increment_rad / 2.0);
    Plan plan;
    plan.increment_rad = increment_rad;
    append_grow(plan, half);
    for (int k = 0; k < d.count; ++k) {
        append_turn(plan, d.direction);
        append_grow(plan, k + 1 == d.count ? half : 2.0 * half);
    }
    plan.meta.heading_residual_rad = d.residual_rad;
    return plan;
}

}  // namespace wrinklepath
