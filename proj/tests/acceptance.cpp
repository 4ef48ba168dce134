// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each check pins its tolerance in code.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <random>
#include <string>

#include "wrinklepath/config.hpp"
#include "wrinklepath/plan_io.hpp"
#include "wrinklepath/planner.hpp"
#include "wrinklepath/sim.hpp"
#include "wrinklepath/wrinkle_model.hpp"

using namespace wrinklepath;

namespace {

int g_failures = 0;

void report(int number, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] C%d %s: %s\n", ok ? "PASS" : "FAIL", number, name, detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(const char* format, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), format, a, b);
    return buf;
}

// ---------------------------------------------------------------------------
// C1: projection reproduces the measured planar angle

void criterion_projection() {
    const double planar_deg = rad_to_deg(planar_projection(deg_to_rad(30.3), deg_to_rad(45)));
    const double err = std::abs(planar_deg - 21.44);
    report(1, "projection reproduction", err <= 0.05,
           fmt("planar(30.3 deg, 45 deg) = %.4f deg, |err vs 21.44| = %.4f <= 0.05", planar_deg,
               err));
}

// ---------------------------------------------------------------------------
// C2: bend formula self-consistency; the build parameters give 32.57 deg

void criterion_bend_formula() {
    std::mt19937 rng(1002);
    std::uniform_real_distribution<double> width(10.0, 500.0);
    std::uniform_real_distribution<double> frac(0.01, 0.49);
    std::uniform_real_distribution<double> scale(0.1, 10.0);

    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        TubeParams p;
        p.tube_width_mm = width(rng);
        p.fold_length_mm = p.tube_width_mm * frac(rng);
        const double one = turn_angle_3d(p);

        TubeParams doubled = p;
        doubled.fold_length_mm *= 2.0;
        worst = std::max(worst, std::abs(turn_angle_3d(doubled) - 2.0 * one) / (2.0 * one));

        const double s = scale(rng);
        TubeParams scaled = p;
        scaled.tube_width_mm *= s;
        scaled.fold_length_mm *= s;
        worst = std::max(worst, std::abs(turn_angle_3d(scaled) - one) / one);
    }

    TubeParams build;  // defaults are the build parameters: L = 105, D = 19
    const double bend_deg = rad_to_deg(turn_angle_3d(build));
    const bool ok = worst <= 1e-12 && std::abs(bend_deg - 32.57) <= 0.01;
    report(2, "bend formula self-consistency", ok,
           fmt("worst relative defect %.2e <= 1e-12; bend(105, 19) = %.4f deg (= 32.57 +- 0.01)",
               worst, bend_deg));
    std::printf("       note: the formula gives 32.57 deg at the build parameters while the\n"
                "       experiments report a 30.3 deg bend (21.44 deg planar); the preset\n"
                "       --paper-reported pins the planar angle to the measured value.\n");
}

// ---------------------------------------------------------------------------
// C3: heading decomposition exactness

void criterion_decomposition() {
    const auto exact = decompose_heading(deg_to_rad(63), deg_to_rad(21));
    const auto over = decompose_heading(deg_to_rad(70), deg_to_rad(21));
    const bool ok = exact.count == 3 && exact.residual_rad < 1e-9 && over.count == 4 &&
                    std::abs(over.residual_rad - deg_to_rad(14)) < 1e-9;
    report(3, "decomposition exactness", ok,
           fmt("63/21 -> 3 turns residual %.2e; 70/21 -> 4 turns residual %.4f deg",
               exact.residual_rad, rad_to_deg(over.residual_rad)));
}

// ---------------------------------------------------------------------------
// C4: planner round trip over 500 reachable goals

Plan random_reachable_plan(std::mt19937& rng, double increment_rad) {
    std::uniform_real_distribution<double> seg(50.0, 500.0);
    std::uniform_int_distribution<int> start_turns(0, 3);
    std::uniform_int_distribution<int> goal_turns(0, 2);
    std::uniform_int_distribution<int> coin(0, 1);

    Plan plan;
    plan.increment_rad = increment_rad;
    const int i = start_turns(rng);
    for (int t = 0; t < i; ++t) append_turn(plan, TurnDirection::Left);
    append_grow(plan, seg(rng));
    if (coin(rng)) {
        append_turn(plan, coin(rng) ? TurnDirection::Left : TurnDirection::Right);
        append_grow(plan, seg(rng));
    }
    const int m = goal_turns(rng);
    for (int t = 0; t < m; ++t) append_turn(plan, TurnDirection::Right);
    return plan;
}

void criterion_round_trip() {
    const double inc = deg_to_rad(21.44);
    std::mt19937 rng(1004);
    std::uniform_real_distribution<double> coord(-500.0, 500.0);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);

    int no_path = 0;
    double worst_pos = 0.0, worst_heading = 0.0;
    for (int k = 0; k < 500; ++k) {
        const Pose start(coord(rng), coord(rng), angle(rng));
        const Pose goal = execute(random_reachable_plan(rng, inc), start).terminal;

        PlanQuery q;
        q.start = start;
        q.goal = goal;
        q.increment_rad = inc;
        q.tolerance_rad = deg_to_rad(0.5);
        q.min_segment_mm = 20.0;
        try {
            const Plan plan = plan_dubins(q);
            const Pose landed = execute(plan, start).terminal;
            worst_pos = std::max(worst_pos, std::hypot(landed.x - goal.x, landed.y - goal.y));
            worst_heading =
                std::max(worst_heading, std::abs(wrap_signed(landed.heading - goal.heading)));
        } catch (const NoPathFound&) {
            ++no_path;
        }
    }
    const bool ok = no_path == 0 && worst_pos <= 1e-6 && worst_heading <= inc / 2.0;
    report(4, "planner round trip", ok,
           fmt("500 goals, worst position error %.2e mm <= 1e-6, worst heading error %.4f deg "
               "<= increment/2",
               worst_pos, rad_to_deg(worst_heading)) +
               (no_path ? " (" + std::to_string(no_path) + " NoPathFound)" : ""));
}

// ---------------------------------------------------------------------------
// C5: agreement with an exhaustive closed-form enumeration oracle

// Independent of the library path: solves each ray pair directly with
// Cramer's rule on the parametric equations and keeps the shortest total.
double oracle_best_length(const Pose& start, const Pose& goal, double inc, double tol,
                          double min_segment) {
    const int n = static_cast<int>(std::floor(kTwoPi / inc + 1e-9));
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double d1 = start.heading + i * inc;
        const double c1 = std::cos(d1), s1 = std::sin(d1);
        for (int j = 0; j < n; ++j) {
            const double d2b = goal.heading + std::numbers::pi + j * inc;  // backward
            const double cb = std::cos(d2b), sb = std::sin(d2b);

            // start + t*(c1, s1) = goal + s*(cb, sb)
            const double det = cb * s1 - c1 * sb;
            if (std::abs(det) < 1e-12) continue;
            const double bx = goal.x - start.x;
            const double by = goal.y - start.y;
            const double t = (cb * by - sb * bx) / det;
            const double s = (c1 * by - s1 * bx) / det;
            if (t < std::max(1e-9, min_segment) || s < std::max(1e-9, min_segment)) continue;

            const double travel2 = d2b + std::numbers::pi;
            const double vertex_change = std::remainder(travel2 - d1, kTwoPi);
            if (std::abs(std::abs(vertex_change) - inc) >= tol) continue;

            best = std::min(best, t + s);
        }
    }
    return best;
}

void criterion_oracle() {
    const double inc = deg_to_rad(21.44);
    const double tol = deg_to_rad(0.5);
    std::mt19937 rng(1005);
    std::uniform_real_distribution<double> coord(-500.0, 500.0);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> seg(50.0, 500.0);
    std::uniform_int_distribution<int> coin(0, 1);

    double worst = 0.0;
    int solved = 0;
    for (int k = 0; k < 100; ++k) {
        const Pose start(coord(rng), coord(rng), angle(rng));
        // at most two turns: optional left at the start plus one mid-course
        Plan seed;
        seed.increment_rad = inc;
        if (coin(rng)) append_turn(seed, TurnDirection::Left);
        append_grow(seed, seg(rng));
        append_turn(seed, coin(rng) ? TurnDirection::Left : TurnDirection::Right);
        append_grow(seed, seg(rng));
        const Pose goal = execute(seed, start).terminal;

        PlanQuery q;
        q.start = start;
        q.goal = goal;
        q.increment_rad = inc;
        q.tolerance_rad = tol;
        q.min_segment_mm = 20.0;

        const Plan plan = plan_dubins(q);
        const double oracle = oracle_best_length(start, goal, inc, tol, q.min_segment_mm);
        if (!std::isfinite(oracle)) continue;
        ++solved;
        worst = std::max(worst, std::abs(plan.total_grow_mm() - oracle));
    }
    const bool ok = solved == 100 && worst <= 1e-6;
    report(5, "oracle length equivalence", ok,
           std::to_string(solved) + "/100 instances, worst |planner - oracle| = " +
               fmt("%.2e mm <= 1e-6", worst));
}

// ---------------------------------------------------------------------------
// C6: single-turn statistics at desk scale

void criterion_group1_statistics() {
    Plan plan;
    plan.increment_rad = deg_to_rad(21.5);
    append_turn(plan, TurnDirection::Left);

    ErrorModel em;
    em.turn_mean_rad = deg_to_rad(21.5);
    em.turn_sigma_rad = deg_to_rad(1.5);
    em.seed = 1006;

    const auto s = monte_carlo(plan, Pose(0, 0, 0), em, 10000);
    const double mean_deg = rad_to_deg(s.heading_mean_rad);
    const double sd_deg = rad_to_deg(s.heading_sd_rad);
    const bool ok = std::abs(mean_deg - 21.5) <= 0.1 && std::abs(sd_deg - 1.5) <= 0.1;
    report(6, "single-turn statistics", ok,
           fmt("10000 runs: heading mean %.3f deg (21.5 +- 0.1), sd %.3f deg (1.5 +- 0.1)",
               mean_deg, sd_deg));
}

// ---------------------------------------------------------------------------
// C7: failure past ten consecutive same-direction turns

void criterion_failure_threshold() {
    Plan plan;
    plan.increment_rad = deg_to_rad(21.44);
    for (int k = 0; k < 11; ++k) append_turn(plan, TurnDirection::Left);

    const ErrorModel em;  // defaults: max_consecutive_same_dir = 10
    const SimTrace trace = execute_noisy(plan, Pose(0, 0, 0), em);
    int turned = 0;
    for (const auto& ev : trace.events)
        if (ev.kind == SimEvent::Kind::Turned) ++turned;

    const auto s = monte_carlo(plan, Pose(0, 0, 0), em, 100);
    const bool ok = trace.failed && turned == 10 &&
                    trace.events.back().kind == SimEvent::Kind::Failed &&
                    s.failure_rate == 1.0;
    report(7, "failure threshold", ok,
           "11-turn plan fails after " + std::to_string(turned) + " turns; " +
               fmt("failure rate %.2f = 1.0", s.failure_rate));
}

// ---------------------------------------------------------------------------
// C8: alternation neutralizes degradation

void criterion_alternation() {
    ErrorModel em;
    em.turn_mean_rad = deg_to_rad(21.0);
    em.turn_sigma_rad = 0.0;
    em.degradation_per_repeat_rad = deg_to_rad(0.5);

    Plan alternating;
    alternating.increment_rad = em.turn_mean_rad;
    Plan same_dir;
    same_dir.increment_rad = em.turn_mean_rad;
    for (int k = 0; k < 10; ++k) {
        append_turn(alternating, k % 2 ? TurnDirection::Right : TurnDirection::Left);
        append_turn(same_dir, TurnDirection::Left);
    }

    bool alternating_exact = true;
    for (const auto& ev : execute_noisy(alternating, Pose(0, 0, 0), em).events)
        alternating_exact &= ev.effective_angle_rad == em.turn_mean_rad;

    bool strictly_decreasing = true;
    const auto same_trace = execute_noisy(same_dir, Pose(0, 0, 0), em);
    for (std::size_t k = 1; k < same_trace.events.size(); ++k)
        strictly_decreasing &= same_trace.events[k].effective_angle_rad <
                               same_trace.events[k - 1].effective_angle_rad;

    report(8, "alternation neutrality", alternating_exact && strictly_decreasing,
           std::string("alternating angles all exactly turn_mean: ") +
               (alternating_exact ? "yes" : "no") +
               "; same-direction strictly decreasing: " + (strictly_decreasing ? "yes" : "no"));
}

// ---------------------------------------------------------------------------
// C9: dogleg displaces exactly laterally

void criterion_dogleg() {
    std::mt19937 rng(1009);
    std::uniform_real_distribution<double> offset(-100.0, 100.0);
    std::uniform_real_distribution<double> inc_deg(5.0, 90.0);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);

    double worst_lateral = 0.0, worst_heading = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double off = offset(rng);
        const double inc = deg_to_rad(inc_deg(rng));
        const Pose start(17.0, -4.0, angle(rng));
        const Pose end = execute(dogleg_correction(off, inc, 0.0), start).terminal;
        const double dx = end.x - start.x;
        const double dy = end.y - start.y;
        const double lateral = -std::sin(start.heading) * dx + std::cos(start.heading) * dy;
        worst_lateral = std::max(worst_lateral, std::abs(lateral - off));
        worst_heading =
            std::max(worst_heading, std::abs(wrap_signed(end.heading - start.heading)));
    }
    const bool ok = worst_lateral <= 1e-9 && worst_heading <= 1e-9;
    report(9, "dogleg correctness", ok,
           fmt("200 draws: worst lateral error %.2e mm, worst heading error %.2e rad (<= 1e-9)",
               worst_lateral, worst_heading));
}

// ---------------------------------------------------------------------------
// C10: serialization round trip and bit-stable outputs

void criterion_io_stability() {
    std::mt19937 rng(1010);
    std::uniform_real_distribution<double> seg(0.5, 800.0);
    std::uniform_real_distribution<double> inc(0.5, 90.0);
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<int> kind(0, 2);

    bool round_trip_ok = true;
    for (int k = 0; k < 200; ++k) {
        Plan plan;
        plan.increment_rad = deg_to_rad(inc(rng));
        const int n = len(rng);
        for (int t = 0; t < n; ++t) {
            switch (kind(rng)) {
                case 0: append_grow(plan, seg(rng)); break;
                case 1: append_turn(plan, TurnDirection::Left); break;
                default: append_turn(plan, TurnDirection::Right); break;
            }
        }
        plan.meta.heading_residual_rad = deg_to_rad(inc(rng)) / 4.0;
        round_trip_ok &= plans_equal(plan, plan_from_json(plan_to_json(plan)));
    }

    Plan plan;
    plan.increment_rad = deg_to_rad(21.44);
    append_grow(plan, 100.0);
    append_turn(plan, TurnDirection::Left);
    append_grow(plan, 80.0);
    append_turn(plan, TurnDirection::Right);
    append_grow(plan, 60.0);
    ErrorModel em;
    em.seed = 7;

    namespace fs = std::filesystem;
    const fs::path dir = "acceptance_scratch";
    fs::create_directories(dir);
    bool files_identical = true;
    for (const char* kind_name : {"csv", "svg"}) {
        const fs::path a = dir / (std::string("run_a.") + kind_name);
        const fs::path b = dir / (std::string("run_b.") + kind_name);
        for (const auto& path : {a, b}) {
            const SimTrace trace = execute_noisy(plan, Pose(0, 0, 0), em);
            write_text_file(path.string(), std::string(kind_name) == "csv"
                                               ? trace_to_csv(trace)
                                               : trace_to_svg(trace));
        }
        files_identical &= read_text_file(a.string()) == read_text_file(b.string());
    }

    report(10, "serialization stability", round_trip_ok && files_identical,
           std::string("JSON round trip equal: ") + (round_trip_ok ? "yes" : "no") +
               "; CSV/SVG byte-identical across runs: " + (files_identical ? "yes" : "no"));
}

}  // namespace

int main() {
    criterion_projection();
    criterion_bend_formula();
    criterion_decomposition();
    criterion_round_trip();
    criterion_oracle();
    criterion_group1_statistics();
    criterion_failure_threshold();
    criterion_alternation();
    criterion_dogleg();
    criterion_io_stability();

    std::printf("[ACCEPTANCE] %d/10 criteria passed\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
