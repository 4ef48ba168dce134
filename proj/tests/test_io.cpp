#include <algorithm>
#include <random>
#include <sstream>

#include <doctest.h>

#include "wrinklepath/config.hpp"
#include "wrinklepath/plan_io.hpp"

using namespace wrinklepath;

namespace {

Plan random_plan(std::mt19937& rng) {
    std::uniform_real_distribution<double> seg(0.5, 800.0);
    std::uniform_real_distribution<double> inc(0.5, 90.0);
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<int> kind(0, 2);

    Plan plan;
    plan.increment_rad = deg_to_rad(inc(rng));
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
        switch (kind(rng)) {
            case 0: append_grow(plan, seg(rng)); break;
            case 1: append_turn(plan, TurnDirection::Left); break;
            default: append_turn(plan, TurnDirection::Right); break;
        }
    }
    plan.meta.heading_residual_rad = deg_to_rad(inc(rng)) / 3.0;
    if (kind(rng) == 0) plan.meta.path_type = "LSL";
    return plan;
}

}  // namespace

TEST_CASE("plan JSON round trip") {
    std::mt19937 rng(41);
    for (int k = 0; k < 200; ++k) {
        const Plan plan = random_plan(rng);
        const Plan back = plan_from_json(plan_to_json(plan));
        CHECK(plans_equal(plan, back));
    }
}

TEST_CASE("plan JSON serialization is stable") {
    Plan plan;
    plan.increment_rad = deg_to_rad(21.44);
    append_grow(plan, 100.0);
    append_turn(plan, TurnDirection::Left);
    append_grow(plan, 50.5);
    CHECK(plan_to_json(plan) == plan_to_json(plan));
    const std::string text = plan_to_json(plan);
    CHECK(text.find("\"increment_deg\"") != std::string::npos);
    CHECK(text.find("\"op\": \"grow\"") != std::string::npos);
    CHECK(text.find("\"dir\": \"L\"") != std::string::npos);
}

TEST_CASE("plan JSON rejects malformed documents") {
    CHECK_THROWS_AS(plan_from_json("not json"), PlanFormatError);
    CHECK_THROWS_AS(plan_from_json("[1,2]"), PlanFormatError);
    CHECK_THROWS_AS(plan_from_json(R"({"primitives": []})"), PlanFormatError);
    CHECK_THROWS_AS(plan_from_json(R"({"increment_deg": -2, "primitives": []})"),
                    PlanFormatError);
    CHECK_THROWS_AS(
        plan_from_json(R"({"increment_deg": 21, "primitives": [{"op": "shrink"}]})"),
        PlanFormatError);
    CHECK_THROWS_AS(
        plan_from_json(R"({"increment_deg": 21, "primitives": [{"op": "grow", "mm": -5}]})"),
        PlanFormatError);
    CHECK_THROWS_AS(
        plan_from_json(R"({"increment_deg": 21, "primitives": [{"op": "turn", "dir": "X"}]})"),
        PlanFormatError);

    // consecutive grows violate the plan invariant; the message names the index
    try {
        plan_from_json(
            R"({"increment_deg": 21,
                "primitives": [{"op":"grow","mm":10}, {"op":"grow","mm":20}]})");
        FAIL("expected PlanFormatError");
    } catch (const PlanFormatError& e) {
        CHECK(std::string(e.what()).find("primitives[1]") != std::string::npos);
    }
}

TEST_CASE("trace CSV has one row per pose") {
    Plan plan;
    plan.increment_rad = deg_to_rad(90);
    append_grow(plan, 100.0);
    append_turn(plan, TurnDirection::Left);
    append_grow(plan, 50.0);

    const auto trace = execute(plan, Pose(0, 0, 0));
    const std::string csv = trace_to_csv(trace);

    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "index,x_mm,y_mm,heading_deg,event");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == static_cast<int>(plan.primitives.size()) + 1);
    CHECK(csv.find("start") != std::string::npos);
    CHECK(csv.find("grow:100.000000") != std::string::npos);
    CHECK(csv.find("turn:L:90.000000") != std::string::npos);
}

TEST_CASE("trace CSV records failures") {
    Plan plan;
    plan.increment_rad = deg_to_rad(21.44);
    for (int k = 0; k < 11; ++k) append_turn(plan, TurnDirection::Left);
    const auto trace = execute_noisy(plan, Pose(0, 0, 0), ErrorModel{});
    const std::string csv = trace_to_csv(trace);
    CHECK(csv.find("failed:consecutive_turn_limit") != std::string::npos);
}

TEST_CASE("SVG render is one polyline plus turn markers") {
    Plan plan;
    plan.increment_rad = deg_to_rad(21.44);
    append_grow(plan, 120.0);
    append_turn(plan, TurnDirection::Left);
    append_grow(plan, 80.0);
    append_turn(plan, TurnDirection::Right);
    append_grow(plan, 60.0);

    const auto trace = execute(plan, Pose(0, 0, 0));
    const std::string svg = trace_to_svg(trace);

    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);

    auto count = [&svg](const std::string& needle) {
        std::size_t n = 0, pos = 0;
        while ((pos = svg.find(needle, pos)) != std::string::npos) {
            ++n;
            pos += needle.size();
        }
        return n;
    };
    CHECK(count("<polyline") == 1);
    CHECK(count("<circle") == static_cast<std::size_t>(plan.turn_count()));
    CHECK(count("#22aa22") == 1);  // left turn marker
    CHECK(count("#cc2222") == 1);  // right turn marker

    // polyline vertex count equals the pose count
    const auto points_at = svg.find("points=\"");
    REQUIRE(points_at != std::string::npos);
    const auto points_end = svg.find('"', points_at + 8);
    const std::string points = svg.substr(points_at + 8, points_end - points_at - 8);
    const std::size_t vertices =
        1 + static_cast<std::size_t>(std::count(points.begin(), points.end(), ' '));
    CHECK(vertices == trace.poses.size());
}

TEST_CASE("trace outputs are bit-stable for a fixed seed") {
    Plan plan;
    plan.increment_rad = deg_to_rad(21.44);
    append_grow(plan, 100.0);
    append_turn(plan, TurnDirection::Left);
    append_grow(plan, 100.0);

    ErrorModel em;
    em.seed = 7;
    const std::string csv_a = trace_to_csv(execute_noisy(plan, Pose(0, 0, 0), em));
    const std::string csv_b = trace_to_csv(execute_noisy(plan, Pose(0, 0, 0), em));
    CHECK(csv_a == csv_b);
    const std::string svg_a = trace_to_svg(execute_noisy(plan, Pose(0, 0, 0), em));
    const std::string svg_b = trace_to_svg(execute_noisy(plan, Pose(0, 0, 0), em));
    CHECK(svg_a == svg_b);
}

TEST_CASE("config file parsing") {
    const std::string path = "test_config.cfg";
    write_text_file(path,
                    "# build parameters\n"
                    "tube_width_L_mm = 105\n"
                    "fold_length_D_mm = 19\n"
                    "tape_placement_deg = 45\n"
                    "increment_override_deg = 21\n"
                    "tolerance_deg = 0.5\n"
                    "min_segment_mm = 25\n"
                    "turn_mean_deg = 21.5\n"
                    "turn_sigma_deg = 1.5\n"
                    "degradation_per_repeat_deg = 0.25\n"
                    "max_consecutive_same_dir = 10\n"
                    "seed = 42\n");
    const Config cfg = load_config_file(path);
    CHECK(cfg.tube.tube_width_mm == 105.0);
    CHECK(cfg.tube.fold_length_mm == 19.0);
    REQUIRE(cfg.increment_override_rad.has_value());
    CHECK(*cfg.increment_override_rad == doctest::Approx(deg_to_rad(21)).epsilon(1e-12));
    CHECK(cfg.min_segment_mm == 25.0);
    CHECK(cfg.error_model.seed == 42);
    CHECK(cfg.error_model.max_consecutive_same_dir == 10);
    CHECK(effective_increment_rad(cfg, false) == *cfg.increment_override_rad);
    CHECK(effective_increment_rad(cfg, true) ==
          doctest::Approx(deg_to_rad(21.44)).epsilon(1e-12));
}

TEST_CASE("config rejects unknown keys and bad values") {
    const std::string path = "test_config_bad.cfg";
    write_text_file(path, "tube_width_L_mm = 105\nwheel_count = 4\n");
    try {
        load_config_file(path);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string what = e.what();
        CHECK(what.find("line 2") != std::string::npos);
        CHECK(what.find("wheel_count") != std::string::npos);
    }

    write_text_file(path, "tube_width_L_mm\n");
    CHECK_THROWS_AS(load_config_file(path), ConfigError);

    write_text_file(path, "tube_width_L_mm = fast\n");
    CHECK_THROWS_AS(load_config_file(path), ConfigError);

    // invariant violations surface at load time
    write_text_file(path, "fold_length_D_mm = 200\n");
    CHECK_THROWS_AS(load_config_file(path), ConfigError);

    CHECK_THROWS_AS(load_config_file("does_not_exist.cfg"), ConfigError);
}

TEST_CASE("default effective increment comes from the formula") {
    const Config cfg;
    // D*180/L * cos(45 deg) = 23.03 deg
    CHECK(rad_to_deg(effective_increment_rad(cfg, false)) ==
          doctest::Approx(19.0 * 180.0 / 105.0 * std::cos(std::numbers::pi / 4))
              .epsilon(1e-12));
    CHECK(rad_to_deg(effective_increment_rad(cfg, true)) == doctest::Approx(21.44));
}
