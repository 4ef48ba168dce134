// Benchmark comparing the OpenMP kernels against their serial references.
// Both the planner candidate sweep and the Monte Carlo evaluation must
// produce identical results in either mode; this also asserts that.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wrinklepath/plan.hpp"
#include "wrinklepath/planner.hpp"
#include "wrinklepath/sim.hpp"

using namespace wrinklepath;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

std::vector<PlanQuery> make_queries(int count, double increment_rad) {
    // Goals come from forward-simulated plans so every query is solvable.
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> seg(50.0, 500.0);
    std::uniform_int_distribution<int> start_turns(0, 3);
    std::uniform_int_distribution<int> goal_turns(0, 2);
    std::uniform_int_distribution<int> coin(0, 1);

    std::vector<PlanQuery> queries;
    queries.reserve(count);
    for (int k = 0; k < count; ++k) {
        Plan plan;
        plan.increment_rad = increment_rad;
        const int i = start_turns(rng);
        for (int t = 0; t < i; ++t) append_turn(plan, TurnDirection::Left);
        append_grow(plan, seg(rng));
        append_turn(plan, coin(rng) ? TurnDirection::Left : TurnDirection::Right);
        append_grow(plan, seg(rng));
        const int m = goal_turns(rng);
        for (int t = 0; t < m; ++t) append_turn(plan, TurnDirection::Right);

        PlanQuery q;
        q.start = Pose(0.0, 0.0, 0.0);
        q.goal = execute(plan, q.start).terminal;
        q.increment_rad = increment_rad;
        q.tolerance_rad = deg_to_rad(0.25);
        q.min_segment_mm = 20.0;
        queries.push_back(q);
    }
    return queries;
}

void bench_planner() {
    const double increment = deg_to_rad(1.5);  // 240 rays, ~58k candidate pairs
    const auto queries = make_queries(50, increment);

    double serial_ms = now_ms();
    std::vector<Plan> serial_plans;
    for (const auto& q : queries) serial_plans.push_back(plan_dubins_serial(q));
    serial_ms = now_ms() - serial_ms;

    double parallel_ms = now_ms();
    std::vector<Plan> parallel_plans;
    for (const auto& q : queries) parallel_plans.push_back(plan_dubins(q));
    parallel_ms = now_ms() - parallel_ms;

    for (std::size_t k = 0; k < queries.size(); ++k) {
        if (!plans_equal(serial_plans[k], parallel_plans[k])) {
            std::fprintf(stderr, "planner results diverge at query %zu\n", k);
            std::exit(1);
        }
    }
    std::printf("plan_dubins   %4zu queries  serial %8.1f ms  parallel %8.1f ms  speedup %.2fx\n",
                queries.size(), serial_ms, parallel_ms, serial_ms / parallel_ms);
}

bool summaries_equal(const MonteCarloSummary& a, const MonteCarloSummary& b) {
    return a.runs == b.runs && a.failures == b.failures &&
           a.mean_terminal == b.mean_terminal && a.position_rmse_mm == b.position_rmse_mm &&
           a.heading_mean_rad == b.heading_mean_rad && a.heading_sd_rad == b.heading_sd_rad &&
           a.per_turn_mean_rad == b.per_turn_mean_rad && a.per_turn_sd_rad == b.per_turn_sd_rad;
}

void bench_monte_carlo() {
    Plan plan;
    plan.increment_rad = deg_to_rad(21.44);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> seg(50.0, 300.0);
    for (int k = 0; k < 12; ++k) {
        append_grow(plan, seg(rng));
        append_turn(plan, k % 2 ? TurnDirection::Left : TurnDirection::Right);
    }

    ErrorModel em;
    em.seed = 99;
    const std::uint64_t runs = 200000;

    double serial_ms = now_ms();
    const auto serial = monte_carlo_serial(plan, Pose(0, 0, 0), em, runs);
    serial_ms = now_ms() - serial_ms;

    double parallel_ms = now_ms();
    const auto parallel = monte_carlo(plan, Pose(0, 0, 0), em, runs);
    parallel_ms = now_ms() - parallel_ms;

    if (!summaries_equal(serial, parallel)) {
        std::fprintf(stderr, "monte carlo results diverge\n");
        std::exit(1);
    }
    std::printf("monte_carlo    %llu runs  serial %8.1f ms  parallel %8.1f ms  speedup %.2fx\n",
                static_cast<unsigned long long>(runs), serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp not enabled; parallel paths fall back to serial\n");
#endif
    bench_planner();
    bench_monte_carlo();
    return 0;
}
