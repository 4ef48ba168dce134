#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wrinklepath/geometry.hpp"
#include "wrinklepath/plan.hpp"

namespace wrinklepath {

// Recorded in user-facing output; traces are reproducible per implementation
// of this generator pairing, not bit-for-bit across standard libraries.
inline constexpr const char* kRngName = "mt19937_64+std::normal_distribution";

/// Per-turn error model. Consecutive same-direction turns degrade linearly
/// and fail past a threshold; alternating direction resets the count.
struct ErrorModel {
    double turn_mean_rad = deg_to_rad(21.5);
    double turn_sigma_rad = deg_to_rad(1.5);
    // No measured degradation rate exists, so this defaults to zero and must
    // be set explicitly to model the effect.
    double degradation_per_repeat_rad = 0.0;
    int max_consecutive_same_dir = 10;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SimEvent {
    enum class Kind { Grew, Turned, Failed };

    Kind kind = Kind::Grew;
    double grew_mm = 0.0;                     // Grew
    TurnDirection dir = TurnDirection::Left;  // Turned
    double effective_angle_rad = 0.0;         // Turned: magnitude actually applied
    std::string reason;                       // Failed
};

/// Execution record: one pose per executed primitive plus the initial pose.
/// A failure appends a Failed event and stops; the failed primitive adds no
/// pose.
struct SimTrace {
    std::vector<Pose> poses;
    std::vector<SimEvent> events;
    Pose terminal;
    bool failed = false;
};

/// Deterministic kinematic execution: grows advance, turns rotate in place
/// by the plan's increment. Never fails.
SimTrace execute(const Plan& plan, const Pose& start);

/// Stochastic execution under the error model. Each turn applies
/// turn_mean - degradation*(c-1) + N(0, sigma), where c counts consecutive
/// same-direction turns; growing does not reset c. A turn that would push c
/// past max_consecutive_same_dir records a Failed event and stops the run.
/// Fully reproducible from em.seed.
SimTrace execute_noisy(const Plan& plan, const Pose& start, const ErrorModel& em);

struct MonteCarloSummary {
    Pose mean_terminal;              // over non-failed runs
    double position_rmse_mm = 0.0;   // vs. the noise-free terminal
    double heading_mean_rad = 0.0;
    double heading_sd_rad = 0.0;
    double failure_rate = 0.0;
    bool pose_stats_valid = false;   // false when every run failed

    // Effective turn magnitude statistics per turn ordinal, over the runs
    // that executed that turn.
    std::vector<double> per_turn_mean_rad;
    std::vector<double> per_turn_sd_rad;
    std::vector<std::uint64_t> per_turn_samples;

    std::uint64_t runs = 0;
    std::uint64_t failures = 0;
};

/// runs independent executions with seeds em.seed .. em.seed+runs-1,
/// aggregated with compensated summation in run order so the result does not
/// depend on scheduling. Runs are evaluated in parallel when OpenMP is
/// available.
MonteCarloSummary monte_carlo(const Plan& plan, const Pose& start,
                              const ErrorModel& em, std::uint64_t runs);

/// Serial reference for monte_carlo; kept for tests and benchmarks.
MonteCarloSummary monte_carlo_serial(const Plan& plan, const Pose& start,
                                     const ErrorModel& em, std::uint64_t runs);

}  // namespace wrinklepath
