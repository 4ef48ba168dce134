#include "wrinklepath/sim.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace wrinklepath {

namespace {

constexpr const char* kFailureReason = "consecutive_turn_limit";

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Flat per-run storage: one row of turn magnitudes per run (NaN where the
// run stopped early), so aggregation streams through contiguous memory.
struct RunResults {
    std::vector<Pose> terminal;
    std::vector<char> failed;
    std::vector<double> turn_angles;  // runs x turns, row-major
    std::size_t turns = 0;

    explicit RunResults(std::uint64_t runs, std::size_t turns_)
        : terminal(runs),
          failed(runs, 0),
          turn_angles(runs * turns_, std::numeric_limits<double>::quiet_NaN()),
          turns(turns_) {}
};

void run_once(const Plan& plan, const Pose& start, const ErrorModel& em,
              std::uint64_t run_index, RunResults& out) {
    ErrorModel e = em;
    e.seed = em.seed + run_index;
    const SimTrace trace = execute_noisy(plan, start, e);
    out.terminal[run_index] = trace.terminal;
    out.failed[run_index] = trace.failed ? 1 : 0;
    double* row = out.turn_angles.data() + run_index * out.turns;
    std::size_t k = 0;
    for (const auto& ev : trace.events)
        if (ev.kind == SimEvent::Kind::Turned) row[k++] = std::abs(ev.effective_angle_rad);
}

// Fixed-order compensated aggregation: the summary cannot depend on how the
// runs were scheduled across threads.
MonteCarloSummary aggregate(const Plan& plan, const Pose& start, const RunResults& results) {
    MonteCarloSummary s;
    s.runs = results.terminal.size();

    const Pose reference = execute(plan, start).terminal;

    KahanSum sum_x, sum_y, sum_dev, sum_sq_err;
    std::uint64_t ok = 0;
    for (std::size_t r = 0; r < results.terminal.size(); ++r) {
        if (results.failed[r]) {
            ++s.failures;
            continue;
        }
        ++ok;
        const Pose& t = results.terminal[r];
        sum_x.add(t.x);
        sum_y.add(t.y);
        sum_dev.add(wrap_signed(t.heading - reference.heading));
        const double ex = t.x - reference.x;
        const double ey = t.y - reference.y;
        sum_sq_err.add(ex * ex + ey * ey);
    }
    s.failure_rate = static_cast<double>(s.failures) / static_cast<double>(s.runs);
    s.pose_stats_valid = ok > 0;

    if (s.pose_stats_valid) {
        const double n = static_cast<double>(ok);
        const double mean_dev = sum_dev.sum / n;
        s.mean_terminal =
            Pose(sum_x.sum / n, sum_y.sum / n, reference.heading + mean_dev);
        s.heading_mean_rad = s.mean_terminal.heading;
        s.position_rmse_mm = std::sqrt(sum_sq_err.sum / n);

        KahanSum sum_var;
        for (std::size_t r = 0; r < results.terminal.size(); ++r) {
            if (results.failed[r]) continue;
            const double d =
                wrap_signed(results.terminal[r].heading - reference.heading) - mean_dev;
            sum_var.add(d * d);
        }
        s.heading_sd_rad = ok > 1 ? std::sqrt(sum_var.sum / (n - 1.0)) : 0.0;
    } else {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        s.position_rmse_mm = nan;
        s.heading_mean_rad = nan;
        s.heading_sd_rad = nan;
    }

    const std::size_t turns = results.turns;
    s.per_turn_mean_rad.assign(turns, 0.0);
    s.per_turn_sd_rad.assign(turns, 0.0);
    s.per_turn_samples.assign(turns, 0);
    if (turns > 0) {
        std::vector<KahanSum> sums(turns);
        std::vector<std::uint64_t> counts(turns, 0);
        for (std::size_t r = 0; r < results.terminal.size(); ++r) {
            const double* row = results.turn_angles.data() + r * turns;
            for (std::size_t k = 0; k < turns; ++k) {
                if (std::isnan(row[k])) break;  // the run stopped here
                sums[k].add(row[k]);
                ++counts[k];
            }
        }
        for (std::size_t k = 0; k < turns; ++k) {
            s.per_turn_samples[k] = counts[k];
            if (counts[k] > 0) s.per_turn_mean_rad[k] = sums[k].sum / counts[k];
        }
        std::vector<KahanSum> vars(turns);
        for (std::size_t r = 0; r < results.terminal.size(); ++r) {
            const double* row = results.turn_angles.data() + r * turns;
            for (std::size_t k = 0; k < turns; ++k) {
                if (std::isnan(row[k])) break;
                const double d = row[k] - s.per_turn_mean_rad[k];
                vars[k].add(d * d);
            }
        }
        for (std::size_t k = 0; k < turns; ++k)
            if (counts[k] > 1)
                s.per_turn_sd_rad[k] =
                    std::sqrt(vars[k].sum / static_cast<double>(counts[k] - 1));
    }
    return s;
}

}  // namespace

void ErrorModel::validate() const {
    if (!std::isfinite(turn_mean_rad))
        throw std::domain_error("ErrorModel: non-finite turn mean");
    if (!(turn_sigma_rad >= 0.0))
        throw std::domain_error("ErrorModel: turn sigma must be >= 0");
    if (!(degradation_per_repeat_rad >= 0.0))
        throw std::domain_error("ErrorModel: degradation must be >= 0");
    if (max_consecutive_same_dir < 1)
        throw std::domain_error("ErrorModel: max consecutive turns must be >= 1");
}

SimTrace execute(const Plan& plan, const Pose& start) {
    plan.validate();
    SimTrace trace;
    trace.poses.reserve(plan.primitives.size() + 1);
    trace.events.reserve(plan.primitives.size());
    trace.poses.push_back(start);
    Pose cur = start;
    for (const auto& pr : plan.primitives) {
        SimEvent ev;
        if (pr.kind == Primitive::Kind::Grow) {
            cur = advance(cur, pr.grow_mm);
            ev.kind = SimEvent::Kind::Grew;
            ev.grew_mm = pr.grow_mm;
        } else {
            cur = rotate_in_place(cur, direction_sign(pr.dir) * plan.increment_rad);
            ev.kind = SimEvent::Kind::Turned;
            ev.dir = pr.dir;
            ev.effective_angle_rad = plan.increment_rad;
        }
        trace.events.push_back(std::move(ev));
        trace.poses.push_back(cur);
    }
    trace.terminal = cur;
    return trace;
}

SimTrace execute_noisy(const Plan& plan, const Pose& start, const ErrorModel& em) {
    plan.validate();
    em.validate();

    SimTrace trace;
    trace.poses.reserve(plan.primitives.size() + 1);
    trace.events.reserve(plan.primitives.size());
    trace.poses.push_back(start);
    Pose cur = start;

    std::mt19937_64 rng(em.seed);
    // sigma = 0 skips the distribution entirely; N(0, 0) is undefined for it.
    std::normal_distribution<double> noise(0.0, em.turn_sigma_rad > 0.0 ? em.turn_sigma_rad : 1.0);

    int run_length = 0;  // consecutive same-direction turns so far
    TurnDirection run_dir = TurnDirection::Left;

    for (const auto& pr : plan.primitives) {
        if (pr.kind == Primitive::Kind::Grow) {
            cur = advance(cur, pr.grow_mm);
            SimEvent ev;
            ev.kind = SimEvent::Kind::Grew;
            ev.grew_mm = pr.grow_mm;
            trace.events.push_back(std::move(ev));
            trace.poses.push_back(cur);
            continue;
        }

        const int c = (run_length > 0 && pr.dir == run_dir) ? run_length + 1 : 1;
        if (c > em.max_consecutive_same_dir) {
            // Accumulated material shift: the feed no longer lines up with
            // the rollers and the system jams.
            SimEvent ev;
            ev.kind = SimEvent::Kind::Failed;
            ev.reason = kFailureReason;
            trace.events.push_back(std::move(ev));
            trace.failed = true;
            break;
        }
        run_dir = pr.dir;
        run_length = c;

        double effective = em.turn_mean_rad - em.degradation_per_repeat_rad * (c - 1);
        if (em.turn_sigma_rad > 0.0) effective += noise(rng);
        cur = rotate_in_place(cur, direction_sign(pr.dir) * effective);

        SimEvent ev;
        ev.kind = SimEvent::Kind::Turned;
        ev.dir = pr.dir;
        ev.effective_angle_rad = effective;
        trace.events.push_back(std::move(ev));
        trace.poses.push_back(cur);
    }
    trace.terminal = cur;
    return trace;
}

MonteCarloSummary monte_carlo(const Plan& plan, const Pose& start,
                              const ErrorModel& em, std::uint64_t runs) {
    if (runs < 1) throw std::domain_error("monte_carlo: runs must be >= 1");
    plan.validate();
    em.validate();

    RunResults results(runs, static_cast<std::size_t>(plan.turn_count()));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(runs); ++r)
        run_once(plan, start, em, static_cast<std::uint64_t>(r), results);

    return aggregate(plan, start, results);
}

MonteCarloSummary monte_carlo_serial(const Plan& plan, const Pose& start,
                                     const ErrorModel& em, std::uint64_t runs) {
    if (runs < 1) throw std::domain_error("monte_carlo: runs must be >= 1");
    plan.validate();
    em.validate();

    RunResults results(runs, static_cast<std::size_t>(plan.turn_count()));
    for (std::uint64_t r = 0; r < runs; ++r) run_once(plan, start, em, r, results);

    return aggregate(plan, start, results);
}

}  // namespace wrinklepath
