/**
 * @file mpc.hpp
 * @brief Shrinking-horizon model predictive control and backtests.
 *
 * At each replan time the certainty-equivalent program is rebuilt on [t, T]
 * from the current wealth, solved, and its first control applied. Between
 * replans the plan's own ratios (c_k/w_k, theta_k, l_k/w_k) for the period
 * containing t are applied to the current wealth, clipped to the spec's
 * instantaneous consumption constraints.
 */

#pragma once

#include "merton/builder/builder.hpp"
#include "merton/simulator/simulator.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace merton::mpc {

struct MpcConfig {
    enum class Horizon {
        FixedStep,  ///< K = max(1, round((T - t) / step))
        FixedK,     ///< K = periods at every replan
    };

    double replan_interval = 0.25;  ///< years between replans
    Horizon horizon = Horizon::FixedStep;
    double step = 0.05;
    int periods = 50;
    /// Accepted for interface completeness; the Clarabel backend has no warm
    /// start, so it has no effect.
    bool warm_start = false;
    /// For wealth-homogeneous specs, solve once per replan time at the
    /// reference wealth and scale (the program is positively homogeneous).
    bool exploit_homogeneity = true;
    conic::SolverSettings solver;

    /// Throws std::invalid_argument unless 0 < replan_interval <= T, step > 0, periods >= 1.
    void check(double horizon) const;
    int periods_at(double t, double horizon) const;
};

struct MpcDecision {
    Action action;
    builder::Trajectory plan;
};

/// First control of the plan over [t, T] from wealth w. Solver failures raise
/// builder::PlanError carrying the failing program.
MpcDecision mpc_act(double t, double w, const ProblemSpec& spec, const MpcConfig& config);

/// Clips a held action to the spec's instantaneous consumption constraints at
/// time t and wealth w (floor, spending limit, emergency fund).
Action enforce_instantaneous(const ProblemSpec& spec, double t, double w, Action action);

class MpcPolicy : public sim::Policy {
public:
    MpcPolicy(ProblemSpec spec, MpcConfig config);

    using sim::Policy::act;
    void act(double t, double w, Action& out) override;
    void reset() override;
    std::unique_ptr<sim::Policy> clone() const override;
    bool proportional() const override;

    /// Wall-clock seconds of every solve made by this policy and its clones.
    std::vector<double> solve_seconds() const;
    std::size_t num_solves() const;

private:
    /// Per-period control ratios of one solved plan.
    struct Schedule {
        double start = 0.0;
        double step = 0.0;
        Vector consumption;  // c_k / w_k
        Matrix theta;        // n x K
        Vector premium;      // l_k / w_k
    };
    struct Shared {
        std::mutex mutex;
        std::map<double, std::shared_ptr<const Schedule>> cache;
        std::vector<double> solve_seconds;
    };
    std::shared_ptr<const Schedule> solve_schedule(double t, double w);

    std::shared_ptr<const ProblemSpec> spec_;
    MpcConfig config_;
    bool homogeneous_ = false;
    std::shared_ptr<Shared> shared_;
    std::shared_ptr<const Schedule> held_;
    double next_replan_ = 0.0;
};

struct PolicyReport {
    std::string name;
    std::size_t paths = 0;
    double mean_utility = 0.0;
    std::optional<double> std_error;
    double ce_wealth = 0.0;  ///< (rho U)^(1/rho): wealth whose utility scale matches U
    double ruin_rate = 0.0;
};

struct TimingSummary {
    std::size_t solves = 0;
    double p50 = 0.0;
    double p90 = 0.0;
    double max = 0.0;
    double total = 0.0;
};

struct BacktestReport {
    PolicyReport mpc;
    std::optional<PolicyReport> analytic;  ///< when the spec has a closed form
    std::optional<double> joint_std_error;
    std::optional<double> difference;      ///< mpc - analytic mean utility
    TimingSummary timing;
};

/// Runs monte_carlo with the MPC policy and, when available, the analytic
/// policy, on independent random streams derived from `seed`.
BacktestReport backtest(const ProblemSpec& spec, const MpcConfig& config, std::size_t N, std::uint64_t seed,
                        const sim::SimOptions& sim_options = {});

TimingSummary summarize_timing(std::vector<double> seconds);

/// JSON text of the report. Timing is omitted unless requested so the
/// output is reproducible byte for byte.
std::string backtest_to_json(const BacktestReport& report, bool include_timing = false);

}  // namespace merton::mpc
