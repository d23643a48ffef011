/**
 * @file builder.hpp
 * @brief Discretized certainty-equivalent problem as a conic program.
 *
 * For k = 0..K-1 with h = (T - t0)/K and t_k = t0 + h k the base program is
 *
 *     maximize    (beta/gamma) w_K^gamma + sum_k (h/gamma) c_k^gamma
 *     subject to  w_{k+1} <= w_k + h (mu'x_k - c_k) - h ((1-gamma)/2) s_k,
 *                 x_k' Sigma x_k / w_k <= s_k,
 *                 x_k / w_k in Theta   (k = 0..K),
 *                 w_0 = w_init,  w_k >= eps_w.
 *
 * Extension blocks are recorded by the apply_* calls and emitted by build().
 * Objective terms are power-cone hypographs with a linear objective.
 */

#pragma once

#include "merton/builder/cones.hpp"
#include "merton/conic/solver.hpp"
#include "merton/core/covariance.hpp"
#include "merton/core/types.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

namespace merton::builder {

enum class SlackMode {
    Inequality,     ///< dynamics as w_{k+1} <= ... (the paper's form)
    ExplicitSlack,  ///< w_{k+1} = ... - h u_k with u_k >= 0 as a variable
};

struct BuildOptions {
    int K = 100;
    SlackMode slack_mode = SlackMode::Inequality;
    double start_time = 0.0;                ///< plan over [start_time, T]
    std::optional<double> initial_wealth;   ///< overrides spec.w_init
    double wealth_floor_ratio = 1e-9;       ///< eps_w = ratio * initial wealth
    bool force_zero_premium = false;        ///< pins l_k = 0 under insurance

    double step(double horizon) const { return (horizon - start_time) / K; }
};

/// Contiguous block of columns.
struct Range {
    std::size_t first = 0;
    std::size_t count = 0;

    std::size_t operator[](std::size_t i) const { return first + i; }
    bool empty() const { return count == 0; }
};

/// Column map of a built program. Optional per-period auxiliaries use
/// kAbsent for periods where they are not emitted.
struct VariableLayout {
    static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

    int K = 0;
    int n = 0;
    Range w;        ///< K + 1
    Range x;        ///< (K + 1) * n, period-major
    Range c;        ///< K
    Range s;        ///< K, risk epigraph
    Range tau_c;    ///< K consumption hypographs (empty under max-min)
    std::vector<std::size_t> tau_b;  ///< K bequest-flow hypographs (mortality)
    std::size_t tau_T = kAbsent;     ///< terminal bequest hypograph
    Range l;        ///< K insurance premia
    Range u;        ///< K explicit dynamics slacks
    std::size_t m = kAbsent;         ///< max-min consumption level
    std::size_t tau_m = kAbsent;
    std::size_t num_columns = 0;

    std::size_t x_col(int k, int i) const { return x[static_cast<std::size_t>(k) * n + i]; }
};

struct Trajectory {
    std::vector<double> t;   ///< K + 1 grid times
    Vector w;                ///< K + 1
    Matrix x;                ///< n x (K + 1) dollar allocations
    Vector c;                ///< K consumption rates
    Vector risk;             ///< K epigraph values s_k
    Vector premium;          ///< K insurance premia (empty without insurance)
    Vector slack;            ///< K dynamics slack u_k with the exact risk term
    Vector row_slack;        ///< K slack of the dynamics row as emitted (epigraph s_k)
    std::optional<double> min_consumption;  ///< m under max-min
    double objective = 0.0;  ///< utility of the plan (maximized value)
    conic::SolveStatus status = conic::SolveStatus::Failed;
    conic::SolverStats stats;

    int K() const { return static_cast<int>(c.size()); }
    /// theta_k = x_k / w_k.
    Vector theta(int k) const { return x.col(k) / w(k); }
};

struct BuiltProblem {
    conic::ConicProgram program;
    VariableLayout layout;
};

/// Data in force during one period.
struct PeriodMarket {
    Vector mu;
    CovarianceRoot root;
    ConstraintSet theta_set;  ///< budget row included
};

class CeBuilder {
public:
    /// Base problem from the spec's market, utility and Theta; extension
    /// blocks in the spec are ignored (see build_program()).
    CeBuilder(const ProblemSpec& spec, const BuildOptions& options);

    /// One entry per period k = 0..K (or 0..K-1, in which case the last entry
    /// also governs x_K). Throws std::invalid_argument on a length mismatch.
    CeBuilder& apply_time_varying(const std::vector<Vector>& mu, const std::vector<Covariance>& cov,
                                  const std::vector<ConstraintSet>& theta);
    /// Regimes in force from their start times onward.
    CeBuilder& apply_time_varying(const std::vector<MarketRegime>& regimes);
    CeBuilder& apply_discount(const SampledCurve& alpha);
    CeBuilder& apply_mortality(const MortalityModel& mortality, double beta);
    CeBuilder& apply_insurance(const InsuranceModel& insurance);
    CeBuilder& apply_income(const IncomeModel& income);
    CeBuilder& apply_epstein_zin(double rho);
    CeBuilder& apply_consumption_floor(const SampledCurve& c_min);
    CeBuilder& apply_spending_limit(const SpendingLimit& limit);
    CeBuilder& apply_minimum_cash(const MinimumCash& cash);
    CeBuilder& apply_max_min_consumption();
    /// All inexact blocks present in `ex`.
    CeBuilder& apply_inexact(const Extensions& ex);

    BuiltProblem build() const;

    /// Trajectory from a solver result; throws std::runtime_error when the
    /// result has no primal solution.
    Trajectory decode(const conic::SolveResult& result, const VariableLayout& layout) const;
    /// Primal vector reproducing `traj` (auxiliaries set to their tight values).
    std::vector<double> encode(const Trajectory& traj, const VariableLayout& layout) const;

    int K() const { return options_.K; }
    int num_assets() const { return n_; }
    double step() const { return h_; }
    double time(int k) const { return t0_ + h_ * k; }
    double initial_wealth() const { return w_init_; }
    const PeriodMarket& market(int k) const { return *periods_[static_cast<std::size_t>(k)]; }
    /// Human capital v_k on the plan grid (zeros without income).
    const std::vector<double>& human_capital() const { return v_; }

private:
    double consumption_weight(int k) const;
    double bequest_flow_weight(int k) const;
    double terminal_weight() const;
    double premium_ratio(int k) const;

    ProblemSpec spec_;
    BuildOptions options_;
    int n_ = 0;
    double h_ = 0.0;
    double t0_ = 0.0;
    double w_init_ = 1.0;
    double gamma_ = 0.5;
    double rho_ = 0.5;
    std::vector<std::shared_ptr<const PeriodMarket>> periods_;  // K + 1
    std::optional<SampledCurve> discount_;
    std::optional<MortalityModel> mortality_;
    std::optional<InsuranceModel> insurance_;
    std::optional<IncomeModel> income_;
    std::vector<double> y_;  // K + 1
    std::vector<double> v_;  // K + 1
    std::optional<SampledCurve> c_min_;
    std::optional<SpendingLimit> spending_;
    std::optional<MinimumCash> cash_;
    bool max_min_ = false;
};

/// Base program only (extension blocks in the spec are ignored).
BuiltProblem build_base(const ProblemSpec& spec, const BuildOptions& options);

/// Builder with every extension block in the spec applied.
CeBuilder make_builder(const ProblemSpec& spec, const BuildOptions& options);
BuiltProblem build_program(const ProblemSpec& spec, const BuildOptions& options);

/// Build, solve and decode. The failing program is available through
/// PlanError::program() when the solver returns no solution.
Trajectory plan(const ProblemSpec& spec, const BuildOptions& options,
                const conic::SolverSettings& settings = conic::SolverSettings{});

class PlanError : public std::runtime_error {
public:
    PlanError(const std::string& what, conic::SolveStatus status, conic::ConicProgram program)
        : std::runtime_error(what), status_(status), program_(std::move(program)) {}
    conic::SolveStatus status() const { return status_; }
    const conic::ConicProgram& program() const { return program_; }

private:
    conic::SolveStatus status_;
    conic::ConicProgram program_;
};

/// Planned returns r_k = mu_k + ((gamma-1)/2) Sigma_k x_k / (w_k + v_k), n x K.
Matrix planned_returns(const CeBuilder& builder, const Trajectory& traj, double gamma);

/// Columns k,t,w,c,theta_1..theta_n,slack; c and slack are blank at k = K.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

}  // namespace merton::builder
