/**
 * @file simulator.hpp
 * @brief Monte Carlo simulation of the wealth dynamics under a policy.
 *
 * dw = (mu'theta w + y - c - l) dt + sqrt(theta' Sigma theta) w dz
 *
 * Random numbers: each path owns a std::mt19937_64 seeded with
 * path_seed(master, index) (SplitMix64 mixing). Uniforms take the top 53 bits
 * of a draw; normals use the Box-Muller transform, both halves consumed in
 * order. A path with mortality draws its death uniform first.
 */

#pragma once

#include "merton/analytic/analytic.hpp"
#include "merton/core/covariance.hpp"
#include "merton/core/types.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <vector>

namespace merton::sim {

enum class Scheme {
    EulerMaruyama,
    ExactLognormal,  ///< only for proportional policies without income
};

const char* to_string(Scheme scheme);
/// Throws std::invalid_argument for an unknown name.
Scheme parse_scheme(const std::string& name);

/// (t, w) -> (c, theta[, premium]). Implementations may keep per-path state;
/// the simulator calls reset() before each path and gives each worker thread
/// its own clone(). act() writes into `out` so its theta storage is reused.
class Policy {
public:
    virtual ~Policy() = default;
    virtual void act(double t, double w, Action& out) = 0;
    Action act(double t, double w) {
        Action a;
        act(t, w, a);
        return a;
    }
    virtual void reset() {}
    virtual std::unique_ptr<Policy> clone() const = 0;
    /// True if c, l scale with w and theta does not depend on w.
    virtual bool proportional() const { return false; }
};

class AnalyticPolicy : public Policy {
public:
    explicit AnalyticPolicy(analytic::AnalyticSolution solution) : sol_(std::move(solution)) {}
    using Policy::act;    void act(double t, double w, Action& out) override;
    std::unique_ptr<Policy> clone() const override { return std::make_unique<AnalyticPolicy>(*this); }
    bool proportional() const override { return !sol_.human_capital; }
    const analytic::AnalyticSolution& solution() const { return sol_; }

private:
    analytic::AnalyticSolution sol_;
};

/// Stateless policy from a callable (must be safe to call concurrently).
class FunctionPolicy : public Policy {
public:
    using Fn = std::function<Action(double, double)>;
    FunctionPolicy(Fn fn, bool proportional) : fn_(std::move(fn)), proportional_(proportional) {}
    using Policy::act;    void act(double t, double w, Action& out) override { out = fn_(t, w); }
    std::unique_ptr<Policy> clone() const override { return std::make_unique<FunctionPolicy>(*this); }
    bool proportional() const override { return proportional_; }

private:
    Fn fn_;
    bool proportional_;
};

/// Market data in force at time t (time-varying regimes resolved).
class MarketSchedule {
public:
    explicit MarketSchedule(const ProblemSpec& spec);
    const Vector& mu(double t) const { return regime(t).mu; }
    const CovarianceRoot& root(double t) const { return regime(t).root; }

    struct Regime {
        double start;
        Vector mu;
        CovarianceRoot root;
    };
    const Regime& regime(double t) const;

private:
    std::vector<Regime> regimes_;
};

struct SimOptions {
    double h_sim = 1.0 / 250.0;
    Scheme scheme = Scheme::EulerMaruyama;
    bool antithetic = false;        ///< paths 2i and 2i+1 share draws with z -> -z
    unsigned threads = 0;           ///< 0 = hardware concurrency
    double ruin_utility = -1e6;     ///< utility of a ruined path when the exponent is negative
    std::size_t record_paths = 0;   ///< keep the first paths in full for export
};

struct SimPath {
    std::uint64_t seed = 0;
    std::vector<double> t;   ///< step boundaries; the last may be a death time
    std::vector<double> w;   ///< wealth at t
    std::vector<double> c;   ///< consumption per step
    std::vector<double> premium;  ///< insurance premium per step
    Matrix theta;            ///< n x steps
    std::optional<double> death_time;
    double estate = 0.0;     ///< bequeathed wealth (w_T, or w + lambda l at death)
    bool ruined = false;
    double utility = 0.0;
};

/// SplitMix64 finalizer of master + golden-ratio multiple of the index.
std::uint64_t path_seed(std::uint64_t master, std::uint64_t index);

/// Documented generator wrapper; see the file comment.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform();  ///< [0, 1)
    double normal();

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

/// Death time by inverse CDF of 1 - s_t; nullopt (survival past T) when u < s_T.
std::optional<double> sample_death(const MortalityModel& mortality, double u);
std::optional<double> sample_death(const MortalityModel& mortality, std::uint64_t seed);

/// Riemann sum of alpha_t c^rho / rho over the steps plus (beta/rho) estate^rho,
/// rho the utility exponent. Ruined paths keep their accumulated consumption
/// utility when rho > 0 and get `ruin_utility` when rho < 0.
double realized_utility(const SimPath& path, const UtilityParams& utility, double ruin_utility = -1e6);

/// One path of the spec's dynamics under `policy`. `negate` flips every normal
/// draw (antithetic partner). Throws std::invalid_argument when the scheme is
/// ExactLognormal and the policy is not proportional or the spec has income.
SimPath simulate_path(Policy& policy, const ProblemSpec& spec, const SimOptions& options, std::uint64_t seed,
                      bool negate = false);

struct MonteCarloResult {
    std::size_t num_paths = 0;
    double mean = 0.0;
    std::optional<double> std_error;  ///< absent for a single path
    double ruin_rate = 0.0;
    double death_rate = 0.0;
    double mean_log_terminal = 0.0;   ///< mean log estate over surviving, unruined paths
    double mean_terminal = 0.0;       ///< mean estate
    std::vector<double> utilities;
    std::vector<SimPath> paths;       ///< the first options.record_paths paths
};

/// N paths with seeds path_seed(seed, i), run in parallel; the reduction is in
/// path order, so results do not depend on the thread count. Throws
/// std::invalid_argument for N == 0.
MonteCarloResult monte_carlo(const Policy& policy, const ProblemSpec& spec, std::size_t N,
                             const SimOptions& options, std::uint64_t seed);

/// CSV with columns path_id,t,w,c,theta_1..theta_n (one row per step start,
/// plus a final row with empty controls).
void write_paths_csv(std::ostream& out, const std::vector<SimPath>& paths);

}  // namespace merton::sim
