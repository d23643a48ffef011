/**
 * @file analytic.hpp
 * @brief Closed-form solution of the consumption-investment problem.
 *
 * The value function is V_t(w) = a_t w^gamma / gamma with optimal policy
 * c = a_t^(1/(gamma-1)) w and theta = theta_ce, where theta_ce and r_ce solve
 * the risk-adjusted Markowitz problem
 *
 *     maximize  mu'theta + ((gamma-1)/2) theta' Sigma theta   s.t. theta in Theta.
 *
 * With b_t = a_t^(1/(1-gamma)) the coefficient equation
 * -da/dt = (1-gamma) a^(gamma/(gamma-1)) + gamma r_ce a becomes the linear
 * equation -db/dt = 1 + k b with k = gamma r_ce / (1-gamma), so
 *
 *     b_t = (beta' + 1/k) exp(k (T-t)) - 1/k,   beta' = beta^(1/(1-gamma)),
 *
 * and b_t = beta' + (T-t) when k = 0.
 */

#pragma once

#include "merton/analytic/coefficient_ode.hpp"
#include "merton/conic/solver.hpp"
#include "merton/core/types.hpp"

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>

namespace merton::analytic {

/// Raised when a closed-form quantity leaves its real domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct MarkowitzResult {
    Vector theta;
    double r_ce = 0.0;  ///< objective evaluated at theta
    conic::SolverStats stats;
};

/// mu'theta + ((gamma-1)/2) theta' Sigma theta.
double markowitz_objective(const MarketModel& market, const Vector& theta, double gamma);

/// Tolerances used by solve_markowitz by default (tighter than the planner's).
conic::SolverSettings markowitz_settings();

/// Solves the Markowitz subproblem as a small conic program. Throws
/// std::runtime_error if the solver reports anything but an optimum.
MarkowitzResult solve_markowitz(const MarketModel& market, const ConstraintSet& theta_set, double gamma,
                                const conic::SolverSettings& settings = markowitz_settings());

/// |gamma r_ce T| below this switches a_coefficient to the k = 0 limit.
inline constexpr double kLimitThreshold = 1e-10;

/// a_t for the base problem; returns beta exactly at t = T.
double a_coefficient(double t, double r_ce, double gamma, double beta, double T);

/// Integration constant (1 + k beta') of the coefficient solution.
double integration_constant(double r_ce, double gamma, double beta);

struct AnalyticSolution {
    Vector theta_ce;
    double r_ce = 0.0;
    double C = 1.0;  ///< integration_constant(r_ce, gamma, beta)
    double gamma = 0.5;
    double beta = 1.0;
    double T = 1.0;

    /// Set when the spec carries mortality or a utility discount; a_t then
    /// comes from integrating the weighted coefficient equation.
    std::optional<CoefficientCurve> curve;
    /// Set under income: policy acts on total wealth w + v_t.
    std::optional<SampledCurve> human_capital;
    std::optional<int> risk_free_index;

    double a(double t) const;
    /// Consumption per unit of (total) wealth.
    double consumption_ratio(double t) const;
    double value(double t, double w) const;
    Action policy(double t, double w) const;
};

/// Analytic solution for the base problem and the exact extensions that keep
/// the value function of the form a_t (w + v_t)^gamma / gamma: mortality,
/// utility discount and income. Other extensions raise std::invalid_argument.
AnalyticSolution solve_analytic(const ProblemSpec& spec,
                                const conic::SolverSettings& settings = markowitz_settings());

/// V_t(w) = a_t w^gamma / gamma. Throws std::invalid_argument for w <= 0.
double value_function(const AnalyticSolution& sol, double t, double w);

/// (c, theta) with c = a_t^(1/(gamma-1)) w. Throws std::invalid_argument for w <= 0.
Action analytic_policy(const AnalyticSolution& sol, double t, double w);

/// Max over the interior points of a uniform grid of
/// |central-difference a' + (1-gamma) a^(gamma/(gamma-1)) + gamma a r_ce|.
double hjb_ode_residual(const std::function<double(double)>& a, double r_ce, double gamma,
                        std::span<const double> grid);
double hjb_ode_residual(const AnalyticSolution& sol, std::span<const double> grid);

/// n + 1 evenly spaced points on [t0, t1].
std::vector<double> uniform_grid(double t0, double t1, std::size_t n);

}  // namespace merton::analytic
