/**
 * @file types.hpp
 * @brief Domain data model for the consumption-investment problem.
 *
 * All rates are per-year decimals and all times are in years. Curves
 * (mortality, income, insurance, floors, discount) are sampled on their own
 * grids and linearly interpolated in between.
 */

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <variant>
#include <vector>

namespace merton {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Piecewise-linear curve through (t_i, v_i). Outside the grid the end values
/// are held. Repeated times encode a jump; the curve is right-continuous there.
struct SampledCurve {
    std::vector<double> t;
    std::vector<double> v;

    static SampledCurve constant(double value, double t0, double t1) { return {{t0, t1}, {value, value}}; }

    double operator()(double x) const;
    bool empty() const { return t.empty(); }
};

struct DenseCovariance {
    Matrix sigma;
};

/// Sigma = F * factor_cov * F' + diag(idio_var).
struct FactorCovariance {
    Matrix loadings;    ///< n x m
    Matrix factor_cov;  ///< m x m
    Vector idio_var;    ///< n
};

using Covariance = std::variant<DenseCovariance, FactorCovariance>;

struct MarketModel {
    Vector mu;
    Covariance cov;
    std::optional<int> risk_free_index;

    int num_assets() const { return static_cast<int>(mu.size()); }
    /// Expanded n x n covariance. Materializes the product for factor models;
    /// meant for diagnostics and small problems.
    Matrix dense_covariance() const;
    bool is_factor() const { return std::holds_alternative<FactorCovariance>(cov); }
};

struct UtilityParams {
    double gamma = 0.5;
    double beta = 1.0;
    std::optional<double> rho;            ///< Epstein-Zin utility exponent; defaults to gamma
    std::optional<SampledCurve> discount;  ///< alpha_t > 0 weighting consumption utility

    double utility_exponent() const { return rho.value_or(gamma); }
};

struct LinearEquality {
    Vector a;
    double b = 0.0;
};

struct LinearInequality {
    Vector g;
    double h = 0.0;
};

/// ||P theta||_2 <= q' theta + r
struct SocConstraint {
    Matrix P;
    Vector q;
    double r = 0.0;
};

/// Convex set of admissible fractional allocations theta.
struct ConstraintSet {
    std::vector<LinearEquality> eq;
    std::vector<LinearInequality> ineq;
    std::vector<SocConstraint> socs;

    static ConstraintSet budget(int n);
    /// Copy with the budget row 1'theta = 1 present exactly once.
    ConstraintSet with_budget(int n) const;
    bool has_budget(int n) const;
    /// True if the set is exactly {theta : 1'theta = 1}.
    bool is_simple_budget(int n) const;
    /// Largest violation of any constraint at theta.
    double max_violation(const Vector& theta) const;
};

struct MortalityModel {
    std::vector<double> grid;
    std::vector<double> density;   ///< p_t >= 0
    std::vector<double> survival;  ///< s_t = Prob(t_f > t)

    /// Builds s_t = s_T + int_t^T p by the trapezoidal rule on the grid.
    static MortalityModel from_density(std::vector<double> grid, std::vector<double> density,
                                       double terminal_survival = 0.0);

    double density_at(double t) const;
    double survival_at(double t) const;
    double terminal_survival() const { return survival.back(); }
};

struct IncomeModel {
    SampledCurve rate;  ///< y_t >= 0
};

struct InsuranceModel {
    SampledCurve payout_ratio;  ///< lambda_t >= 0
};

/// c_t <= eta * y_t + d' x_t
struct SpendingLimit {
    double eta = 0.7;
    Vector dividend_yield;  ///< empty means zero
};

/// (x_t)_i >= floor_t  and/or  (x_t)_i >= multiple * c_t
struct MinimumCash {
    int asset = 0;
    std::optional<SampledCurve> floor;
    double consumption_multiple = 0.0;
};

/// Market parameters in force from `start` until the next regime begins.
struct MarketRegime {
    double start = 0.0;
    Vector mu;
    Covariance cov;
    std::optional<ConstraintSet> theta_set;
};

struct Extensions {
    std::optional<MortalityModel> mortality;
    std::optional<IncomeModel> income;
    std::optional<InsuranceModel> insurance;
    std::optional<SampledCurve> consumption_floor;
    std::optional<SpendingLimit> spending_limit;
    std::optional<MinimumCash> minimum_cash;
    bool max_min_consumption = false;
    std::vector<MarketRegime> time_varying;

    bool any() const;
};

/// Control applied at one instant: consumption rate, fractional allocation
/// theta = x / w and, under insurance, the premium rate l.
struct Action {
    double consumption = 0.0;
    Vector theta;
    double premium = 0.0;
};

struct ProblemSpec {
    MarketModel market;
    UtilityParams utility;
    ConstraintSet theta_set;
    double horizon = 1.0;
    double w_init = 1.0;
    Extensions extensions;

    int num_assets() const { return market.num_assets(); }
    /// True when scaling w_init scales the optimal plan (no absolute floors or income).
    bool is_wealth_homogeneous() const;
};

}  // namespace merton
