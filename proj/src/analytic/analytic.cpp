#include "merton/analytic/analytic.hpp"

#include "merton/builder/cones.hpp"
#include "merton/builder/human_capital.hpp"
#include "merton/core/covariance.hpp"

#include <cmath>
#include <sstream>

namespace merton::analytic {

double markowitz_objective(const MarketModel& market, const Vector& theta, double gamma) {
    return market.mu.dot(theta) + 0.5 * (gamma - 1.0) * theta.dot(market.dense_covariance() * theta);
}

conic::SolverSettings markowitz_settings() {
    conic::SolverSettings s;
    s.tol_feas = 1e-11;
    s.tol_gap = 1e-11;
    return s;
}

MarkowitzResult solve_markowitz(const MarketModel& market, const ConstraintSet& theta_set, double gamma,
                                const conic::SolverSettings& settings) {
    if (!(gamma < 1.0)) throw std::invalid_argument("solve_markowitz: gamma must be < 1");
    const auto n = static_cast<std::size_t>(market.num_assets());
    const CovarianceRoot L = expand_covariance(market);

    // minimize -mu'theta + ((1-gamma)/2) ||y||^2  with  y = L'theta, as a QP
    // so the solver's stationarity tolerance controls the error in theta.
    conic::ConicProgram p;
    const std::size_t x = p.add_variables(n);
    const auto width = static_cast<std::size_t>(L.width());
    const std::size_t y = p.add_variables(width);
    for (std::size_t i = 0; i < n; ++i) p.set_objective(x + i, -market.mu(static_cast<Eigen::Index>(i)));
    for (std::size_t j = 0; j < width; ++j) p.add_quadratic(y + j, y + j, 1.0 - gamma);
    for (std::size_t j = 0; j < width; ++j) {
        conic::AffineExpr row = conic::AffineExpr::var(y + j, -1.0);
        const auto jj = static_cast<Eigen::Index>(j);
        if (jj < L.dense.cols()) {
            for (Eigen::Index i = 0; i < L.dense.rows(); ++i) row.add(x + static_cast<std::size_t>(i), L.dense(i, jj));
        } else {
            const Eigen::Index i = jj - L.dense.cols();
            row.add(x + static_cast<std::size_t>(i), L.diagonal(i));
        }
        p.add_zero(row);
    }
    builder::perspective_of_theta(p, theta_set.with_budget(static_cast<int>(n)), x, conic::AffineExpr(1.0));

    const conic::SolveResult r = conic::solve(p, settings);
    if (r.status != conic::SolveStatus::Optimal && r.status != conic::SolveStatus::Inaccurate) {
        throw std::runtime_error(std::string("solve_markowitz: solver status ") + conic::to_string(r.status));
    }
    MarkowitzResult out;
    out.theta = Eigen::Map<const Vector>(r.primal.data() + x, static_cast<Eigen::Index>(n));
    out.r_ce = market.mu.dot(out.theta) - 0.5 * (1.0 - gamma) * L.quad(out.theta);
    out.stats = r.stats;
    return out;
}

double integration_constant(double r_ce, double gamma, double beta) {
    const double k = gamma * r_ce / (1.0 - gamma);
    return 1.0 + k * std::pow(beta, 1.0 / (1.0 - gamma));
}

namespace {

// b_t with a_t = b_t^(1-gamma); the consumption ratio a_t^(1/(gamma-1)) is 1/b_t.
double coefficient_base(double t, double r_ce, double gamma, double beta, double T) {
    const double tau = T - t;
    const double beta_p = beta == 1.0 ? 1.0 : std::pow(beta, 1.0 / (1.0 - gamma));
    double b;
    if (std::abs(gamma * r_ce * T) < kLimitThreshold) {
        b = beta_p + tau;
    } else {
        // b = beta' e^{k tau} + (e^{k tau} - 1)/k, written with expm1 so it
        // stays accurate for small k tau.
        const double k = gamma * r_ce / (1.0 - gamma);
        const double em1 = std::expm1(k * tau);
        b = beta_p * (1.0 + em1) + em1 / k;
    }
    if (!(b > 0.0) || !std::isfinite(b)) {
        std::ostringstream msg;
        msg << "a_coefficient: base " << b << " outside the real domain (t=" << t << ", r_ce=" << r_ce
            << ", gamma=" << gamma << ", beta=" << beta << ", T=" << T << ")";
        throw DomainError(msg.str());
    }
    return b;
}

}  // namespace

double a_coefficient(double t, double r_ce, double gamma, double beta, double T) {
    if (t == T) return beta;
    return std::pow(coefficient_base(t, r_ce, gamma, beta, T), 1.0 - gamma);
}

double AnalyticSolution::a(double t) const {
    if (curve) return (*curve)(t);
    return a_coefficient(t, r_ce, gamma, beta, T);
}

double AnalyticSolution::consumption_ratio(double t) const {
    if (curve) return curve->consumption_ratio(t);
    if (t == T) return std::pow(beta, 1.0 / (gamma - 1.0));
    return 1.0 / coefficient_base(t, r_ce, gamma, beta, T);
}

double AnalyticSolution::value(double t, double w) const {
    const double total = w + (human_capital ? (*human_capital)(t) : 0.0);
    return a(t) * std::pow(total, gamma) / gamma;
}

Action AnalyticSolution::policy(double t, double w) const {
    Action act;
    if (!human_capital) {
        act.consumption = consumption_ratio(t) * w;
        act.theta = theta_ce;
        return act;
    }
    // Invest total wealth w + v in theta_ce; the risk-free asset absorbs the
    // difference so that 1'x = w.
    const double total = w + (*human_capital)(t);
    act.consumption = consumption_ratio(t) * total;
    Vector x = total * theta_ce;
    const int rf = *risk_free_index;
    x(rf) = w - (x.sum() - x(rf));
    act.theta = x / w;
    return act;
}

AnalyticSolution solve_analytic(const ProblemSpec& spec, const conic::SolverSettings& settings) {
    const auto& ex = spec.extensions;
    if (ex.insurance || ex.consumption_floor || ex.spending_limit || ex.minimum_cash || ex.max_min_consumption ||
        !ex.time_varying.empty() || (spec.utility.rho && *spec.utility.rho != spec.utility.gamma)) {
        throw std::invalid_argument("solve_analytic: no closed form for the requested extensions");
    }
    if (ex.income && ex.mortality) {
        throw std::invalid_argument("solve_analytic: no closed form for income combined with mortality");
    }
    AnalyticSolution sol;
    sol.gamma = spec.utility.gamma;
    sol.beta = spec.utility.beta;
    sol.T = spec.horizon;
    const auto mk = solve_markowitz(spec.market, spec.theta_set, sol.gamma, settings);
    sol.theta_ce = mk.theta;
    sol.r_ce = mk.r_ce;
    sol.C = integration_constant(sol.r_ce, sol.gamma, sol.beta);
    sol.risk_free_index = spec.market.risk_free_index;

    if (ex.mortality || spec.utility.discount) {
        CoefficientOde ode;
        ode.gamma = sol.gamma;
        ode.r_ce = sol.r_ce;
        ode.horizon = sol.T;
        const auto discount = spec.utility.discount;
        const auto mortality = ex.mortality;
        ode.consumption_weight = [discount, mortality](double t) {
            return (discount ? (*discount)(t) : 1.0) * (mortality ? mortality->survival_at(t) : 1.0);
        };
        if (mortality) {
            const double beta = sol.beta;
            ode.bequest_rate = [mortality, beta](double t) { return beta * mortality->density_at(t); };
        }
        ode.terminal = sol.beta * (mortality ? mortality->terminal_survival() : 1.0);
        sol.curve = CoefficientCurve::integrate(ode, std::min(1e-3, sol.T / 1000.0));
    }

    if (ex.income) {
        if (!spec.market.risk_free_index) throw std::invalid_argument("solve_analytic: income requires a risk-free asset");
        const double mu_rf = spec.market.mu(*spec.market.risk_free_index);
        const auto steps = static_cast<std::size_t>(std::max(1000.0, std::ceil(spec.horizon / 1e-3)));
        SampledCurve v;
        v.t = uniform_grid(0.0, spec.horizon, steps);
        v.v = builder::human_capital(*ex.income, mu_rf, v.t);
        sol.human_capital = std::move(v);
    }
    return sol;
}

double value_function(const AnalyticSolution& sol, double t, double w) {
    if (!(w > 0.0)) throw std::invalid_argument("value_function: wealth must be positive");
    return sol.value(t, w);
}

Action analytic_policy(const AnalyticSolution& sol, double t, double w) {
    if (!(w > 0.0)) throw std::invalid_argument("analytic_policy: wealth must be positive");
    return sol.policy(t, w);
}

double hjb_ode_residual(const std::function<double(double)>& a, double r_ce, double gamma,
                        std::span<const double> grid) {
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double ai = a(grid[i]);
        const double adot = (a(grid[i + 1]) - a(grid[i - 1])) / (grid[i + 1] - grid[i - 1]);
        const double r = adot + (1.0 - gamma) * std::pow(ai, gamma / (gamma - 1.0)) + gamma * ai * r_ce;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double hjb_ode_residual(const AnalyticSolution& sol, std::span<const double> grid) {
    return hjb_ode_residual([&sol](double t) { return sol.a(t); }, sol.r_ce, sol.gamma, grid);
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t n) {
    std::vector<double> g(n + 1);
    const double h = (t1 - t0) / static_cast<double>(n);
    for (std::size_t i = 0; i <= n; ++i) g[i] = t0 + h * static_cast<double>(i);
    g[n] = t1;
    return g;
}

}  // namespace merton::analytic
