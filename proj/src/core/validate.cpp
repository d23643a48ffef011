#include "merton/core/validate.hpp"

#include "merton/builder/cones.hpp"
#include "merton/conic/solver.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace merton {

namespace {

class Collector {
public:
    void add(std::string code, std::string message) { out_.push_back({std::move(code), std::move(message)}); }
    std::vector<Violation> take() { return std::move(out_); }

private:
    std::vector<Violation> out_;
};

bool all_finite(const Vector& v) { return v.allFinite(); }

bool symmetric(const Matrix& m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * scale;
}

double min_eigenvalue(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

void check_curve(Collector& c, const std::string& name, const SampledCurve& curve) {
    if (curve.t.empty() || curve.t.size() != curve.v.size()) {
        c.add(name + "_shape", name + " curve needs matching, non-empty time and value arrays");
        return;
    }
    for (std::size_t i = 0; i < curve.t.size(); ++i) {
        if (!std::isfinite(curve.t[i]) || !std::isfinite(curve.v[i])) {
            c.add(name + "_nonfinite", name + " curve has non-finite entries");
            return;
        }
        if (i > 0 && curve.t[i] < curve.t[i - 1]) {
            c.add(name + "_unsorted", name + " curve times must be nondecreasing");
            return;
        }
    }
}

void check_covariance(Collector& c, const std::string& prefix, const Covariance& cov, int n,
                      std::optional<int> rf) {
    if (const auto* d = std::get_if<DenseCovariance>(&cov)) {
        const Matrix& s = d->sigma;
        if (s.rows() != n || s.cols() != n) {
            c.add(prefix + "cov_shape", "covariance must be n x n");
            return;
        }
        if (!s.allFinite()) {
            c.add(prefix + "cov_nonfinite", "covariance has non-finite entries");
            return;
        }
        if (!symmetric(s)) {
            c.add(prefix + "cov_asymmetric", "covariance must be symmetric");
            return;
        }
        const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
        if (min_eigenvalue(s) < -1e-12 * scale) {
            c.add(prefix + "cov_not_psd", "covariance not PSD");
            return;
        }
        if (rf) {
            if (s.row(*rf).cwiseAbs().maxCoeff() != 0.0) {
                c.add(prefix + "risk_free_has_variance", "risk-free asset must have zero covariance row/column");
            }
            if (n > 1) {
                Matrix sub(n - 1, n - 1);
                for (int i = 0, ii = 0; i < n; ++i) {
                    if (i == *rf) continue;
                    for (int j = 0, jj = 0; j < n; ++j) {
                        if (j == *rf) continue;
                        sub(ii, jj++) = s(i, j);
                    }
                    ++ii;
                }
                if (min_eigenvalue(sub) <= 1e-14 * scale) {
                    c.add(prefix + "cov_singular", "covariance of the risky assets must be positive definite");
                }
            }
        } else if (min_eigenvalue(s) <= 1e-14 * scale) {
            c.add(prefix + "cov_singular", "covariance must be positive definite");
        }
        return;
    }
    const auto& f = std::get<FactorCovariance>(cov);
    const auto m = f.factor_cov.rows();
    if (f.loadings.rows() != n || f.loadings.cols() != m || f.factor_cov.cols() != m || f.idio_var.size() != n) {
        c.add(prefix + "cov_shape", "factor model dimensions are inconsistent");
        return;
    }
    if (!f.loadings.allFinite() || !f.factor_cov.allFinite() || !f.idio_var.allFinite()) {
        c.add(prefix + "cov_nonfinite", "factor model has non-finite entries");
        return;
    }
    if (m > 0) {
        if (!symmetric(f.factor_cov)) c.add(prefix + "factor_cov_asymmetric", "factor covariance must be symmetric");
        const double scale = std::max(1.0, f.factor_cov.cwiseAbs().maxCoeff());
        if (min_eigenvalue(f.factor_cov) <= 1e-14 * scale) {
            c.add(prefix + "cov_not_psd", "factor covariance must be positive definite");
        }
    }
    for (int i = 0; i < n; ++i) {
        if (f.idio_var(i) < 0.0) {
            c.add(prefix + "idio_negative", "idiosyncratic variances must be nonnegative");
            return;
        }
        if (rf && i == *rf) {
            if (f.idio_var(i) != 0.0 || (m > 0 && f.loadings.row(i).cwiseAbs().maxCoeff() != 0.0)) {
                c.add(prefix + "risk_free_has_variance", "risk-free asset must have zero loadings and variance");
            }
        } else if (f.idio_var(i) == 0.0) {
            c.add(prefix + "idio_zero", "every risky asset needs positive idiosyncratic variance");
            return;
        }
    }
}

void check_theta(Collector& c, const std::string& prefix, const ConstraintSet& theta, int n) {
    bool shapes_ok = true;
    for (const auto& e : theta.eq) shapes_ok = shapes_ok && e.a.size() == n && std::isfinite(e.b) && all_finite(e.a);
    for (const auto& g : theta.ineq) shapes_ok = shapes_ok && g.g.size() == n && std::isfinite(g.h) && all_finite(g.g);
    for (const auto& s : theta.socs) {
        shapes_ok = shapes_ok && s.P.cols() == n && s.P.rows() >= 1 && s.q.size() == n && std::isfinite(s.r) &&
                    s.P.allFinite() && all_finite(s.q);
    }
    if (!shapes_ok) {
        c.add(prefix + "theta_shape", "constraint set dimensions do not match the number of assets");
        return;
    }
    const ConstraintSet full = theta.with_budget(n);
    if (full.is_simple_budget(n)) return;

    // Nonemptiness via a feasibility solve.
    conic::ConicProgram p;
    const auto x = p.add_variables(static_cast<std::size_t>(n));
    builder::perspective_of_theta(p, full, x, conic::AffineExpr(1.0));
    const auto res = conic::solve(p);
    if (res.status == conic::SolveStatus::Infeasible) {
        c.add(prefix + "theta_infeasible", "constraint set is empty");
    } else if (!res.has_solution()) {
        c.add(prefix + "theta_unverified", std::string("feasibility check failed: ") + conic::to_string(res.status));
    }
}

void check_mortality(Collector& c, const MortalityModel& m, double horizon) {
    const auto& g = m.grid;
    if (g.empty() || g.size() != m.density.size() || g.size() != m.survival.size()) {
        c.add("mortality_shape", "mortality grid, density and survival must have equal non-zero length");
        return;
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!std::isfinite(g[i]) || !std::isfinite(m.density[i]) || !std::isfinite(m.survival[i])) {
            c.add("mortality_nonfinite", "mortality model has non-finite entries");
            return;
        }
        if (i > 0 && g[i] < g[i - 1]) {
            c.add("mortality_unsorted", "mortality grid must be nondecreasing");
            return;
        }
    }
    if (std::abs(g.front()) > 1e-12 || std::abs(g.back() - horizon) > 1e-9 * std::max(1.0, horizon)) {
        c.add("mortality_grid_range", "mortality grid must span [0, T]");
    }
    if (std::abs(m.survival.front() - 1.0) > 1e-12) c.add("survival_start", "survival must start at 1");
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (m.density[i] < 0.0) {
            c.add("density_negative", "mortality density must be nonnegative");
            break;
        }
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (m.survival[i] < -1e-12 || m.survival[i] > 1.0 + 1e-12) {
            c.add("survival_range", "survival must lie in [0, 1]");
            break;
        }
        if (i > 0 && m.survival[i] > m.survival[i - 1] + 1e-12) {
            c.add("survival_increasing", "survival must be nonincreasing");
            break;
        }
    }
    // s_t = s_T + int_t^T p dtau under the trapezoidal rule.
    double tail = 0.0;
    double worst = std::abs(m.survival.back() - m.survival.back());
    for (std::size_t i = g.size() - 1; i-- > 0;) {
        tail += 0.5 * (g[i + 1] - g[i]) * (m.density[i] + m.density[i + 1]);
        worst = std::max(worst, std::abs(m.survival[i] - (m.survival.back() + tail)));
    }
    if (worst > kMortalityConsistencyTol) {
        std::ostringstream msg;
        msg << "survival inconsistent with density (max deviation " << worst << ")";
        c.add("mortality_inconsistent", msg.str());
    }
}

std::vector<Violation> validate_impl(const ProblemSpec& spec) {
    Collector c;
    const int n = spec.market.num_assets();

    // market
    if (n == 0) c.add("mu_empty", "market needs at least one asset");
    if (!all_finite(spec.market.mu)) c.add("mu_nonfinite", "expected returns must be finite");
    const auto rf = spec.market.risk_free_index;
    if (rf && (*rf < 0 || *rf >= n)) {
        c.add("risk_free_index", "risk-free index out of range");
    } else if (n > 0) {
        check_covariance(c, "", spec.market.cov, n, rf);
    }

    // utility
    const auto& u = spec.utility;
    if (!std::isfinite(u.gamma)) {
        c.add("gamma_nonfinite", "gamma must be finite");
    } else {
        if (u.gamma == 0.0) c.add("gamma_zero", "gamma must be nonzero");
        if (u.gamma >= 1.0) c.add("gamma_too_large", "gamma must be less than 1");
    }
    if (u.rho) {
        if (!std::isfinite(*u.rho)) c.add("rho_nonfinite", "rho must be finite");
        if (*u.rho == 0.0) c.add("rho_zero", "rho must be nonzero");
        if (*u.rho >= 1.0) c.add("rho_too_large", "rho must be less than 1");
    }
    if (!(u.beta > 0.0) || !std::isfinite(u.beta)) c.add("beta_nonpositive", "beta must be positive");
    if (u.discount) {
        check_curve(c, "discount", *u.discount);
        for (double v : u.discount->v) {
            if (!(v > 0.0)) {
                c.add("discount_nonpositive", "discount factors must be positive");
                break;
            }
        }
    }

    if (!(spec.horizon > 0.0) || !std::isfinite(spec.horizon)) c.add("horizon_nonpositive", "horizon T must be positive");
    if (!(spec.w_init > 0.0) || !std::isfinite(spec.w_init)) c.add("w_init_nonpositive", "initial wealth must be positive");

    if (n > 0) check_theta(c, "", spec.theta_set, n);

    // extensions
    const auto& ex = spec.extensions;
    if (ex.mortality) check_mortality(c, *ex.mortality, spec.horizon);
    if (ex.income) {
        check_curve(c, "income", ex.income->rate);
        for (double v : ex.income->rate.v) {
            if (v < 0.0) {
                c.add("income_negative", "income rate must be nonnegative");
                break;
            }
        }
        if (!rf) c.add("income_requires_risk_free", "income extension requires a risk-free asset");
        if (n > 0 && !spec.theta_set.with_budget(n).is_simple_budget(n)) {
            c.add("income_requires_budget_set", "income extension requires the simple budget constraint set");
        }
    }
    if (ex.insurance) {
        check_curve(c, "insurance", ex.insurance->payout_ratio);
        for (double v : ex.insurance->payout_ratio.v) {
            if (v < 0.0) {
                c.add("payout_negative", "insurance payout ratio must be nonnegative");
                break;
            }
        }
        if (!ex.mortality) c.add("insurance_requires_mortality", "insurance extension requires a mortality model");
    }
    if (ex.consumption_floor) check_curve(c, "consumption_floor", *ex.consumption_floor);
    if (ex.spending_limit) {
        if (!(ex.spending_limit->eta > 0.0)) c.add("eta_nonpositive", "spending limit eta must be positive");
        const auto& d = ex.spending_limit->dividend_yield;
        if (d.size() != 0 && d.size() != n) c.add("dividend_shape", "dividend yield vector must have n entries");
    }
    if (ex.minimum_cash) {
        const auto& mc = *ex.minimum_cash;
        if (mc.asset < 0 || mc.asset >= n) c.add("cash_index", "minimum-cash asset index out of range");
        if (mc.consumption_multiple < 0.0) c.add("cash_multiple_negative", "emergency-fund multiple must be nonnegative");
        if (mc.floor) check_curve(c, "cash_floor", *mc.floor);
    }
    for (std::size_t r = 0; r < ex.time_varying.size(); ++r) {
        const auto& reg = ex.time_varying[r];
        const std::string prefix = "regime" + std::to_string(r) + "_";
        if (r > 0 && reg.start <= ex.time_varying[r - 1].start) {
            c.add(prefix + "unsorted", "market regimes must have increasing start times");
        }
        if (reg.mu.size() != n || !all_finite(reg.mu)) {
            c.add(prefix + "mu_shape", "regime expected returns must have n finite entries");
            continue;
        }
        check_covariance(c, prefix, reg.cov, n, rf);
        if (reg.theta_set) check_theta(c, prefix, *reg.theta_set, n);
    }
    return c.take();
}

std::string summarize(const std::vector<Violation>& v) {
    std::ostringstream os;
    os << "invalid problem spec:";
    for (const auto& x : v) os << " [" << x.code << "] " << x.message << ";";
    return os.str();
}

}  // namespace

std::vector<Violation> validate(const ProblemSpec& spec) {
    try {
        return validate_impl(spec);
    } catch (const std::exception& e) {
        return {{"internal", std::string("validation aborted: ") + e.what()}};
    }
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

void require_valid(const ProblemSpec& spec) {
    auto v = validate(spec);
    if (!v.empty()) throw ValidationError(std::move(v));
}

}  // namespace merton
