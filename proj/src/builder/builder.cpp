#include "merton/builder/builder.hpp"

#include "merton/builder/human_capital.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace merton::builder {

namespace {

std::shared_ptr<const PeriodMarket> make_period(const Vector& mu, const Covariance& cov, std::optional<int> rf,
                                                const ConstraintSet& theta) {
    auto p = std::make_shared<PeriodMarket>();
    p->mu = mu;
    p->root = expand_covariance(cov, rf);
    p->theta_set = theta.with_budget(static_cast<int>(mu.size()));
    return p;
}

}  // namespace

CeBuilder::CeBuilder(const ProblemSpec& spec, const BuildOptions& options)
    : spec_(spec), options_(options) {
    if (options.K < 1) throw std::invalid_argument("CeBuilder: K must be at least 1");
    n_ = spec.num_assets();
    t0_ = options.start_time;
    h_ = options.step(spec.horizon);
    if (!(h_ > 0.0)) throw std::invalid_argument("CeBuilder: start time must precede the horizon");
    w_init_ = options.initial_wealth.value_or(spec.w_init);
    gamma_ = spec.utility.gamma;
    rho_ = gamma_;
    const auto base = make_period(spec.market.mu, spec.market.cov, spec.market.risk_free_index, spec.theta_set);
    periods_.assign(static_cast<std::size_t>(options.K) + 1, base);
    y_.assign(periods_.size(), 0.0);
    v_.assign(periods_.size(), 0.0);
}

CeBuilder& CeBuilder::apply_time_varying(const std::vector<Vector>& mu, const std::vector<Covariance>& cov,
                                         const std::vector<ConstraintSet>& theta) {
    const std::size_t K = static_cast<std::size_t>(options_.K);
    if (mu.size() != cov.size() || mu.size() != theta.size() || (mu.size() != K && mu.size() != K + 1)) {
        throw std::invalid_argument("apply_time_varying: need K or K+1 entries of mu, cov and theta");
    }
    for (std::size_t k = 0; k <= K; ++k) {
        const std::size_t j = std::min(k, mu.size() - 1);
        if (mu[j].size() != n_) throw std::invalid_argument("apply_time_varying: mu has the wrong length");
        periods_[k] = make_period(mu[j], cov[j], spec_.market.risk_free_index, theta[j]);
    }
    return *this;
}

CeBuilder& CeBuilder::apply_time_varying(const std::vector<MarketRegime>& regimes) {
    std::vector<std::shared_ptr<const PeriodMarket>> built;
    for (const auto& r : regimes) {
        if (r.mu.size() != n_) throw std::invalid_argument("apply_time_varying: regime mu has the wrong length");
        built.push_back(make_period(r.mu, r.cov, spec_.market.risk_free_index, r.theta_set.value_or(spec_.theta_set)));
    }
    for (std::size_t k = 0; k < periods_.size(); ++k) {
        const double t = time(static_cast<int>(k));
        for (std::size_t r = 0; r < regimes.size(); ++r) {
            if (regimes[r].start <= t + 1e-12 * std::max(1.0, std::abs(t))) periods_[k] = built[r];
        }
    }
    return *this;
}

CeBuilder& CeBuilder::apply_discount(const SampledCurve& alpha) {
    discount_ = alpha;
    return *this;
}

CeBuilder& CeBuilder::apply_mortality(const MortalityModel& mortality, double beta) {
    if (mortality.grid.empty()) throw std::invalid_argument("apply_mortality: empty grid");
    mortality_ = mortality;
    spec_.utility.beta = beta;
    return *this;
}

CeBuilder& CeBuilder::apply_insurance(const InsuranceModel& insurance) {
    if (!mortality_) throw std::invalid_argument("apply_insurance: requires apply_mortality first");
    insurance_ = insurance;
    return *this;
}

CeBuilder& CeBuilder::apply_income(const IncomeModel& income) {
    const auto rf = spec_.market.risk_free_index;
    if (!rf) throw std::invalid_argument("apply_income: requires a risk-free asset");
    for (const auto& p : periods_) {
        if (!p->theta_set.is_simple_budget(n_)) {
            throw std::invalid_argument("apply_income: requires the simple budget constraint set");
        }
    }
    income_ = income;
    // Human capital on the plan grid refined 16x, discounted at the risk-free rate.
    constexpr int kRefine = 16;
    const int K = options_.K;
    std::vector<double> fine(static_cast<std::size_t>(K * kRefine) + 1);
    for (std::size_t i = 0; i < fine.size(); ++i) fine[i] = t0_ + h_ * static_cast<double>(i) / kRefine;
    fine.back() = spec_.horizon;
    const double mu_rf = spec_.market.mu(*rf);
    const auto v_fine = builder::human_capital(income, mu_rf, fine);
    for (int k = 0; k <= K; ++k) {
        y_[static_cast<std::size_t>(k)] = income.rate(time(k));
        v_[static_cast<std::size_t>(k)] = v_fine[static_cast<std::size_t>(k * kRefine)];
    }
    return *this;
}

CeBuilder& CeBuilder::apply_epstein_zin(double rho) {
    if (!(rho < 1.0) || rho == 0.0) throw std::invalid_argument("apply_epstein_zin: rho must be < 1 and nonzero");
    rho_ = rho;
    return *this;
}

CeBuilder& CeBuilder::apply_consumption_floor(const SampledCurve& c_min) {
    c_min_ = c_min;
    return *this;
}

CeBuilder& CeBuilder::apply_spending_limit(const SpendingLimit& limit) {
    if (limit.dividend_yield.size() != 0 && limit.dividend_yield.size() != n_) {
        throw std::invalid_argument("apply_spending_limit: dividend yield has the wrong length");
    }
    spending_ = limit;
    return *this;
}

CeBuilder& CeBuilder::apply_minimum_cash(const MinimumCash& cash) {
    if (cash.asset < 0 || cash.asset >= n_) throw std::invalid_argument("apply_minimum_cash: asset index out of range");
    cash_ = cash;
    return *this;
}

CeBuilder& CeBuilder::apply_max_min_consumption() {
    max_min_ = true;
    return *this;
}

CeBuilder& CeBuilder::apply_inexact(const Extensions& ex) {
    if (ex.consumption_floor) apply_consumption_floor(*ex.consumption_floor);
    if (ex.spending_limit) apply_spending_limit(*ex.spending_limit);
    if (ex.minimum_cash) apply_minimum_cash(*ex.minimum_cash);
    if (ex.max_min_consumption) apply_max_min_consumption();
    return *this;
}

double CeBuilder::consumption_weight(int k) const {
    const double t = time(k);
    double wgt = h_;
    if (discount_) wgt *= (*discount_)(t);
    if (mortality_) wgt *= mortality_->survival_at(t);
    return wgt;
}

double CeBuilder::bequest_flow_weight(int k) const {
    if (!mortality_) return 0.0;
    return h_ * spec_.utility.beta * mortality_->density_at(time(k));
}

double CeBuilder::terminal_weight() const {
    const double s_T = mortality_ ? mortality_->survival_at(spec_.horizon) : 1.0;
    return spec_.utility.beta * s_T;
}

double CeBuilder::premium_ratio(int k) const { return insurance_ ? insurance_->payout_ratio(time(k)) : 0.0; }

BuiltProblem CeBuilder::build() const {
    const int K = options_.K;
    const int n = n_;
    const auto Ku = static_cast<std::size_t>(K);
    const auto nu = static_cast<std::size_t>(n);
    const double eps = options_.wealth_floor_ratio * w_init_;
    const double risk_coef = 0.5 * (1.0 - gamma_);

    BuiltProblem out;
    auto& p = out.program;
    auto& L = out.layout;
    L.K = K;
    L.n = n;
    L.w = {p.add_variables(Ku + 1), Ku + 1};
    L.x = {p.add_variables((Ku + 1) * nu), (Ku + 1) * nu};
    L.c = {p.add_variables(Ku), Ku};
    L.s = {p.add_variables(Ku), Ku};
    if (!max_min_) L.tau_c = {p.add_variables(Ku), Ku};
    L.tau_b.assign(Ku, VariableLayout::kAbsent);
    for (int k = 0; k < K; ++k) {
        if (bequest_flow_weight(k) > 0.0) L.tau_b[static_cast<std::size_t>(k)] = p.add_variables(1);
    }
    if (terminal_weight() > 0.0) L.tau_T = p.add_variables(1);
    if (insurance_) L.l = {p.add_variables(Ku), Ku};
    if (options_.slack_mode == SlackMode::ExplicitSlack) L.u = {p.add_variables(Ku), Ku};
    if (max_min_) {
        L.m = p.add_variables(1);
        L.tau_m = p.add_variables(1);
    }
    L.num_columns = p.num_variables();

    auto W = [&](int k) { return AffineExpr::var(L.w[static_cast<std::size_t>(k)]); };
    auto C = [&](int k) { return AffineExpr::var(L.c[static_cast<std::size_t>(k)]); };
    auto X = [&](int k, int i) { return AffineExpr::var(L.x_col(k, i)); };

    // initial condition
    p.add_zero(AffineExpr(-w_init_).add(L.w[0], 1.0));

    double total_consumption_weight = 0.0;
    for (int k = 0; k < K; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        const PeriodMarket& mk = *periods_[ku];
        const double lam = premium_ratio(k);

        // dynamics
        AffineExpr dyn = W(k);
        for (int i = 0; i < n; ++i) dyn.add(L.x_col(k, i), h_ * mk.mu(i));
        dyn.add(L.c[ku], -h_);
        dyn.add(L.s[ku], -h_ * risk_coef);
        if (insurance_) dyn.add(L.l[ku], -h_);
        if (y_[ku] != 0.0) dyn.add_constant(h_ * y_[ku]);
        dyn.add(L.w[ku + 1], -1.0);
        if (options_.slack_mode == SlackMode::ExplicitSlack) {
            dyn.add(L.u[ku], -1.0);
            p.add_zero(dyn);
            p.add_nonnegative(AffineExpr::var(L.u[ku]));
        } else {
            p.add_nonnegative(dyn);
        }

        // risk epigraph x'Sigma x / (w + v) <= s
        AffineExpr denom = W(k);
        if (v_[ku] != 0.0) denom.add_constant(v_[ku]);
        quad_over_lin_cone(p, mk.root, L.x_col(k, 0), denom, AffineExpr::var(L.s[ku]));

        // consumption utility
        const double cw = consumption_weight(k);
        total_consumption_weight += cw;
        if (!max_min_) {
            power_utility_hypograph(p, rho_, C(k), L.tau_c[ku]);
            p.add_objective(L.tau_c[ku], -cw / rho_);
        }

        // bequest flow, with the insurance payout under insurance
        AffineExpr estate = W(k);
        if (insurance_ && lam != 0.0) estate.add(L.l[ku], lam);
        if (L.tau_b[ku] != VariableLayout::kAbsent) {
            power_utility_hypograph(p, rho_, estate, L.tau_b[ku]);
            p.add_objective(L.tau_b[ku], -bequest_flow_weight(k) / rho_);
        }
        if (insurance_) {
            if (options_.force_zero_premium) {
                p.add_zero(AffineExpr::var(L.l[ku]));
            } else {
                p.add_nonnegative(combine(estate, AffineExpr(eps), -1.0));
                // an annuity needs a positive payout ratio to be priced
                if (lam == 0.0) p.add_nonnegative(AffineExpr::var(L.l[ku]));
            }
        }

        // inexact blocks
        if (c_min_) {
            const double floor = (*c_min_)(time(k));
            if (floor > 0.0) p.add_nonnegative(AffineExpr(-floor).add(L.c[ku], 1.0));
        }
        if (spending_) {
            AffineExpr row(spending_->eta * y_[ku]);
            row.add(L.c[ku], -1.0);
            for (Eigen::Index i = 0; i < spending_->dividend_yield.size(); ++i) {
                row.add(L.x_col(k, static_cast<int>(i)), spending_->dividend_yield(i));
            }
            p.add_nonnegative(row);
        }
        if (cash_ && cash_->consumption_multiple > 0.0) {
            p.add_nonnegative(X(k, cash_->asset).add(L.c[ku], -cash_->consumption_multiple));
        }
        if (max_min_) p.add_nonnegative(C(k).add(L.m, -1.0));
    }

    for (int k = 0; k <= K; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        AffineExpr pos = W(k);
        pos.add_constant(v_[ku] - eps);
        p.add_nonnegative(pos);
        // under income Theta is the simple budget set, so this is 1'x_k = w_k
        perspective_of_theta(p, periods_[ku]->theta_set, L.x_col(k, 0), W(k));
        if (cash_ && cash_->floor) {
            p.add_nonnegative(X(k, cash_->asset).add_constant(-(*cash_->floor)(time(k))));
        }
    }

    if (L.tau_T != VariableLayout::kAbsent) {
        power_utility_hypograph(p, rho_, W(K), L.tau_T);
        p.add_objective(L.tau_T, -terminal_weight() / rho_);
    }
    if (max_min_) {
        power_utility_hypograph(p, rho_, AffineExpr::var(L.m), L.tau_m);
        p.add_objective(L.tau_m, -total_consumption_weight / rho_);
    }
    return out;
}

Trajectory CeBuilder::decode(const conic::SolveResult& result, const VariableLayout& L) const {
    if (!result.has_solution()) {
        throw std::runtime_error(std::string("decode: no primal solution (status ") + conic::to_string(result.status) + ")");
    }
    const auto& z = result.primal;
    const int K = L.K;
    const int n = L.n;
    Trajectory tr;
    tr.status = result.status;
    tr.stats = result.stats;
    tr.objective = -result.objective;
    tr.t.resize(static_cast<std::size_t>(K) + 1);
    tr.w.resize(K + 1);
    tr.x.resize(n, K + 1);
    for (int k = 0; k <= K; ++k) {
        tr.t[static_cast<std::size_t>(k)] = time(k);
        tr.w(k) = z[L.w[static_cast<std::size_t>(k)]];
        for (int i = 0; i < n; ++i) tr.x(i, k) = z[L.x_col(k, i)];
    }
    tr.c.resize(K);
    tr.risk.resize(K);
    for (int k = 0; k < K; ++k) {
        tr.c(k) = z[L.c[static_cast<std::size_t>(k)]];
        tr.risk(k) = z[L.s[static_cast<std::size_t>(k)]];
    }
    if (!L.l.empty()) {
        tr.premium.resize(K);
        for (int k = 0; k < K; ++k) tr.premium(k) = z[L.l[static_cast<std::size_t>(k)]];
    }
    if (L.m != VariableLayout::kAbsent) tr.min_consumption = z[L.m];

    const double risk_coef = 0.5 * (1.0 - gamma_);
    tr.slack.resize(K);
    tr.row_slack.resize(K);
    for (int k = 0; k < K; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        const PeriodMarket& mk = *periods_[ku];
        const Vector xk = tr.x.col(k);
        double base = tr.w(k) + h_ * (mk.mu.dot(xk) - tr.c(k)) + h_ * y_[ku] - tr.w(k + 1);
        if (tr.premium.size() > 0) base -= h_ * tr.premium(k);
        const double exact_risk = mk.root.quad(xk) / (tr.w(k) + v_[ku]);
        tr.slack(k) = base - h_ * risk_coef * exact_risk;
        tr.row_slack(k) = base - h_ * risk_coef * tr.risk(k);
    }
    return tr;
}

std::vector<double> CeBuilder::encode(const Trajectory& tr, const VariableLayout& L) const {
    std::vector<double> z(L.num_columns, 0.0);
    const int K = L.K;
    for (int k = 0; k <= K; ++k) {
        z[L.w[static_cast<std::size_t>(k)]] = tr.w(k);
        for (int i = 0; i < L.n; ++i) z[L.x_col(k, i)] = tr.x(i, k);
    }
    for (int k = 0; k < K; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        z[L.c[ku]] = tr.c(k);
        z[L.s[ku]] = periods_[ku]->root.quad(tr.x.col(k)) / (tr.w(k) + v_[ku]);
        if (!L.tau_c.empty()) z[L.tau_c[ku]] = std::pow(tr.c(k), rho_);
        const double l = tr.premium.size() > 0 ? tr.premium(k) : 0.0;
        if (!L.l.empty()) z[L.l[ku]] = l;
        if (L.tau_b[ku] != VariableLayout::kAbsent) z[L.tau_b[ku]] = std::pow(tr.w(k) + premium_ratio(k) * l, rho_);
        if (!L.u.empty()) z[L.u[ku]] = tr.row_slack.size() > 0 ? tr.row_slack(k) : 0.0;
    }
    if (L.tau_T != VariableLayout::kAbsent) z[L.tau_T] = std::pow(tr.w(K), rho_);
    if (L.m != VariableLayout::kAbsent) {
        const double m = tr.min_consumption.value_or(tr.c.minCoeff());
        z[L.m] = m;
        z[L.tau_m] = std::pow(m, rho_);
    }
    return z;
}

BuiltProblem build_base(const ProblemSpec& spec, const BuildOptions& options) {
    return CeBuilder(spec, options).build();
}

CeBuilder make_builder(const ProblemSpec& spec, const BuildOptions& options) {
    CeBuilder b(spec, options);
    const auto& ex = spec.extensions;
    if (!ex.time_varying.empty()) b.apply_time_varying(ex.time_varying);
    if (spec.utility.discount) b.apply_discount(*spec.utility.discount);
    if (ex.mortality) b.apply_mortality(*ex.mortality, spec.utility.beta);
    if (ex.insurance) b.apply_insurance(*ex.insurance);
    if (ex.income) b.apply_income(*ex.income);
    if (spec.utility.rho) b.apply_epstein_zin(*spec.utility.rho);
    b.apply_inexact(ex);
    return b;
}

BuiltProblem build_program(const ProblemSpec& spec, const BuildOptions& options) {
    return make_builder(spec, options).build();
}

Trajectory plan(const ProblemSpec& spec, const BuildOptions& options, const conic::SolverSettings& settings) {
    const CeBuilder b = make_builder(spec, options);
    BuiltProblem built = b.build();
    const conic::SolveResult r = conic::solve(built.program, settings);
    if (!r.has_solution()) {
        throw PlanError(std::string("plan: solver status ") + conic::to_string(r.status), r.status,
                        std::move(built.program));
    }
    return b.decode(r, built.layout);
}

Matrix planned_returns(const CeBuilder& b, const Trajectory& tr, double gamma) {
    Matrix r(b.num_assets(), tr.K());
    for (int k = 0; k < tr.K(); ++k) {
        const PeriodMarket& mk = b.market(k);
        const double total = tr.w(k) + b.human_capital()[static_cast<std::size_t>(k)];
        r.col(k) = mk.mu + 0.5 * (gamma - 1.0) * mk.root.sigma_times(tr.x.col(k)) / total;
    }
    return r;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& tr) {
    const auto old = out.precision();
    out << std::setprecision(17);
    out << "k,t,w,c";
    for (Eigen::Index i = 0; i < tr.x.rows(); ++i) out << ",theta_" << (i + 1);
    out << ",slack\n";
    const int K = tr.K();
    for (int k = 0; k <= K; ++k) {
        out << k << ',' << tr.t[static_cast<std::size_t>(k)] << ',' << tr.w(k) << ',';
        if (k < K) out << tr.c(k);
        for (Eigen::Index i = 0; i < tr.x.rows(); ++i) out << ',' << tr.x(i, k) / tr.w(k);
        out << ',';
        if (k < K) out << tr.slack(k);
        out << '\n';
    }
    out.precision(old);
}

}  // namespace merton::builder
