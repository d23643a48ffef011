#include "merton/mpc/mpc.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace merton::mpc {

void MpcConfig::check(double T) const {
    if (!(replan_interval > 0.0) || replan_interval > T) {
        throw std::invalid_argument("MpcConfig: replan interval must lie in (0, T]");
    }
    if (horizon == Horizon::FixedStep && !(step > 0.0)) throw std::invalid_argument("MpcConfig: step must be positive");
    if (horizon == Horizon::FixedK && periods < 1) throw std::invalid_argument("MpcConfig: periods must be at least 1");
}

int MpcConfig::periods_at(double t, double T) const {
    if (horizon == Horizon::FixedK) return periods;
    return static_cast<int>(std::max(1L, std::lround((T - t) / step)));
}

MpcDecision mpc_act(double t, double w, const ProblemSpec& spec, const MpcConfig& config) {
    config.check(spec.horizon);
    if (!(t >= 0.0 && t < spec.horizon)) throw std::invalid_argument("mpc_act: time must lie in [0, T)");
    builder::BuildOptions opt;
    opt.K = config.periods_at(t, spec.horizon);
    opt.start_time = t;
    opt.initial_wealth = w;
    MpcDecision d;
    d.plan = builder::plan(spec, opt, config.solver);
    d.action.consumption = d.plan.c(0);
    d.action.theta = d.plan.theta(0);
    d.action.premium = d.plan.premium.size() > 0 ? d.plan.premium(0) : 0.0;
    return d;
}

Action enforce_instantaneous(const ProblemSpec& spec, double t, double w, Action a) {
    const auto& ex = spec.extensions;
    if (ex.minimum_cash && ex.minimum_cash->floor) {
        // raise the cash weight to the floor, scaling the other weights to keep 1'theta
        const int i = ex.minimum_cash->asset;
        const double need = (*ex.minimum_cash->floor)(t) / w;
        const double rest = 1.0 - a.theta(i);
        if (a.theta(i) < need && rest != 0.0) {
            const double scale = (1.0 - need) / rest;
            a.theta *= scale;
            a.theta(i) = need;
        }
    }
    if (ex.consumption_floor) a.consumption = std::max(a.consumption, (*ex.consumption_floor)(t));
    double cap = std::numeric_limits<double>::infinity();
    if (ex.spending_limit) {
        const double y = ex.income ? ex.income->rate(t) : 0.0;
        double dividends = 0.0;
        if (ex.spending_limit->dividend_yield.size() > 0) dividends = ex.spending_limit->dividend_yield.dot(a.theta) * w;
        cap = std::min(cap, ex.spending_limit->eta * y + dividends);
    }
    if (ex.minimum_cash && ex.minimum_cash->consumption_multiple > 0.0) {
        cap = std::min(cap, a.theta(ex.minimum_cash->asset) * w / ex.minimum_cash->consumption_multiple);
    }
    // upper limits win over the floor; a conflict is infeasible for the planner too
    a.consumption = std::min(a.consumption, cap);
    return a;
}

MpcPolicy::MpcPolicy(ProblemSpec spec, MpcConfig config)
    : spec_(std::make_shared<const ProblemSpec>(std::move(spec))),
      config_(std::move(config)),
      shared_(std::make_shared<Shared>()) {
    config_.check(spec_->horizon);
    homogeneous_ = config_.exploit_homogeneity && spec_->is_wealth_homogeneous();
}

bool MpcPolicy::proportional() const { return spec_->is_wealth_homogeneous(); }

void MpcPolicy::reset() {
    held_.reset();
    next_replan_ = 0.0;
}

std::unique_ptr<sim::Policy> MpcPolicy::clone() const {
    auto p = std::make_unique<MpcPolicy>(*this);
    p->reset();
    return p;
}

std::shared_ptr<const MpcPolicy::Schedule> MpcPolicy::solve_schedule(double t, double w) {
    if (homogeneous_) {
        const std::lock_guard lock(shared_->mutex);
        const auto it = shared_->cache.find(t);
        if (it != shared_->cache.end()) return it->second;
    }
    // under homogeneity the reference wealth makes the result independent of
    // which path reaches this replan time first
    const double w_solve = homogeneous_ ? spec_->w_init : w;
    const auto start = std::chrono::steady_clock::now();
    const MpcDecision d = mpc_act(t, w_solve, *spec_, config_);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const auto& plan = d.plan;
    const int K = plan.K();
    auto s = std::make_shared<Schedule>();
    s->start = t;
    s->step = (spec_->horizon - t) / K;
    s->consumption.resize(K);
    s->theta.resize(plan.x.rows(), K);
    s->premium = Vector::Zero(K);
    for (int k = 0; k < K; ++k) {
        s->consumption(k) = plan.c(k) / plan.w(k);
        s->theta.col(k) = plan.theta(k);
        if (plan.premium.size() > 0) s->premium(k) = plan.premium(k) / plan.w(k);
    }
    // the first control is exactly the plan's, whatever the scaling
    s->consumption(0) = d.action.consumption / w_solve;
    s->premium(0) = d.action.premium / w_solve;

    const std::lock_guard lock(shared_->mutex);
    shared_->solve_seconds.push_back(seconds);
    if (homogeneous_) shared_->cache.emplace(t, s);
    return s;
}

void MpcPolicy::act(double t, double w, Action& out) {
    const double T = spec_->horizon;
    if (!held_ || t >= next_replan_ - 1e-12 * std::max(1.0, T)) {
        held_ = solve_schedule(t, w);
        const double dt = config_.replan_interval;
        next_replan_ = (std::floor(t / dt + 1e-9) + 1.0) * dt;
    }
    const Schedule& s = *held_;
    const auto last = s.consumption.size() - 1;
    const auto k = std::min<Eigen::Index>(last, static_cast<Eigen::Index>(std::floor((t - s.start) / s.step + 1e-9)));
    out.consumption = s.consumption(k) * w;
    out.theta = s.theta.col(k);
    out.premium = s.premium(k) * w;
    out = enforce_instantaneous(*spec_, t, w, std::move(out));
}

std::vector<double> MpcPolicy::solve_seconds() const {
    const std::lock_guard lock(shared_->mutex);
    return shared_->solve_seconds;
}

std::size_t MpcPolicy::num_solves() const {
    const std::lock_guard lock(shared_->mutex);
    return shared_->solve_seconds.size();
}

namespace {

PolicyReport report_of(const std::string& name, const sim::MonteCarloResult& r, double rho) {
    PolicyReport p;
    p.name = name;
    p.paths = r.num_paths;
    p.mean_utility = r.mean;
    p.std_error = r.std_error;
    p.ruin_rate = r.ruin_rate;
    p.ce_wealth = rho * r.mean > 0.0 ? std::pow(rho * r.mean, 1.0 / rho) : 0.0;
    return p;
}

double percentile(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

nlohmann::ordered_json to_json(const PolicyReport& p) {
    nlohmann::ordered_json j;
    j["name"] = p.name;
    j["paths"] = p.paths;
    j["mean_utility"] = p.mean_utility;
    j["std_error"] = p.std_error ? nlohmann::ordered_json(*p.std_error) : nlohmann::ordered_json(nullptr);
    j["ce_wealth"] = p.ce_wealth;
    j["ruin_rate"] = p.ruin_rate;
    return j;
}

}  // namespace

TimingSummary summarize_timing(std::vector<double> seconds) {
    TimingSummary t;
    std::sort(seconds.begin(), seconds.end());
    t.solves = seconds.size();
    t.p50 = percentile(seconds, 0.5);
    t.p90 = percentile(seconds, 0.9);
    t.max = seconds.empty() ? 0.0 : seconds.back();
    for (double s : seconds) t.total += s;
    return t;
}

BacktestReport backtest(const ProblemSpec& spec, const MpcConfig& config, std::size_t N, std::uint64_t seed,
                        const sim::SimOptions& sim_options) {
    if (N == 0) throw std::invalid_argument("backtest: need at least one path");
    const double rho = spec.utility.utility_exponent();
    BacktestReport rep;
    const MpcPolicy mpc(spec, config);
    const auto r_mpc = sim::monte_carlo(mpc, spec, N, sim_options, sim::path_seed(seed, 0));
    rep.mpc = report_of("mpc", r_mpc, rho);
    rep.timing = summarize_timing(mpc.solve_seconds());

    std::optional<analytic::AnalyticSolution> sol;
    try {
        sol = analytic::solve_analytic(spec);
    } catch (const std::invalid_argument&) {
    }
    if (sol) {
        const sim::AnalyticPolicy policy(*sol);
        const auto r = sim::monte_carlo(policy, spec, N, sim_options, sim::path_seed(seed, 1));
        rep.analytic = report_of("analytic", r, rho);
        rep.difference = rep.mpc.mean_utility - rep.analytic->mean_utility;
        if (rep.mpc.std_error && rep.analytic->std_error) {
            rep.joint_std_error = std::hypot(*rep.mpc.std_error, *rep.analytic->std_error);
        }
    }
    return rep;
}

std::string backtest_to_json(const BacktestReport& r, bool include_timing) {
    nlohmann::ordered_json j;
    j["mpc"] = to_json(r.mpc);
    j["analytic"] = r.analytic ? to_json(*r.analytic) : nlohmann::ordered_json(nullptr);
    j["difference"] = r.difference ? nlohmann::ordered_json(*r.difference) : nlohmann::ordered_json(nullptr);
    j["joint_std_error"] = r.joint_std_error ? nlohmann::ordered_json(*r.joint_std_error) : nlohmann::ordered_json(nullptr);
    if (include_timing) {
        // concurrent paths may race to fill the same cache entry, so the count is
        // reported with the timings rather than in the reproducible part
        j["solves"] = r.timing.solves;
        j["timing_seconds"] = {{"p50", r.timing.p50}, {"p90", r.timing.p90}, {"max", r.timing.max}, {"total", r.timing.total}};
    }
    return j.dump(2);
}

}  // namespace merton::mpc
