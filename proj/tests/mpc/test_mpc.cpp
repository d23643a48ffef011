#include "merton/mpc/mpc.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

#include <cmath>

using namespace merton;
using namespace merton::mpc;

namespace {

MpcConfig fixed_k(int K) {
    MpcConfig c;
    c.horizon = MpcConfig::Horizon::FixedK;
    c.periods = K;
    return c;
}

MpcConfig precise_config(double step) {
    MpcConfig c;
    c.step = step;
    c.solver.tol_feas = 1e-12;
    c.solver.tol_gap = 1e-12;
    c.solver.max_iter = 500;
    return c;
}

}  // namespace

TEST_CASE("mpc_act at t = 0 is the plan's own first control") {
    const ProblemSpec spec = testing::base_spec();
    const MpcDecision d = mpc_act(0.0, spec.w_init, spec, fixed_k(50));
    builder::BuildOptions opt;
    opt.K = 50;
    const builder::Trajectory tr = builder::plan(spec, opt);
    CHECK(d.action.consumption == tr.c(0));
    CHECK(d.action.theta == tr.theta(0));
}

TEST_CASE("mpc_act tracks the analytic policy at any state") {
    const ProblemSpec spec = testing::base_spec();
    const auto sol = analytic::solve_analytic(spec);
    MpcConfig cfg;
    cfg.step = 0.025;
    for (const auto& [t, w] : {std::pair{0.0, 1.0}, std::pair{3.0, 2.0}, std::pair{7.5, 0.4}}) {
        const MpcDecision d = mpc_act(t, w, spec, cfg);
        CHECK((d.action.theta - sol.theta_ce).cwiseAbs().maxCoeff() <= 1e-3);
        CHECK(std::abs(d.action.consumption / w - sol.consumption_ratio(t)) <= 5e-3);
    }
}

TEST_CASE("doubling wealth doubles consumption and keeps theta") {
    const ProblemSpec spec = testing::base_spec();
    const MpcConfig cfg = precise_config(0.1);
    const MpcDecision a = mpc_act(2.0, 1.0, spec, cfg);
    const MpcDecision b = mpc_act(2.0, 2.0, spec, cfg);
    CHECK(b.action.consumption == doctest::Approx(2.0 * a.action.consumption).epsilon(1e-6));
    CHECK((b.action.theta - a.action.theta).cwiseAbs().maxCoeff() <= 1e-6);
}

TEST_CASE("the homogeneity cache agrees with solving at the current wealth") {
    const ProblemSpec spec = testing::base_spec();
    MpcConfig cached = precise_config(0.1);
    MpcConfig direct = cached;
    direct.exploit_homogeneity = false;
    MpcPolicy pc(spec, cached);
    MpcPolicy pd(spec, direct);
    const Action a = pc.act(0.0, 3.0);
    const Action b = pd.act(0.0, 3.0);
    CHECK(a.consumption == doctest::Approx(b.consumption).epsilon(1e-6));
    CHECK((a.theta - b.theta).cwiseAbs().maxCoeff() <= 1e-6);
    pc.reset();
    pc.act(0.0, 5.0);
    CHECK(pc.num_solves() == 1);
}

TEST_CASE("replans happen on the replan grid and the plan is followed in between") {
    const ProblemSpec spec = testing::base_spec();
    MpcConfig cfg;
    cfg.replan_interval = 1.0;
    cfg.step = 0.5;
    MpcPolicy p(spec, cfg);
    p.act(0.0, 1.0);
    p.act(0.25, 1.0);
    p.act(0.75, 1.0);
    CHECK(p.num_solves() == 1);
    p.act(1.0, 1.0);
    CHECK(p.num_solves() == 2);
    CHECK(p.proportional());
}

TEST_CASE("one plan versus frequent replanning in a riskless market") {
    ProblemSpec spec;
    spec.market.mu = Vector::Constant(1, 0.04);
    spec.market.cov = DenseCovariance{Matrix::Zero(1, 1)};
    spec.market.risk_free_index = 0;
    spec.theta_set = ConstraintSet::budget(1);
    spec.horizon = 5.0;
    MpcConfig once;
    once.replan_interval = 5.0;
    once.step = 0.05;
    MpcConfig often = once;
    often.replan_interval = 0.25;
    sim::SimOptions so;
    so.h_sim = 0.05;
    MpcPolicy a(spec, once);
    MpcPolicy b(spec, often);
    const sim::SimPath pa = sim::simulate_path(a, spec, so, 1);
    const sim::SimPath pb = sim::simulate_path(b, spec, so, 1);
    REQUIRE(pa.c.size() == pb.c.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < pa.c.size(); ++k) worst = std::max(worst, std::abs(pa.c[k] - pb.c[k]) / pb.c[k]);
    CHECK(worst <= 0.05 * 0.5);
    CHECK(a.num_solves() == 1);
}

TEST_CASE("MPC respects the spending limit on every simulated step") {
    ProblemSpec spec = testing::risk_free_spec();
    spec.extensions.income = IncomeModel{SampledCurve{{0.0, 10.0}, {0.3, 0.1}}};
    spec.extensions.spending_limit = SpendingLimit{0.7, Vector()};
    MpcConfig cfg;
    cfg.replan_interval = 1.0;
    cfg.step = 0.25;
    const MpcPolicy policy(spec, cfg);
    sim::SimOptions so;
    so.h_sim = 0.05;
    so.record_paths = 4;
    const auto r = sim::monte_carlo(policy, spec, 4, so, 3);
    for (const auto& path : r.paths) {
        for (std::size_t k = 0; k < path.c.size(); ++k) {
            CHECK(path.c[k] <= 0.7 * spec.extensions.income->rate(path.t[k]) + 1e-9);
        }
    }
}

TEST_CASE("held controls are clipped to instantaneous constraints") {
    ProblemSpec spec = testing::risk_free_spec();
    spec.extensions.consumption_floor = SampledCurve::constant(0.05, 0.0, 10.0);
    spec.extensions.minimum_cash = MinimumCash{1, SampledCurve::constant(0.5, 0.0, 10.0), 0.5};
    Action a;
    a.consumption = 0.01;
    a.theta = (Vector(2) << 0.8, 0.2).finished();
    const Action b = enforce_instantaneous(spec, 1.0, 1.0, a);
    CHECK(b.theta(1) == doctest::Approx(0.5));
    CHECK(b.theta.sum() == doctest::Approx(1.0));
    CHECK(b.consumption == doctest::Approx(0.05));
    a.consumption = 2.0;
    const Action c = enforce_instantaneous(spec, 1.0, 1.0, a);
    CHECK(c.consumption == doctest::Approx(0.5 / 0.5));
}

TEST_CASE("MPC and analytic policies realize the same utility") {
    const ProblemSpec spec = testing::base_spec();
    MpcConfig cfg;
    cfg.replan_interval = 0.5;
    cfg.step = 0.05;
    sim::SimOptions so;
    so.h_sim = 1.0 / 50.0;
    const BacktestReport r = backtest(spec, cfg, 4000, 17, so);
    REQUIRE(r.analytic);
    REQUIRE(r.joint_std_error);
    CHECK(std::abs(*r.difference) <= 2.0 * *r.joint_std_error);
    CHECK(r.timing.solves >= 20);
    CHECK(r.mpc.ce_wealth > 0.0);
    CHECK(r.mpc.ruin_rate == 0.0);
}

TEST_CASE("backtest JSON is reproducible and omits timings by default") {
    const ProblemSpec spec = testing::base_spec();
    MpcConfig cfg;
    cfg.replan_interval = 2.5;
    cfg.step = 0.5;
    sim::SimOptions so;
    so.h_sim = 0.1;
    const std::string a = backtest_to_json(backtest(spec, cfg, 50, 9, so));
    const std::string b = backtest_to_json(backtest(spec, cfg, 50, 9, so));
    CHECK(a == b);
    CHECK(a.find("timing") == std::string::npos);
    CHECK(backtest_to_json(backtest(spec, cfg, 50, 9, so), true).find("timing_seconds") != std::string::npos);
    CHECK_THROWS_AS(backtest(spec, cfg, 0, 9, so), std::invalid_argument);
}

TEST_CASE("configuration and solver errors") {
    const ProblemSpec spec = testing::base_spec();
    MpcConfig bad;
    bad.replan_interval = 0.0;
    CHECK_THROWS_AS(mpc_act(0.0, 1.0, spec, bad), std::invalid_argument);
    CHECK_THROWS_AS(mpc_act(10.0, 1.0, spec, MpcConfig{}), std::invalid_argument);
    CHECK(MpcConfig{}.periods_at(9.99, 10.0) == 1);

    ProblemSpec infeasible = testing::risk_free_spec();
    infeasible.extensions.spending_limit = SpendingLimit{0.1, Vector()};
    infeasible.extensions.consumption_floor = SampledCurve::constant(0.5, 0.0, 10.0);
    try {
        mpc_act(0.0, 1.0, infeasible, MpcConfig{});
        FAIL("expected a PlanError");
    } catch (const builder::PlanError& e) {
        CHECK(e.program().num_rows() > 0);
        CHECK(e.status() != conic::SolveStatus::Optimal);
    }
}
