#include "merton/analytic/analytic.hpp"
#include "merton/builder/builder.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace merton;
using namespace merton::builder;

namespace {

BuildOptions with_k(int K) {
    BuildOptions o;
    o.K = K;
    return o;
}

double max_abs(const Vector& v) { return v.cwiseAbs().maxCoeff(); }

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Homogeneity of the trajectory (not only the objective) needs the solver
// driven close to machine precision.
conic::SolverSettings precise() {
    conic::SolverSettings s;
    s.tol_feas = 1e-12;
    s.tol_gap = 1e-12;
    s.max_iter = 500;
    return s;
}

conic::SolverSettings tight() {
    conic::SolverSettings s;
    s.tol_feas = 1e-10;
    s.tol_gap = 1e-10;
    return s;
}

double solve_objective(const ProblemSpec& spec, const BuildOptions& opt) {
    return plan(spec, opt, tight()).objective;
}

}  // namespace

TEST_CASE("quad_over_lin_cone example: Sigma = I, x = (3, 4), w = 5") {
    ConicProgram p;
    const std::size_t x = p.add_variables(2);
    const std::size_t w = p.add_variables(1);
    const std::size_t s = p.add_variables(1);
    MarketModel m;
    m.mu = Vector::Zero(2);
    m.cov = DenseCovariance{Matrix::Identity(2, 2)};
    quad_over_lin_cone(p, expand_covariance(m), x, AffineExpr::var(w), AffineExpr::var(s));
    const std::vector<double> point{3.0, 4.0, 5.0, 5.0};
    const auto slack = p.slack(point);
    REQUIRE(slack.size() == 4);
    CHECK(slack[0] == doctest::Approx(10.0));
    double tail = 0.0;
    for (std::size_t i = 1; i < slack.size(); ++i) tail += slack[i] * slack[i];
    CHECK(std::sqrt(tail) == doctest::Approx(10.0));
    CHECK(conic::cone_violation(p.cones()[0], slack) <= 1e-12);
    const std::vector<double> below{3.0, 4.0, 5.0, 4.99};
    CHECK(conic::cone_violation(p.cones()[0], p.slack(below)) > 0.0);
    const std::vector<double> zero{0.0, 0.0, 2.0, 0.0};
    CHECK(conic::cone_violation(p.cones()[0], p.slack(zero)) <= 0.0);
}

TEST_CASE("quad_over_lin_cone matches x'Sigma x / w <= s on 1e5 random samples") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> nd;
    std::uniform_real_distribution<double> ud(0.01, 3.0);
    for (const bool factor : {false, true}) {
        const int n = 4;
        MarketModel m;
        m.mu = Vector::Zero(n);
        if (factor) {
            FactorCovariance f;
            f.loadings = Matrix::NullaryExpr(n, 2, [&] { return nd(rng); });
            f.factor_cov = Matrix::Identity(2, 2) * 0.5;
            f.idio_var = Vector::Constant(n, 0.1);
            m.cov = f;
        } else {
            const Matrix a = Matrix::NullaryExpr(n, n, [&] { return nd(rng); });
            m.cov = DenseCovariance{a * a.transpose() + 0.1 * Matrix::Identity(n, n)};
        }
        const CovarianceRoot root = expand_covariance(m);
        const Matrix sigma = m.dense_covariance();
        ConicProgram p;
        const std::size_t x = p.add_variables(static_cast<std::size_t>(n));
        const std::size_t w = p.add_variables(1);
        const std::size_t s = p.add_variables(1);
        quad_over_lin_cone(p, root, x, AffineExpr::var(w), AffineExpr::var(s));
        CHECK(p.cones()[0].dim == (factor ? static_cast<std::size_t>(n + 2 + 2) : static_cast<std::size_t>(n + 2)));
        int mismatches = 0;
        int checked = 0;
        for (int trial = 0; trial < 50000; ++trial) {
            std::vector<double> pt(static_cast<std::size_t>(n) + 2);
            Vector xv(n);
            for (int i = 0; i < n; ++i) pt[static_cast<std::size_t>(i)] = xv(i) = nd(rng);
            const double wv = ud(rng);
            const double q = xv.dot(sigma * xv) / wv;
            const double sv = q * ud(rng) / 1.5;
            pt[static_cast<std::size_t>(n)] = wv;
            pt[static_cast<std::size_t>(n) + 1] = sv;
            if (std::abs(q - sv) <= 1e-9 * (1.0 + q)) continue;
            ++checked;
            const bool member = conic::cone_violation(p.cones()[0], p.slack(pt)) <= 0.0;
            if (member != (q <= sv)) ++mismatches;
        }
        CHECK(checked > 49000);
        CHECK(mismatches == 0);
    }
}

TEST_CASE("power_utility_hypograph examples") {
    auto extremal = [](double rho, double c) {
        // maximize tau (rho > 0) or minimize tau (rho < 0) subject to the hypograph with c fixed
        ConicProgram p;
        const std::size_t cc = p.add_variables(1);
        const std::size_t tau = p.add_variables(1);
        p.add_zero(AffineExpr(-c).add(cc, 1.0));
        power_utility_hypograph(p, rho, AffineExpr::var(cc), tau);
        p.set_objective(tau, rho > 0 ? -1.0 : 1.0);
        conic::SolverSettings s;
        s.tol_feas = s.tol_gap = 1e-10;
        const auto r = conic::solve(p, s);
        REQUIRE(r.status == conic::SolveStatus::Optimal);
        return r.primal[tau];
    };
    CHECK(extremal(0.5, 4.0) == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(extremal(-1.0, 2.0) == doctest::Approx(0.5).epsilon(1e-7));
    for (double rho : {0.3, 0.5, -0.5, -2.0}) CHECK(extremal(rho, 1.0) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("power_utility_hypograph matches tau vs c^rho on 1e5 random samples") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    int mismatches = 0;
    int checked = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        const double rho = trial % 2 == 0 ? 0.05 + 0.9 * ud(rng) : -0.05 - 4.0 * ud(rng);
        ConicProgram p;
        const std::size_t c = p.add_variables(1);
        const std::size_t tau = p.add_variables(1);
        power_utility_hypograph(p, rho, AffineExpr::var(c), tau);
        const double cv = 0.01 + 5.0 * ud(rng);
        const double target = std::pow(cv, rho);
        const double tv = 2.0 * target * ud(rng);
        if (std::abs(tv - target) <= 1e-9 * target) continue;
        ++checked;
        const std::vector<double> pt{cv, tv};
        const bool member = conic::cone_violation(p.cones()[0], p.slack(pt)) <= 0.0;
        const bool expected = rho > 0 ? tv <= target : tv >= target;
        if (member != expected) ++mismatches;
    }
    CHECK(checked > 99000);
    CHECK(mismatches == 0);
}

TEST_CASE("perspective_of_theta examples") {
    ConicProgram p;
    const std::size_t x = p.add_variables(2);
    const std::size_t w = p.add_variables(1);
    ConstraintSet set = ConstraintSet::budget(2);
    Vector g(2);
    g << -1.0, 0.0;
    set.ineq.push_back({g, 0.0});  // theta_1 >= 0
    SocConstraint cap;
    cap.P = Matrix::Identity(2, 2);
    cap.q = Vector::Zero(2);
    cap.r = 0.2 * 5.0;  // ||theta|| <= 1
    set.socs.push_back(cap);
    perspective_of_theta(p, set, x, AffineExpr::var(w));
    auto feasible = [&](double x1, double x2, double wv) {
        const std::vector<double> pt{x1, x2, wv};
        const auto s = p.slack(pt);
        std::size_t off = 0;
        double worst = 0.0;
        for (const auto& cone : p.cones()) {
            worst = std::max(worst, conic::cone_violation(cone, std::span(s).subspan(off, cone.dim)));
            off += cone.dim;
        }
        return worst <= 1e-12;
    };
    CHECK(feasible(6.0, 4.0, 10.0));
    CHECK_FALSE(feasible(6.0, 5.0, 10.0));   // 1'x != w
    CHECK_FALSE(feasible(-1.0, 11.0, 10.0));  // x_1 < 0
    CHECK(feasible(3.0, 0.0, 3.0));
    CHECK_FALSE(feasible(4.0, 4.0, 8.0 - 1e-3));
    CHECK_FALSE(feasible(6.0, -3.0, 3.0));  // ||x|| > 1 * w
}

TEST_CASE("base plan agrees with the analytic policy and error halves with K") {
    const ProblemSpec spec = testing::base_spec();
    const auto sol = analytic::solve_analytic(spec);
    std::vector<double> errors;
    for (int K : {50, 100, 200, 400}) {
        const Trajectory tr = plan(spec, with_k(K));
        const double c_err = std::abs(tr.c(0) / tr.w(0) - sol.consumption_ratio(0.0));
        const double th_err = max_abs(tr.theta(0) - sol.theta_ce);
        errors.push_back(c_err);
        if (K == 200) {
            CHECK(c_err <= 5e-3);
            CHECK(th_err <= 5e-3);
        }
        CHECK(tr.w(0) == doctest::Approx(1.0));
    }
    for (std::size_t i = 1; i < errors.size(); ++i) {
        const double ratio = errors[i] / errors[i - 1];
        CHECK(ratio >= 0.35);
        CHECK(ratio <= 0.65);
    }
}

TEST_CASE("riskless savings problem matches the analytic consumption to O(h)") {
    ProblemSpec spec;
    spec.market.mu = Vector::Constant(1, 0.03);
    spec.market.cov = DenseCovariance{Matrix::Zero(1, 1)};
    spec.market.risk_free_index = 0;
    spec.utility.gamma = 0.5;
    spec.theta_set = ConstraintSet::budget(1);
    spec.horizon = 5.0;
    const auto sol = analytic::solve_analytic(spec);
    const Trajectory a = plan(spec, with_k(50));
    const Trajectory b = plan(spec, with_k(100));
    const double ea = std::abs(a.c(0) - sol.consumption_ratio(0.0));
    const double eb = std::abs(b.c(0) - sol.consumption_ratio(0.0));
    CHECK(ea <= 0.1 * a.c(0));
    CHECK(eb < ea);
    CHECK(eb / ea == doctest::Approx(0.5).epsilon(0.2));
}

TEST_CASE("dynamics rows are tight at the optimum") {
    const ProblemSpec spec = testing::base_spec();
    for (const auto mode : {SlackMode::Inequality, SlackMode::ExplicitSlack}) {
        BuildOptions opt = with_k(100);
        opt.slack_mode = mode;
        const Trajectory tr = plan(spec, opt);
        CHECK(tr.slack.maxCoeff() <= 1e-6 * spec.w_init);
        CHECK(tr.row_slack.maxCoeff() <= 1e-6 * spec.w_init);
        CHECK(tr.slack.minCoeff() >= -1e-6);
    }
}

TEST_CASE("explicit slack mode reproduces the inequality objective") {
    const ProblemSpec spec = testing::base_spec();
    BuildOptions opt = with_k(40);
    const double a = solve_objective(spec, opt);
    opt.slack_mode = SlackMode::ExplicitSlack;
    CHECK(rel_diff(solve_objective(spec, opt), a) <= 1e-8);
}

TEST_CASE("plan is positively homogeneous in initial wealth") {
    ProblemSpec spec = testing::base_spec();
    const BuildOptions opt = with_k(50);
    const Trajectory base = plan(spec, opt, precise());
    for (double lambda : {0.1, 10.0}) {
        spec.w_init = lambda;
        const Trajectory tr = plan(spec, opt, precise());
        CHECK(rel_diff(tr.objective, std::pow(lambda, spec.utility.gamma) * base.objective) <= 1e-5);
        CHECK(max_abs(tr.w / lambda - base.w) / max_abs(base.w) <= 1e-6);
        CHECK(max_abs(tr.c / lambda - base.c) / max_abs(base.c) <= 1e-6);
        const int K = tr.K();
        const Matrix dx = tr.x.leftCols(K) / lambda - base.x.leftCols(K);
        CHECK(dx.cwiseAbs().maxCoeff() / base.x.leftCols(K).cwiseAbs().maxCoeff() <= 1e-6);
    }
}

TEST_CASE("constant time variation reproduces the base program bit for bit") {
    const ProblemSpec spec = testing::base_spec();
    const BuildOptions opt = with_k(10);
    CeBuilder b(spec, opt);
    std::vector<Vector> mu(11, spec.market.mu);
    std::vector<Covariance> cov(11, spec.market.cov);
    std::vector<ConstraintSet> th(11, spec.theta_set);
    b.apply_time_varying(mu, cov, th);
    CHECK(b.build().program == build_base(spec, opt).program);
    std::vector<MarketRegime> regimes{{0.0, spec.market.mu, spec.market.cov, std::nullopt}};
    CeBuilder r(spec, opt);
    r.apply_time_varying(regimes);
    CHECK(r.build().program == build_base(spec, opt).program);
    CHECK_THROWS_AS(CeBuilder(spec, opt).apply_time_varying(std::vector<Vector>(3, spec.market.mu),
                                                            std::vector<Covariance>(3, spec.market.cov),
                                                            std::vector<ConstraintSet>(3, spec.theta_set)),
                    std::invalid_argument);
}

TEST_CASE("time variation: a late zero return front-loads consumption") {
    ProblemSpec spec;
    spec.market.mu = Vector::Constant(1, 0.05);
    spec.market.cov = DenseCovariance{Matrix::Zero(1, 1)};
    spec.market.risk_free_index = 0;
    spec.theta_set = ConstraintSet::budget(1);
    spec.horizon = 10.0;
    const BuildOptions opt = with_k(20);
    const Trajectory base = plan(spec, opt);
    CeBuilder b(spec, opt);
    std::vector<Vector> mu(21, spec.market.mu);
    for (int k = 10; k <= 20; ++k) mu[static_cast<std::size_t>(k)] = Vector::Zero(1);
    b.apply_time_varying(mu, std::vector<Covariance>(21, spec.market.cov), std::vector<ConstraintSet>(21, spec.theta_set));
    const BuiltProblem built = b.build();
    const Trajectory tv = b.decode(conic::solve(built.program), built.layout);
    CHECK(tv.c(0) > base.c(0));
}

TEST_CASE("scaling one period's covariance scales its risk epigraph at fixed x") {
    const ProblemSpec spec = testing::base_spec();
    const BuildOptions opt = with_k(4);
    CeBuilder b(spec, opt);
    std::vector<Covariance> cov(5, spec.market.cov);
    cov[2] = DenseCovariance{0.16 * Matrix::Identity(2, 2)};
    b.apply_time_varying(std::vector<Vector>(5, spec.market.mu), cov, std::vector<ConstraintSet>(5, spec.theta_set));
    const CeBuilder base(spec, opt);
    const Vector x = (Vector(2) << 0.3, 0.7).finished();
    CHECK(b.market(2).root.quad(x) == doctest::Approx(4.0 * base.market(2).root.quad(x)));
    CHECK(b.market(1).root.quad(x) == doctest::Approx(base.market(1).root.quad(x)));
}

TEST_CASE("no-op extensions reproduce the base objective") {
    const ProblemSpec spec = testing::base_spec();
    const BuildOptions opt = with_k(50);
    const double base = solve_objective(spec, opt);

    SUBCASE("mortality with p = 0 and s = 1") {
        ProblemSpec s = spec;
        s.extensions.mortality = MortalityModel{{0.0, 10.0}, {0.0, 0.0}, {1.0, 1.0}};
        CHECK(rel_diff(solve_objective(s, opt), base) <= 1e-8);
    }
    SUBCASE("insurance with forced zero premium") {
        ProblemSpec s = spec;
        s.extensions.mortality = MortalityModel{{0.0, 10.0}, {0.0, 0.0}, {1.0, 1.0}};
        s.extensions.insurance = InsuranceModel{SampledCurve::constant(0.5, 0.0, 10.0)};
        BuildOptions o = opt;
        o.force_zero_premium = true;
        CHECK(rel_diff(solve_objective(s, o), base) <= 1e-8);
    }
    SUBCASE("income with y = 0") {
        ProblemSpec rf = testing::risk_free_spec();
        const double rf_base = solve_objective(rf, opt);
        rf.extensions.income = IncomeModel{SampledCurve::constant(0.0, 0.0, 10.0)};
        CHECK(build_program(rf, opt).program == build_base(rf, opt).program);
        CHECK(rel_diff(solve_objective(rf, opt), rf_base) <= 1e-8);
    }
    SUBCASE("Epstein-Zin with rho = gamma") {
        ProblemSpec s = spec;
        s.utility.rho = spec.utility.gamma;
        CHECK(build_program(s, opt).program == build_base(spec, opt).program);
        CHECK(rel_diff(solve_objective(s, opt), base) <= 1e-8);
    }
    SUBCASE("vacuous inexact blocks") {
        ProblemSpec s = spec;
        s.extensions.consumption_floor = SampledCurve::constant(0.0, 0.0, 10.0);
        CHECK(build_program(s, opt).program == build_base(spec, opt).program);
        s.extensions.spending_limit = SpendingLimit{1e6, Vector::Constant(2, 1.0)};
        s.extensions.minimum_cash = MinimumCash{1, SampledCurve::constant(-1e6, 0.0, 10.0), 0.0};
        CHECK(rel_diff(solve_objective(s, opt), base) <= 1e-8);
    }
}

TEST_CASE("mortality: halving survival shifts the plan toward bequest") {
    ProblemSpec spec = testing::base_spec();
    const std::vector<double> grid{0.0, 10.0};
    spec.extensions.mortality = MortalityModel::from_density(grid, {0.05, 0.05}, 0.5);
    const BuildOptions opt = with_k(40);
    const Trajectory a = plan(spec, opt);
    ProblemSpec half = spec;
    half.extensions.mortality = MortalityModel{grid, {0.05, 0.05}, {0.5, 0.25}};
    const Trajectory b = plan(half, opt);
    CHECK(b.c(0) < a.c(0));
    CHECK(a.slack.maxCoeff() <= 1e-6);
    CHECK(b.slack.maxCoeff() <= 1e-6);
}

TEST_CASE("mortality: plan matches the mortality-weighted analytic policy") {
    ProblemSpec spec = testing::base_spec();
    spec.extensions.mortality = MortalityModel::from_density({0.0, 5.0, 10.0}, {0.02, 0.04, 0.06}, 0.6);
    const auto sol = analytic::solve_analytic(spec);
    const Trajectory tr = plan(spec, with_k(400));
    CHECK(std::abs(tr.c(0) / tr.w(0) - sol.consumption_ratio(0.0)) <= 5e-3);
    CHECK(max_abs(tr.theta(0) - sol.theta_ce) <= 5e-3);
}

TEST_CASE("insurance: fair pricing never hurts and cheap cover is bought") {
    ProblemSpec spec = testing::base_spec();
    spec.extensions.mortality = MortalityModel::from_density({0.0, 10.0}, {0.05, 0.05}, 0.5);
    const BuildOptions opt = with_k(40);
    const double without = solve_objective(spec, opt);

    ProblemSpec fair = spec;
    const auto& mort = *spec.extensions.mortality;
    fair.extensions.insurance = InsuranceModel{{mort.grid, {mort.density[0] / mort.survival[0],
                                                             mort.density[1] / mort.survival[1]}}};
    CHECK(solve_objective(fair, opt) >= without * (1.0 - 1e-8));

    ProblemSpec zero = spec;
    zero.extensions.insurance = InsuranceModel{SampledCurve::constant(0.0, 0.0, 10.0)};
    const Trajectory z = plan(zero, opt);
    CHECK(z.premium.cwiseAbs().maxCoeff() <= 1e-6);
    CHECK(rel_diff(z.objective, without) <= 1e-7);

    ProblemSpec rich = spec;
    // Buying cover pays when lambda p u'(w + lambda l) exceeds the marginal value
    // of wealth a_t w^(gamma-1), roughly lambda p > a_0 ~ 5 here.
    rich.extensions.insurance = InsuranceModel{SampledCurve::constant(500.0, 0.0, 10.0)};
    const Trajectory r = plan(rich, opt);
    CHECK(r.premium(0) > 0.0);
    CHECK(r.slack.maxCoeff() <= 1e-6);
    CHECK_THROWS_AS(CeBuilder(spec, opt).apply_insurance(*rich.extensions.insurance), std::invalid_argument);
}

TEST_CASE("income: plan stays feasible with tiny initial wealth and matches the analytic policy") {
    ProblemSpec spec = testing::risk_free_spec();
    spec.extensions.income = IncomeModel{SampledCurve::constant(0.1, 0.0, 10.0)};
    spec.w_init = 1e-3;
    const Trajectory tiny = plan(spec, with_k(50));
    CHECK(tiny.status == conic::SolveStatus::Optimal);
    CHECK(tiny.slack.maxCoeff() <= 1e-6);

    spec.w_init = 1.0;
    const auto sol = analytic::solve_analytic(spec);
    const Trajectory tr = plan(spec, with_k(400));
    const CeBuilder b = make_builder(spec, with_k(400));
    const double total = tr.w(0) + b.human_capital()[0];
    CHECK(std::abs(tr.c(0) / total - sol.consumption_ratio(0.0)) <= 5e-3);
    CHECK(std::abs(tr.x(0, 0) / total - sol.theta_ce(0)) <= 5e-3);

    ProblemSpec bad = testing::base_spec();
    CHECK_THROWS_AS(CeBuilder(bad, with_k(5)).apply_income(*spec.extensions.income), std::invalid_argument);
}

TEST_CASE("income: human capital on the plan grid") {
    ProblemSpec spec = testing::risk_free_spec();
    spec.market.mu(1) = 0.0;
    spec.extensions.income = IncomeModel{SampledCurve::constant(1.0, 0.0, 10.0)};
    const CeBuilder b = make_builder(spec, with_k(10));
    for (int k = 0; k <= 10; ++k) {
        CHECK(b.human_capital()[static_cast<std::size_t>(k)] == doctest::Approx(10.0 - k).epsilon(1e-12));
    }
}

TEST_CASE("Epstein-Zin: riskless consumption follows the discrete Euler equation") {
    // Stationarity of sum_k (h/rho) c_k^rho under w_{k+1} = (1 + h r) w_k - h c_k
    // gives c_{k+1} / c_k = (1 + h r)^(1/(1-rho)) for every rho.
    ProblemSpec spec;
    spec.market.mu = Vector::Constant(1, 0.05);
    spec.market.cov = DenseCovariance{Matrix::Zero(1, 1)};
    spec.market.risk_free_index = 0;
    spec.utility.gamma = 0.5;
    spec.theta_set = ConstraintSet::budget(1);
    spec.horizon = 10.0;
    const BuildOptions opt = with_k(20);
    const double h = 0.5;
    double previous_growth = 0.0;
    for (double rho : {-3.0, -1.0, 0.5, 0.8}) {
        ProblemSpec s = spec;
        s.utility.rho = rho;
        const Trajectory tr = plan(s, opt, precise());
        const double expected = std::pow(1.0 + h * 0.05, 1.0 / (1.0 - rho));
        for (int k = 0; k + 1 < tr.K(); ++k) CHECK(tr.c(k + 1) / tr.c(k) == doctest::Approx(expected).epsilon(1e-6));
        // a larger rho (less curvature) tilts consumption more steeply toward later periods
        CHECK(expected > previous_growth);
        previous_growth = expected;
    }
}

TEST_CASE("Epstein-Zin keeps gamma in the dynamics risk coefficient") {
    ProblemSpec spec = testing::base_spec();
    ProblemSpec a = spec;
    a.utility.rho = -2.0;
    const BuiltProblem pa = build_program(a, with_k(5));
    const BuiltProblem pb = build_base(spec, with_k(5));
    const double h = 2.0;
    const double risk = h * 0.5 * (1.0 - spec.utility.gamma);
    // the dynamics row w_k + ... - h (1 - gamma)/2 s_k - w_{k+1} >= 0 stores +h (1 - gamma)/2 in A
    auto s_coef = [](const BuiltProblem& b, int k) {
        for (const auto& t : b.program.triplets()) {
            if (t.col == b.layout.s[static_cast<std::size_t>(k)] && std::abs(t.value) != 1.0) return t.value;
        }
        return 0.0;
    };
    for (int k = 0; k < 5; ++k) {
        CHECK(s_coef(pa, k) == doctest::Approx(risk));
        CHECK(s_coef(pb, k) == doctest::Approx(risk));
    }
}

TEST_CASE("inexact blocks emit the documented rows") {
    ProblemSpec spec = testing::risk_free_spec();
    spec.extensions.income = IncomeModel{SampledCurve::constant(0.2, 0.0, 10.0)};
    const BuildOptions opt = with_k(20);

    SUBCASE("spending limit c <= 0.7 y") {
        ProblemSpec s = spec;
        s.extensions.spending_limit = SpendingLimit{0.7, Vector()};
        const Trajectory tr = plan(s, opt);
        CHECK(tr.c.maxCoeff() <= 0.7 * 0.2 + 1e-7);
        const Trajectory free = plan(spec, opt);
        CHECK(free.c.maxCoeff() > 0.14);
    }
    SUBCASE("emergency fund") {
        ProblemSpec s = spec;
        s.extensions.minimum_cash = MinimumCash{1, std::nullopt, 0.5};
        const Trajectory tr = plan(s, opt);
        for (int k = 0; k < tr.K(); ++k) CHECK(tr.x(1, k) >= 0.5 * tr.c(k) - 1e-7);
    }
    SUBCASE("minimum consumption") {
        ProblemSpec s = testing::base_spec();
        s.extensions.consumption_floor = SampledCurve::constant(0.09, 0.0, 10.0);
        const Trajectory tr = plan(s, opt);
        CHECK(tr.c.minCoeff() >= 0.09 - 1e-7);
    }
    SUBCASE("max-min consumption") {
        ProblemSpec s = testing::base_spec();
        s.extensions.max_min_consumption = true;
        const Trajectory tr = plan(s, opt);
        REQUIRE(tr.min_consumption);
        CHECK(tr.c.minCoeff() >= *tr.min_consumption - 1e-7);
        CHECK(*tr.min_consumption > 0.0);
    }
    SUBCASE("contradictory blocks are infeasible") {
        ProblemSpec s = spec;
        s.extensions.spending_limit = SpendingLimit{0.1, Vector()};
        s.extensions.consumption_floor = SampledCurve::constant(0.5, 0.0, 10.0);
        CHECK_THROWS_AS(plan(s, opt), PlanError);
    }
}

TEST_CASE("encode and decode round trip") {
    ProblemSpec spec = testing::base_spec();
    spec.extensions.mortality = MortalityModel::from_density({0.0, 10.0}, {0.05, 0.05}, 0.5);
    spec.extensions.insurance = InsuranceModel{SampledCurve::constant(1.5, 0.0, 10.0)};
    spec.extensions.max_min_consumption = true;
    for (const auto mode : {SlackMode::Inequality, SlackMode::ExplicitSlack}) {
        BuildOptions opt = with_k(6);
        opt.slack_mode = mode;
        const CeBuilder b = make_builder(spec, opt);
        const BuiltProblem built = b.build();
        Trajectory tr;
        tr.t.resize(7);
        tr.w = Vector::LinSpaced(7, 1.0, 0.7);
        tr.x = Matrix(2, 7);
        for (int k = 0; k <= 6; ++k) {
            tr.t[static_cast<std::size_t>(k)] = b.time(k);
            tr.x(0, k) = 0.6 * tr.w(k);
            tr.x(1, k) = 0.4 * tr.w(k);
        }
        tr.c = Vector::Constant(6, 0.08);
        tr.premium = Vector::Constant(6, 0.01);
        conic::SolveResult r;
        r.status = conic::SolveStatus::Optimal;
        r.primal = b.encode(tr, built.layout);
        r.objective = built.program.objective_value(r.primal);
        const Trajectory back = b.decode(r, built.layout);
        CHECK(max_abs(back.w - tr.w) == 0.0);
        CHECK((back.x - tr.x).cwiseAbs().maxCoeff() == 0.0);
        CHECK(max_abs(back.c - tr.c) == 0.0);
        CHECK(max_abs(back.premium - tr.premium) == 0.0);
        CHECK(*back.min_consumption == doctest::Approx(0.08));
        CHECK(max_abs(back.slack - back.row_slack) <= 1e-15);
        const Trajectory again = b.decode(conic::SolveResult{r.status, b.encode(back, built.layout), {}, {}, 0.0, {}},
                                          built.layout);
        CHECK(max_abs(again.w - back.w) == 0.0);
        CHECK(max_abs(again.slack - back.slack) == 0.0);
    }
}

TEST_CASE("layout ranges are disjoint and cover every column") {
    ProblemSpec spec = testing::base_spec();
    spec.extensions.mortality = MortalityModel::from_density({0.0, 10.0}, {0.05, 0.05}, 0.5);
    spec.extensions.insurance = InsuranceModel{SampledCurve::constant(1.5, 0.0, 10.0)};
    BuildOptions opt = with_k(5);
    opt.slack_mode = SlackMode::ExplicitSlack;
    const BuiltProblem built = build_program(spec, opt);
    const auto& L = built.layout;
    std::vector<int> seen(L.num_columns, 0);
    auto mark = [&](const Range& r) {
        for (std::size_t i = 0; i < r.count; ++i) ++seen[r[i]];
    };
    for (const Range& r : {L.w, L.x, L.c, L.s, L.tau_c, L.l, L.u}) mark(r);
    for (auto col : L.tau_b) if (col != VariableLayout::kAbsent) ++seen[col];
    if (L.tau_T != VariableLayout::kAbsent) ++seen[L.tau_T];
    CHECK(L.num_columns == built.program.num_variables());
    for (int v : seen) CHECK(v == 1);
}

TEST_CASE("planned returns equal mu plus the risk adjustment") {
    const ProblemSpec spec = testing::base_spec();
    const CeBuilder b = make_builder(spec, with_k(10));
    const BuiltProblem built = b.build();
    const Trajectory tr = b.decode(conic::solve(built.program), built.layout);
    const Matrix r = planned_returns(b, tr, spec.utility.gamma);
    const Matrix sigma = spec.market.dense_covariance();
    for (int k = 0; k < 10; ++k) {
        const Vector expected = spec.market.mu + 0.5 * (spec.utility.gamma - 1.0) * sigma * tr.x.col(k) / tr.w(k);
        CHECK(max_abs(r.col(k) - expected) <= 1e-12);
    }
}

TEST_CASE("factor and dense covariance give the same objective") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> nd;
    const int n = 8;
    FactorCovariance f;
    f.loadings = 0.1 * Matrix::NullaryExpr(n, 2, [&] { return nd(rng); });
    f.factor_cov = Matrix::Identity(2, 2);
    f.idio_var = Vector::Constant(n, 0.02);
    ProblemSpec spec;
    spec.market.mu = Vector::NullaryExpr(n, [&] { return 0.05 + 0.02 * nd(rng); });
    spec.market.cov = f;
    spec.theta_set = ConstraintSet::budget(n);
    spec.horizon = 5.0;
    ProblemSpec dense = spec;
    dense.market.cov = DenseCovariance{spec.market.dense_covariance()};
    const double a = solve_objective(spec, with_k(20));
    const double b = solve_objective(dense, with_k(20));
    CHECK(rel_diff(a, b) <= 1e-6);
}

TEST_CASE("solver residuals verify on the base and extended programs") {
    std::vector<ProblemSpec> specs{testing::base_spec()};
    ProblemSpec m = testing::base_spec();
    m.extensions.mortality = MortalityModel::from_density({0.0, 10.0}, {0.05, 0.05}, 0.5);
    m.extensions.insurance = InsuranceModel{SampledCurve::constant(1.5, 0.0, 10.0)};
    specs.push_back(m);
    ProblemSpec inc = testing::risk_free_spec();
    inc.extensions.income = IncomeModel{SampledCurve::constant(0.1, 0.0, 10.0)};
    inc.utility.rho = 0.3;
    specs.push_back(inc);
    for (const auto& spec : specs) {
        const BuiltProblem built = build_program(spec, with_k(30));
        const auto r = conic::solve(built.program);
        REQUIRE(r.status == conic::SolveStatus::Optimal);
        const auto rep = conic::verify(built.program, r);
        REQUIRE(rep);
        CHECK(rep->worst() <= 1e-6);
    }
}

TEST_CASE("trajectory CSV has one row per grid point") {
    const Trajectory tr = plan(testing::base_spec(), with_k(4));
    std::ostringstream out;
    write_trajectory_csv(out, tr);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "k,t,w,c,theta_1,theta_2,slack");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 5);
}

TEST_CASE("long-only factor universe solves to an optimum (tower fallback)") {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> nd;
    const int n = 200;
    const int f = 25;
    FactorCovariance fc;
    fc.loadings = 0.15 * Matrix::NullaryExpr(n, f, [&] { return nd(rng); });
    fc.factor_cov = 0.04 * Matrix::Identity(f, f);
    fc.idio_var = Vector::Constant(n, 0.02);
    ProblemSpec spec;
    spec.market.mu = (0.03 + (fc.loadings * Vector::Constant(f, 0.01)).array()).matrix() +
                     Vector::NullaryExpr(n, [&] { return 0.002 * nd(rng); });
    spec.market.cov = fc;
    spec.theta_set = ConstraintSet::budget(n);
    for (int i = 0; i < n; ++i) {
        Vector g = Vector::Zero(n);
        g(i) = -1.0;
        spec.theta_set.ineq.push_back({g, 0.0});
    }
    spec.horizon = 10.0;
    const BuiltProblem built = build_program(spec, with_k(50));
    const auto r = conic::solve(built.program);
    REQUIRE(r.status == conic::SolveStatus::Optimal);
    MESSAGE("tower fallback used: " << r.stats.tower_fallback);
    const auto rep = conic::verify(built.program, r);
    REQUIRE(rep);
    CHECK(rep->primal <= 1e-6);

    conic::SolverSettings native;
    native.tower_fallback = false;
    const auto nr = conic::solve(built.program, native);
    CHECK_FALSE(nr.stats.tower_fallback);
    if (nr.status == conic::SolveStatus::Optimal) {
        CHECK(r.objective == doctest::Approx(nr.objective).epsilon(1e-6));
    }
}
