#include "merton/analytic/analytic.hpp"
#include "merton/builder/human_capital.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace merton;
using namespace merton::analytic;

namespace {

// RK4 on -a' = (1-g) a^{g/(g-1)} + g r a, backward from a_T = beta.
double rk4_oracle(double t, double r, double g, double beta, double T, double step) {
    auto f = [&](double a) { return -((1.0 - g) * std::pow(a, g / (g - 1.0)) + g * r * a); };
    const auto n = static_cast<long>(std::llround((T - t) / step));
    const double h = (T - t) / static_cast<double>(n);
    double a = beta;
    for (long i = 0; i < n; ++i) {
        const double k1 = f(a);
        const double k2 = f(a - 0.5 * h * k1);
        const double k3 = f(a - 0.5 * h * k2);
        const double k4 = f(a - h * k3);
        a -= h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return a;
}

}  // namespace

TEST_CASE("Markowitz on the base market") {
    const auto spec = testing::base_spec();
    const auto r = solve_markowitz(spec.market, spec.theta_set, 0.5);
    CHECK(std::abs(r.theta(0) - 2.5) <= 1e-6);
    CHECK(std::abs(r.theta(1) + 1.5) <= 1e-6);
    CHECK(std::abs(r.r_ce - 0.135) <= 1e-9);

    // dense grid search over the budget line
    double best = -1e300, arg = 0.0;
    for (int i = -5000; i <= 5000; ++i) {
        const double t1 = 1e-3 * i;
        Vector th(2);
        th << t1, 1.0 - t1;
        const double v = markowitz_objective(spec.market, th, 0.5);
        if (v > best) {
            best = v;
            arg = t1;
        }
    }
    CHECK(std::abs(arg - r.theta(0)) <= 1e-3);
    CHECK(best <= r.r_ce + 1e-12);
}

TEST_CASE("Markowitz: single feasible point") {
    MarketModel m{Vector::Constant(1, 0.07), DenseCovariance{Matrix::Constant(1, 1, 0.09)}, std::nullopt};
    const auto r = solve_markowitz(m, ConstraintSet::budget(1), -2.0);
    CHECK(std::abs(r.theta(0) - 1.0) <= 1e-9);
    CHECK(std::abs(r.r_ce - (0.07 - 1.5 * 0.09)) <= 1e-9);
}

TEST_CASE("Markowitz: zero means give the minimum-variance portfolio") {
    Matrix sigma(3, 3);
    sigma << 0.04, 0.01, 0.0, 0.01, 0.09, 0.02, 0.0, 0.02, 0.16;
    MarketModel m{Vector::Zero(3), DenseCovariance{sigma}, std::nullopt};
    const auto r = solve_markowitz(m, {}, 0.3);
    const Vector si1 = sigma.ldlt().solve(Vector::Ones(3));
    const Vector mv = si1 / si1.sum();
    CHECK((r.theta - mv).cwiseAbs().maxCoeff() <= 1e-6);
    CHECK(r.r_ce < 0.0);
}

TEST_CASE("Markowitz matches the KKT closed form on random instances") {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 10;
        const Matrix a = Matrix::NullaryExpr(n, n, [&] { return 0.2 * g(rng); });
        const Matrix sigma = a * a.transpose() + 0.01 * Matrix::Identity(n, n);
        const Vector mu = Vector::NullaryExpr(n, [&] { return 0.02 + 0.1 * u(rng); });
        double gamma = -3.0 + 3.9 * u(rng);
        if (std::abs(gamma) < 1e-3) gamma = 0.1;
        MarketModel m{mu, DenseCovariance{sigma}, std::nullopt};
        const auto r = solve_markowitz(m, ConstraintSet::budget(n), gamma);
        worst = std::max(worst, (r.theta - testing::kkt_budget(mu, sigma, gamma)).cwiseAbs().maxCoeff());
    }
    MESSAGE("max |theta - theta_kkt| = " << worst);
    CHECK(worst <= 1e-6);
}

TEST_CASE("Markowitz output is feasible and beats random feasible points") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    const int n = 4;
    Matrix a = Matrix::NullaryExpr(n, n, [&] { return 0.2 * g(rng); });
    const Matrix sigma = a * a.transpose() + 0.02 * Matrix::Identity(n, n);
    Vector mu(n);
    mu << 0.08, 0.05, 0.11, 0.03;
    MarketModel m{mu, DenseCovariance{sigma}, std::nullopt};
    // long-only with a cap of 0.6 per asset
    ConstraintSet theta;
    for (int i = 0; i < n; ++i) {
        Vector e = Vector::Zero(n);
        e(i) = -1.0;
        theta.ineq.push_back({e, 0.0});
        e(i) = 1.0;
        theta.ineq.push_back({e, 0.6});
    }
    const auto r = solve_markowitz(m, theta, -1.0);
    CHECK(theta.with_budget(n).max_violation(r.theta) <= 1e-8);
    CHECK(std::abs(r.r_ce - markowitz_objective(m, r.theta, -1.0)) <= 1e-12);

    std::gamma_distribution<double> expo(1.0, 1.0);
    int checked = 0;
    while (checked < 10000) {
        Vector th = Vector::NullaryExpr(n, [&] { return expo(rng); });
        th /= th.sum();
        if (th.maxCoeff() > 0.6) continue;
        ++checked;
        CHECK(markowitz_objective(m, th, -1.0) <= r.r_ce + 1e-9);
    }
}

TEST_CASE("a_coefficient: terminal value and limit branch") {
    CHECK(a_coefficient(10.0, 0.135, 0.5, 1.0, 10.0) == 1.0);
    CHECK(a_coefficient(7.0, 0.1, -2.0, 3.7, 7.0) == 3.7);
    CHECK(a_coefficient(7.0, 0.0, 0.5, 1.0, 10.0) == doctest::Approx(2.0).epsilon(1e-15));
    // the closed form is continuous through r_ce = 0
    for (double r : {1e-8, -1e-8}) {
        CHECK(std::abs(a_coefficient(7.0, r, 0.5, 1.0, 10.0) - 2.0) <= 1e-7);
    }
}

TEST_CASE("a_coefficient agrees with an RK4 integration of the coefficient equation") {
    const double closed = a_coefficient(0.0, 0.135, 0.5, 1.0, 10.0);
    const double ode = rk4_oracle(0.0, 0.135, 0.5, 1.0, 10.0, 1e-4);
    MESSAGE("a_0 closed=" << closed << " rk4=" << ode);
    CHECK(std::abs(closed - ode) <= 1e-6 * std::abs(ode));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        const double g = u(rng) < 0.5 ? -3.0 + 2.9 * u(rng) : 0.05 + 0.85 * u(rng);
        const double beta = 0.1 + 9.9 * u(rng);
        const double r = -0.2 + 0.5 * u(rng);
        const double T = 1.0 + 19.0 * u(rng);
        const double c = a_coefficient(0.0, r, g, beta, T);
        const double o = rk4_oracle(0.0, r, g, beta, T, 1e-3);
        CHECK(std::abs(c - o) <= 1e-6 * std::abs(o));
    }
}

TEST_CASE("a_t stays positive across the parameter envelope") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        double g = -3.0 + 3.9 * u(rng);
        if (g == 0.0) continue;
        const double beta = 0.1 + 9.9 * u(rng);
        const double r = -0.2 + 0.5 * u(rng);
        const double T = 50.0 * u(rng) + 1e-3;
        for (double frac : {0.0, 0.3, 0.9, 1.0}) {
            const double a = a_coefficient(frac * T, r, g, beta, T);
            CHECK(a > 0.0);
            CHECK(std::isfinite(a));
        }
    }
}

TEST_CASE("value function and policy") {
    auto spec = testing::base_spec();
    const auto sol = solve_analytic(spec);
    CHECK(value_function(sol, 3.0, 1.0) == doctest::Approx(sol.a(3.0) / 0.5));
    CHECK(value_function(sol, 3.0, 4.0) == doctest::Approx(2.0 * value_function(sol, 3.0, 1.0)));
    CHECK(value_function(sol, 10.0, 2.0) == doctest::Approx(std::pow(2.0, 0.5) / 0.5));
    CHECK_THROWS_AS(value_function(sol, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(analytic_policy(sol, 1.0, -1.0), std::invalid_argument);

    const auto p1 = analytic_policy(sol, 2.0, 1.0);
    for (double lam : {0.01, 2.0, 100.0}) {
        const auto p = analytic_policy(sol, 2.0, lam);
        CHECK(p.consumption == doctest::Approx(lam * p1.consumption).epsilon(1e-14));
        CHECK(p.theta == p1.theta);
    }
    CHECK(analytic_policy(sol, 10.0 - 1e-12, 1.0).consumption == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(p1.consumption > 0.0);
}

TEST_CASE("riskless limit: consume evenly over the remaining horizon plus one bequest unit") {
    AnalyticSolution sol;
    sol.theta_ce = Vector::Ones(1);
    sol.r_ce = 0.0;
    sol.gamma = -1.5;
    sol.beta = 1.0;
    sol.T = 10.0;
    for (double t : {0.0, 4.0, 9.5}) {
        CHECK(analytic_policy(sol, t, 2.0).consumption == doctest::Approx(2.0 / (1.0 + 10.0 - t)).epsilon(1e-14));
    }
}

TEST_CASE("HJB residual") {
    const auto grid = uniform_grid(1e-4, 10.0 - 1e-4, 99998);
    const auto sol = solve_analytic(testing::base_spec());
    const double res = hjb_ode_residual(sol, grid);
    MESSAGE("base residual " << res);
    CHECK(res <= 1e-5);

    AnalyticSolution lim = sol;
    lim.r_ce = 0.0;
    CHECK(hjb_ode_residual(lim, grid) <= 1e-5);

    // constant candidate is rejected
    const double a = 2.0, g = 0.5, r = 0.1;
    const double expected = std::abs(g * a * r + (1 - g) * std::pow(a, g / (g - 1)));
    CHECK(hjb_ode_residual([a](double) { return a; }, r, g, grid) == doctest::Approx(expected));
}

TEST_CASE("coefficient ODE with unit weights reproduces the closed form") {
    CoefficientOde ode;
    ode.gamma = -2.0;
    ode.r_ce = 0.06;
    ode.horizon = 20.0;
    ode.terminal = 3.0;
    ode.consumption_weight = [](double) { return 1.0; };
    const auto curve = CoefficientCurve::integrate(ode, 1e-3);
    for (double t : {0.0, 5.5, 19.0}) {
        const double closed = a_coefficient(t, 0.06, -2.0, 3.0, 20.0);
        CHECK(std::abs(curve(t) - closed) <= 1e-6 * closed);
        CHECK(curve.consumption_ratio(t) == doctest::Approx(std::pow(closed, 1.0 / (-3.0))).epsilon(1e-6));
    }
}

TEST_CASE("mortality solution: survival acts as a consumption discount") {
    auto spec = testing::base_spec();
    std::vector<double> t, p;
    for (int i = 0; i <= 100; ++i) {
        t.push_back(0.1 * i);
        p.push_back(0.05);
    }
    spec.extensions.mortality = MortalityModel::from_density(t, p, 0.5);
    const auto sol = solve_analytic(spec);
    REQUIRE(sol.curve);
    CHECK(sol.a(10.0) == doctest::Approx(0.5));
    // compare with an independent fine RK4 on the same equation at t = 0
    const double g = 0.5, r = sol.r_ce;
    auto f = [&](double tt, double a) {
        const double s = 1.0 - 0.05 * tt;
        return -((1 - g) * std::pow(a, g / (g - 1)) * std::pow(s, 1 / (1 - g)) + g * r * a + 0.05);
    };
    double a = 0.5;
    const double h = 1e-4;
    for (int i = 100000; i > 0; --i) {
        const double tt = h * i;
        const double k1 = f(tt, a), k2 = f(tt - h / 2, a - h / 2 * k1), k3 = f(tt - h / 2, a - h / 2 * k2),
                     k4 = f(tt - h, a - h * k3);
        a -= h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    CHECK(std::abs(sol.a(0.0) - a) <= 1e-8 * a);
}

TEST_CASE("human capital") {
    auto grid = uniform_grid(0.0, 10.0, 10000);
    IncomeModel one{SampledCurve::constant(1.0, 0.0, 10.0)};
    const auto v0 = builder::human_capital(one, 0.0, grid);
    CHECK(v0[5000] == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(v0.back() == 0.0);
    const auto v = builder::human_capital(one, 0.05, grid);
    CHECK(std::abs(v[0] - (1.0 - std::exp(-0.5)) / 0.05) <= 1e-6);
    IncomeModel none{SampledCurve::constant(0.0, 0.0, 10.0)};
    for (double x : builder::human_capital(none, 0.05, grid)) CHECK(x == 0.0);
}

TEST_CASE("income solution invests total wealth") {
    auto spec = testing::risk_free_spec();
    spec.extensions.income = IncomeModel{SampledCurve::constant(0.2, 0.0, 10.0)};
    const auto sol = solve_analytic(spec);
    const double v0 = (*sol.human_capital)(0.0);
    CHECK(v0 == doctest::Approx((1.0 - std::exp(-0.2)) / 0.02 * 0.2).epsilon(1e-6));
    const auto act = sol.policy(0.0, 1.0);
    CHECK(act.theta.sum() == doctest::Approx(1.0));
    CHECK(act.theta(0) == doctest::Approx((1.0 + v0) * sol.theta_ce(0)));
    CHECK(act.consumption == doctest::Approx(sol.consumption_ratio(0.0) * (1.0 + v0)));
}
