#include "merton/simulator/simulator.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace merton;
using namespace merton::sim;

namespace {

ProblemSpec riskless_spec(double r, double T) {
    ProblemSpec s;
    s.market.mu = Vector::Constant(1, r);
    s.market.cov = DenseCovariance{Matrix::Zero(1, 1)};
    s.market.risk_free_index = 0;
    s.utility.gamma = 0.5;
    s.theta_set = ConstraintSet::budget(1);
    s.horizon = T;
    return s;
}

FunctionPolicy fixed_policy(const Vector& theta, double kappa) {
    return FunctionPolicy(
        [theta, kappa](double, double w) {
            Action a;
            a.consumption = kappa * w;
            a.theta = theta;
            return a;
        },
        true);
}

SimOptions options(double h, Scheme scheme = Scheme::EulerMaruyama) {
    SimOptions o;
    o.h_sim = h;
    o.scheme = scheme;
    return o;
}

}  // namespace

TEST_CASE("riskless proportional consumption: exact scheme is exact, Euler converges") {
    const ProblemSpec spec = riskless_spec(0.05, 4.0);
    auto policy = fixed_policy(Vector::Ones(1), 0.1);
    const double expected = std::exp((0.05 - 0.1) * 4.0);
    const SimPath exact = simulate_path(policy, spec, options(0.01, Scheme::ExactLognormal), 1);
    CHECK(exact.w.back() == doctest::Approx(expected).epsilon(1e-12));
    double previous = 1.0;
    for (double h : {0.1, 0.05, 0.025}) {
        const SimPath p = simulate_path(policy, spec, options(h), 1);
        const double err = std::abs(p.w.back() - expected);
        CHECK(err < previous);
        if (previous < 1.0) CHECK(err / previous == doctest::Approx(0.5).epsilon(0.05));
        previous = err;
    }
}

TEST_CASE("a fixed seed reproduces the path bit for bit") {
    const ProblemSpec spec = testing::base_spec();
    auto policy = fixed_policy((Vector(2) << 0.6, 0.4).finished(), 0.05);
    const SimPath a = simulate_path(policy, spec, options(0.01), 123);
    const SimPath b = simulate_path(policy, spec, options(0.01), 123);
    CHECK(a.w == b.w);
    CHECK(a.c == b.c);
    CHECK(a.utility == b.utility);
    const SimPath c = simulate_path(policy, spec, options(0.01), 124);
    CHECK(a.w != c.w);
}

TEST_CASE("random stream is the documented algorithm") {
    std::mt19937_64 engine(7);
    Rng rng(7);
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    CHECK(rng.uniform() == u);
    CHECK(path_seed(0, 0) != path_seed(0, 1));
    CHECK(path_seed(1, 0) != path_seed(0, 0));
    // SplitMix64 reference output for state 0x9e3779b97f4a7c15
    CHECK(path_seed(0, 0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("normals have unit variance and zero mean") {
    Rng rng(99);
    double s = 0.0;
    double s2 = 0.0;
    const int N = 200000;
    for (int i = 0; i < N; ++i) {
        const double z = rng.normal();
        s += z;
        s2 += z * z;
    }
    CHECK(std::abs(s / N) <= 4.0 / std::sqrt(N));
    CHECK(std::abs(s2 / N - 1.0) <= 4.0 * std::sqrt(2.0 / N));
}

TEST_CASE("Monte Carlo results do not depend on the thread count") {
    const ProblemSpec spec = testing::base_spec();
    const AnalyticPolicy policy(analytic::solve_analytic(spec));
    SimOptions one = options(0.05);
    one.threads = 1;
    SimOptions four = one;
    four.threads = 4;
    const auto a = monte_carlo(policy, spec, 200, one, 5);
    const auto b = monte_carlo(policy, spec, 200, four, 5);
    CHECK(a.utilities == b.utilities);
    CHECK(a.mean == b.mean);
    CHECK(*a.std_error == *b.std_error);
}

TEST_CASE("antithetic pairs remove the sampling error of the mean log wealth") {
    const ProblemSpec spec = testing::base_spec();
    const Vector theta = (Vector(2) << 0.7, 0.3).finished();
    const auto policy = fixed_policy(theta, 0.0);
    const double var = theta.squaredNorm() * 0.04;
    const double exact = (spec.market.mu.dot(theta) - 0.5 * var) * spec.horizon;
    double plain_err = 0.0;
    double anti_err = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        SimOptions o = options(0.1, Scheme::ExactLognormal);
        plain_err += std::abs(monte_carlo(policy, spec, 2000, o, seed).mean_log_terminal - exact);
        o.antithetic = true;
        anti_err += std::abs(monte_carlo(policy, spec, 2000, o, seed).mean_log_terminal - exact);
    }
    CHECK(anti_err <= 0.5 * plain_err);
    CHECK(anti_err <= 1e-10);
}

TEST_CASE("realized utility examples") {
    SimPath p;
    p.t = {0.0, 1.0, 2.0, 3.0, 4.0};
    p.c = {1.0, 1.0, 1.0, 1.0};
    p.estate = 1.0;
    UtilityParams u;
    u.gamma = 0.5;
    u.beta = 0.0;
    CHECK(realized_utility(p, u) == doctest::Approx(8.0));
    SimPath q;
    q.t = {0.0};
    q.estate = 1.0;
    u.beta = 3.0;
    CHECK(realized_utility(q, u) == doctest::Approx(6.0));
    u.gamma = -1.0;
    q.ruined = true;
    CHECK(realized_utility(q, u, -42.0) == -42.0);
    u.gamma = 0.5;
    p.ruined = true;
    CHECK(realized_utility(p, u) == doctest::Approx(8.0));
}

TEST_CASE("analytic policy in a riskless market realizes V_0 to O(h)") {
    const ProblemSpec spec = riskless_spec(0.03, 5.0);
    const auto sol = analytic::solve_analytic(spec);
    AnalyticPolicy policy(sol);
    const double v0 = sol.value(0.0, 1.0);
    const double e1 = std::abs(simulate_path(policy, spec, options(0.02), 1).utility - v0);
    const double e2 = std::abs(simulate_path(policy, spec, options(0.01), 1).utility - v0);
    CHECK(e1 <= 1e-2 * v0);
    CHECK(e2 / e1 == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("analytic policy: Monte Carlo mean utility matches the value function") {
    const ProblemSpec spec = testing::base_spec();
    const auto sol = analytic::solve_analytic(spec);
    const AnalyticPolicy policy(sol);
    const auto r = monte_carlo(policy, spec, 20000, options(1.0 / 50.0), 2024);
    REQUIRE(r.std_error);
    CHECK(std::abs(r.mean - sol.value(0.0, spec.w_init)) <= 3.0 * *r.std_error);
    CHECK(r.ruin_rate == 0.0);

    // an equal-weight portfolio with 1/(T - t + 1) consumption does worse
    const FunctionPolicy naive(
        [T = spec.horizon](double t, double w) {
            Action a;
            a.consumption = w / (T - t + 1.0);
            a.theta = Vector::Constant(2, 0.5);
            return a;
        },
        false);
    const auto worse = monte_carlo(naive, spec, 20000, options(1.0 / 50.0), 2024);
    const double joint = std::sqrt(*r.std_error * *r.std_error + *worse.std_error * *worse.std_error);
    CHECK(worse.mean <= r.mean - 2.0 * joint);
}

TEST_CASE("analytic policy under mortality matches the mortality-weighted value") {
    ProblemSpec spec = testing::base_spec();
    spec.extensions.mortality = MortalityModel::from_density({0.0, 5.0, 10.0}, {0.02, 0.04, 0.06}, 0.6);
    const auto sol = analytic::solve_analytic(spec);
    const AnalyticPolicy policy(sol);
    const auto r = monte_carlo(policy, spec, 20000, options(1.0 / 50.0), 77);
    CHECK(std::abs(r.mean - sol.value(0.0, spec.w_init)) <= 3.0 * *r.std_error);
    CHECK(r.death_rate == doctest::Approx(0.4).epsilon(0.05));
}

TEST_CASE("a single path has no standard error; zero paths are rejected") {
    const ProblemSpec spec = testing::base_spec();
    const auto policy = fixed_policy(Vector::Constant(2, 0.5), 0.05);
    CHECK_FALSE(monte_carlo(policy, spec, 1, options(0.1), 1).std_error);
    CHECK_THROWS_AS(monte_carlo(policy, spec, 0, options(0.1), 1), std::invalid_argument);
}

TEST_CASE("exact scheme rejects non-proportional policies and income") {
    ProblemSpec spec = testing::base_spec();
    FunctionPolicy additive([](double, double) { return Action{0.01, Vector::Constant(2, 0.5), 0.0}; }, false);
    CHECK_THROWS_AS(simulate_path(additive, spec, options(0.1, Scheme::ExactLognormal), 1), std::invalid_argument);
    ProblemSpec inc = testing::risk_free_spec();
    inc.extensions.income = IncomeModel{SampledCurve::constant(0.1, 0.0, 10.0)};
    auto prop = fixed_policy(Vector::Constant(2, 0.5), 0.05);
    CHECK_THROWS_AS(simulate_path(prop, inc, options(0.1, Scheme::ExactLognormal), 1), std::invalid_argument);
    CHECK(parse_scheme("exact") == Scheme::ExactLognormal);
    CHECK_THROWS_AS(parse_scheme("milstein"), std::invalid_argument);
}

TEST_CASE("sample_death examples") {
    const MortalityModel never{{0.0, 10.0}, {0.0, 0.0}, {1.0, 1.0}};
    for (std::uint64_t s = 0; s < 100; ++s) CHECK_FALSE(sample_death(never, s));

    const MortalityModel point{{0.0, 5.0, 5.0, 10.0}, {0.0, 0.0, 0.0, 0.0}, {1.0, 1.0, 0.0, 0.0}};
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto d = sample_death(point, s);
        REQUIRE(d);
        CHECK(*d == 5.0);
    }
}

TEST_CASE("sample_death: uniform density passes the DKW band") {
    const double T = 10.0;
    const MortalityModel uniform = MortalityModel::from_density({0.0, T}, {1.0 / T, 1.0 / T}, 0.0);
    const std::size_t N = 1000000;
    std::vector<double> draws(N);
    for (std::size_t i = 0; i < N; ++i) {
        draws[i] = sample_death(uniform, path_seed(3, i)).value_or(-1.0);
    }
    std::sort(draws.begin(), draws.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double F = draws[i] / T;
        ks = std::max({ks, std::abs(F - static_cast<double>(i) / N), std::abs(F - static_cast<double>(i + 1) / N)});
    }
    // P(sup |F_N - F| > eps) <= 2 exp(-2 N eps^2) = 1e-6
    const double eps = std::sqrt(std::log(2.0 / 1e-6) / (2.0 * N));
    CHECK(ks <= eps);
}

TEST_CASE("martingale check: expected wealth grows at mu'theta with no consumption") {
    const ProblemSpec spec = testing::base_spec();
    const Vector theta = (Vector(2) << 0.5, 0.5).finished();
    const auto policy = fixed_policy(theta, 0.0);
    const double expected = std::exp(spec.market.mu.dot(theta) * spec.horizon);
    for (const Scheme scheme : {Scheme::ExactLognormal, Scheme::EulerMaruyama}) {
        SimOptions o = options(scheme == Scheme::ExactLognormal ? 1.0 : 1.0 / 250.0, scheme);
        const std::size_t N = scheme == Scheme::ExactLognormal ? 100000 : 20000;
        const auto r = monte_carlo(policy, spec, N, o, 11);
        // standard error of the terminal mean from the lognormal variance
        const double var = theta.squaredNorm() * 0.04;
        const double sd = expected * std::sqrt(std::expm1(var * spec.horizon));
        CHECK(std::abs(r.mean_terminal - expected) <= 3.0 * sd / std::sqrt(static_cast<double>(N)));
    }
}

TEST_CASE("Euler weak error in mean log wealth shrinks with the step") {
    ProblemSpec spec = testing::base_spec();
    spec.market.cov = DenseCovariance{0.25 * Matrix::Identity(2, 2)};
    spec.horizon = 1.0;
    const Vector theta = (Vector(2) << 1.0, 0.0).finished();
    const auto policy = fixed_policy(theta, 0.0);
    const double exact = (0.10 - 0.5 * 0.25) * spec.horizon;
    const auto coarse = monte_carlo(policy, spec, 1000000, options(0.25), 8);
    const auto fine = monte_carlo(policy, spec, 1000000, options(0.125), 9);
    CHECK(std::abs(fine.mean_log_terminal - exact) < std::abs(coarse.mean_log_terminal - exact));
}

TEST_CASE("Euler ruin is flagged and floored for negative exponents") {
    ProblemSpec spec = testing::base_spec();
    spec.utility.gamma = -1.0;
    spec.market.cov = DenseCovariance{Matrix::Identity(2, 2)};
    const auto policy = fixed_policy((Vector(2) << 4.0, -3.0).finished(), 0.05);
    SimOptions o = options(0.5);
    o.ruin_utility = -777.0;
    const auto r = monte_carlo(policy, spec, 500, o, 1);
    CHECK(r.ruin_rate > 0.0);
    CHECK(std::count(r.utilities.begin(), r.utilities.end(), -777.0) >=
          static_cast<long>(r.ruin_rate * 500.0 + 0.5));
}

TEST_CASE("paths export as CSV") {
    const ProblemSpec spec = testing::base_spec();
    const auto policy = fixed_policy(Vector::Constant(2, 0.5), 0.05);
    SimOptions o = options(2.5);
    o.record_paths = 2;
    const auto r = monte_carlo(policy, spec, 3, o, 1);
    REQUIRE(r.paths.size() == 2);
    std::ostringstream out;
    write_paths_csv(out, r.paths);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "path_id,t,w,c,theta_1,theta_2");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 2 * 5);
}
