#include "merton/core/validate.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace merton;

namespace {

bool has_code(const std::vector<Violation>& v, const std::string& code) {
    return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.code == code; });
}

bool has_message(const std::vector<Violation>& v, const std::string& msg) {
    return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.message == msg; });
}

}  // namespace

TEST_CASE("well-formed base spec validates cleanly") {
    CHECK(validate(testing::base_spec()).empty());
    CHECK(validate(testing::risk_free_spec()).empty());
    CHECK_NOTHROW(require_valid(testing::base_spec()));
}

TEST_CASE("gamma = 0 is rejected") {
    auto s = testing::base_spec();
    s.utility.gamma = 0.0;
    const auto v = validate(s);
    CHECK(has_code(v, "gamma_zero"));
    CHECK(has_message(v, "gamma must be nonzero"));
    CHECK_THROWS_AS(require_valid(s), ValidationError);
}

TEST_CASE("covariance with a negative eigenvalue is rejected") {
    auto s = testing::base_spec();
    Matrix sigma(2, 2);
    sigma << 0.04, 0.0, 0.0, -1e-3;
    s.market.cov = DenseCovariance{sigma};
    const auto v = validate(s);
    CHECK(has_code(v, "cov_not_psd"));
    CHECK(has_message(v, "covariance not PSD"));
}

TEST_CASE("utility and scalar domains") {
    auto s = testing::base_spec();
    s.utility.gamma = 1.0;
    s.utility.beta = 0.0;
    s.utility.rho = 0.0;
    s.horizon = -1.0;
    s.w_init = 0.0;
    const auto v = validate(s);
    for (const char* code : {"gamma_too_large", "beta_nonpositive", "rho_zero", "horizon_nonpositive", "w_init_nonpositive"}) {
        CHECK_MESSAGE(has_code(v, code), code);
    }
}

TEST_CASE("empty constraint set is detected by a feasibility solve") {
    auto s = testing::base_spec();
    Vector g(2);
    g << 1.0, 0.0;
    s.theta_set.ineq.push_back({g, -1.0});   // theta_1 <= -1
    s.theta_set.ineq.push_back({-g, -1.0});  // theta_1 >= 1
    CHECK(has_code(validate(s), "theta_infeasible"));
}

TEST_CASE("income needs a risk-free asset and the simple budget set") {
    auto s = testing::base_spec();
    s.extensions.income = IncomeModel{SampledCurve::constant(0.1, 0.0, 10.0)};
    CHECK(has_code(validate(s), "income_requires_risk_free"));
    auto r = testing::risk_free_spec();
    r.extensions.income = IncomeModel{SampledCurve::constant(0.1, 0.0, 10.0)};
    CHECK(validate(r).empty());
    Vector g(2);
    g << 1.0, 0.0;
    r.theta_set.ineq.push_back({g, 1.0});
    CHECK(has_code(validate(r), "income_requires_budget_set"));
}

TEST_CASE("insurance needs mortality") {
    auto s = testing::base_spec();
    s.extensions.insurance = InsuranceModel{SampledCurve::constant(1.0, 0.0, 10.0)};
    CHECK(has_code(validate(s), "insurance_requires_mortality"));
}

TEST_CASE("mortality consistency") {
    auto s = testing::base_spec();
    std::vector<double> t, p;
    for (int i = 0; i <= 10; ++i) {
        t.push_back(i);
        p.push_back(0.05);
    }
    auto m = MortalityModel::from_density(t, p, 0.5);
    s.extensions.mortality = m;
    CHECK(validate(s).empty());
    m.survival[3] += 1e-6;
    s.extensions.mortality = m;
    CHECK(has_code(validate(s), "mortality_inconsistent"));
    m = MortalityModel::from_density(t, p, 0.6);  // s_0 = 1.1
    s.extensions.mortality = m;
    const auto v = validate(s);
    CHECK(has_code(v, "survival_start"));
    CHECK(has_code(v, "survival_range"));
}

TEST_CASE("risk-free asset must be riskless") {
    auto s = testing::base_spec();
    s.market.risk_free_index = 0;
    CHECK(has_code(validate(s), "risk_free_has_variance"));
    s.market.risk_free_index = 5;
    CHECK(has_code(validate(s), "risk_free_index"));
}

TEST_CASE("factor model invariants") {
    auto s = testing::base_spec();
    FactorCovariance f{Matrix::Ones(2, 1), Matrix::Constant(1, 1, 0.01), Vector::Constant(2, 0.04)};
    s.market.cov = f;
    CHECK(validate(s).empty());
    f.idio_var(1) = 0.0;
    s.market.cov = f;
    CHECK(has_code(validate(s), "idio_zero"));
    f.idio_var(1) = -0.01;
    s.market.cov = f;
    CHECK(has_code(validate(s), "idio_negative"));
}

TEST_CASE("validate is total over malformed specs") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, 11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 300; ++trial) {
        auto s = testing::base_spec();
        for (int k = 0; k < 3; ++k) {
            switch (pick(rng)) {
                case 0: s.market.mu = Vector::Constant(1 + trial % 4, u(rng)); break;
                case 1: s.market.cov = DenseCovariance{Matrix::Constant(trial % 3, 1 + trial % 2, u(rng))}; break;
                case 2: s.market.cov = FactorCovariance{Matrix::Ones(trial % 3, 2), Matrix::Identity(1, 1), Vector()}; break;
                case 3: s.utility.gamma = std::nan(""); break;
                case 4: s.theta_set.eq.push_back({Vector::Ones(3), 1.0}); break;
                case 5: s.theta_set.socs.push_back({Matrix::Zero(0, 2), Vector::Zero(2), 0.0}); break;
                case 6: s.extensions.mortality = MortalityModel{{0.0}, {}, {1.0}}; break;
                case 7: s.extensions.income = IncomeModel{SampledCurve{{1.0, 0.0}, {0.0}}}; break;
                case 8: s.extensions.minimum_cash = MinimumCash{-3, std::nullopt, -1.0}; break;
                case 9: s.extensions.time_varying.push_back({u(rng), Vector::Ones(trial % 4), DenseCovariance{}, {}}); break;
                case 10: s.market.risk_free_index = trial % 5 - 2; break;
                case 11: s.utility.discount = SampledCurve{{}, {1.0}}; break;
            }
        }
        std::vector<Violation> v;
        CHECK_NOTHROW(v = validate(s));
    }
}
