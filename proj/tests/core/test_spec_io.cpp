#include "merton/core/spec_io.hpp"
#include "merton/core/validate.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

using namespace merton;

namespace {

const char* kBase = R"({
  "schema": "merton-spec/1",
  "market": {"mu": [0.10, 0.02], "cov": {"dense": [[0.04, 0], [0, 0.04]]}},
  "utility": {"gamma": 0.5, "beta": 1},
  "theta_set": {"eq": [{"a": [1, 1], "b": 1}]},
  "horizon": 10,
  "w_init": 1
})";

}  // namespace

TEST_CASE("parse base spec") {
    const auto s = parse_spec(kBase);
    CHECK(s.num_assets() == 2);
    CHECK(s.market.mu(0) == 0.10);
    CHECK(s.utility.gamma == 0.5);
    CHECK(s.horizon == 10.0);
    CHECK(s.theta_set.is_simple_budget(2));
    CHECK(validate(s).empty());
}

TEST_CASE("unknown keys fail closed") {
    std::string bad = kBase;
    bad.insert(bad.find("\"horizon\""), "\"horizn\": 3, ");
    CHECK_THROWS_AS(parse_spec(bad), SpecFormatError);
    std::string bad_market = kBase;
    bad_market.insert(bad_market.find("\"mu\""), "\"sigma\": 1, ");
    CHECK_THROWS_AS(parse_spec(bad_market), SpecFormatError);
    std::string bad_schema = kBase;
    bad_schema.replace(bad_schema.find("merton-spec/1"), 13, "merton-spec/9");
    CHECK_THROWS_AS(parse_spec(bad_schema), SpecFormatError);
    CHECK_THROWS_AS(parse_spec("{not json"), SpecFormatError);
}

TEST_CASE("round trip with every extension block") {
    auto s = testing::risk_free_spec();
    s.utility.rho = -1.0;
    s.utility.discount = SampledCurve{{0.0, 10.0}, {1.0, 0.5}};
    s.extensions.mortality = MortalityModel::from_density({0.0, 5.0, 10.0}, {0.05, 0.05, 0.1}, 0.2);
    s.extensions.income = IncomeModel{SampledCurve::constant(0.1, 0.0, 10.0)};
    s.extensions.insurance = InsuranceModel{SampledCurve::constant(1.2, 0.0, 10.0)};
    s.extensions.consumption_floor = SampledCurve::constant(0.01, 0.0, 10.0);
    Vector d(2);
    d << 0.03, 0.0;
    s.extensions.spending_limit = SpendingLimit{0.7, d};
    s.extensions.minimum_cash = MinimumCash{1, SampledCurve::constant(0.1, 0.0, 10.0), 0.5};
    s.extensions.max_min_consumption = true;
    s.extensions.time_varying.push_back({5.0, s.market.mu, FactorCovariance{Matrix::Ones(2, 1), Matrix::Identity(1, 1), Vector::Ones(2)}, ConstraintSet::budget(2)});

    const std::string text = spec_to_json(s);
    const auto back = parse_spec(text);
    CHECK(spec_to_json(back) == text);
    CHECK(back.utility.rho == -1.0);
    CHECK(back.extensions.mortality->survival == s.extensions.mortality->survival);
    CHECK(back.extensions.time_varying.at(0).cov.index() == 1);
}

TEST_CASE("set_extension accepts inline blocks and scalars") {
    auto s = parse_spec(kBase);
    set_extension(s, "consumption_floor", "0.02");
    CHECK((*s.extensions.consumption_floor)(3.0) == 0.02);
    set_extension(s, "spending_limit", R"({"eta": 0.5, "dividend_yield": 0.01})");
    CHECK(s.extensions.spending_limit->dividend_yield.size() == 2);
    CHECK_THROWS_AS(set_extension(s, "teleport", "1"), SpecFormatError);
    CHECK_THROWS_AS(set_extension(s, "minimum_cash", R"({"floor": 1})"), SpecFormatError);
}
