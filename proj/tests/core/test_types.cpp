#include "merton/core/covariance.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace merton;

TEST_CASE("expand_covariance: identity") {
    MarketModel m;
    m.mu = Vector::Zero(2);
    m.cov = DenseCovariance{Matrix::Identity(2, 2)};
    const auto L = expand_covariance(m).to_dense();
    CHECK((L - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("expand_covariance: diagonal square root") {
    MarketModel m;
    m.mu = Vector::Zero(2);
    m.cov = DenseCovariance{0.04 * Matrix::Identity(2, 2)};
    const auto L = expand_covariance(m).to_dense();
    CHECK((L - 0.2 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("expand_covariance: factor form keeps block structure") {
    FactorCovariance f;
    f.loadings = Matrix::Ones(2, 1);
    f.factor_cov = Matrix::Constant(1, 1, 0.01);
    f.idio_var = Vector::Constant(2, 0.04);
    MarketModel m{Vector::Zero(2), f, std::nullopt};
    const auto root = expand_covariance(m);
    CHECK(root.width() == 3);
    const Matrix L = root.to_dense();
    CHECK(L.rows() == 2);
    CHECK(L.cols() == 3);
    // Hand expansion: F F' 0.01 + 0.04 I.
    Matrix expected(2, 2);
    expected << 0.05, 0.01, 0.01, 0.05;
    CHECK((L * L.transpose() - expected).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("expand_covariance: risk-free asset gets a zero row") {
    const auto spec = testing::risk_free_spec();
    const Matrix L = expand_covariance(spec.market).to_dense();
    CHECK(L.row(1).cwiseAbs().maxCoeff() == 0.0);
    CHECK((L * L.transpose() - spec.market.dense_covariance()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("expand_covariance: non-PSD input is rejected") {
    Matrix s(2, 2);
    s << 0.04, 0.0, 0.0, -1e-3;
    MarketModel m{Vector::Zero(2), DenseCovariance{s}, std::nullopt};
    CHECK_THROWS_AS(expand_covariance(m), CovarianceError);
}

TEST_CASE("CovarianceRoot products match the dense covariance") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 6;
        const int k = 1 + trial % 3;
        FactorCovariance f;
        f.loadings = Matrix::NullaryExpr(n, k, [&] { return g(rng); });
        const Matrix a = Matrix::NullaryExpr(k, k, [&] { return g(rng); });
        f.factor_cov = a * a.transpose() + 0.1 * Matrix::Identity(k, k);
        f.idio_var = Vector::NullaryExpr(n, [&] { return 0.01 + 0.1 * std::abs(g(rng)); });
        MarketModel m{Vector::Zero(n), f, std::nullopt};
        const Matrix sigma = m.dense_covariance();
        const auto root = expand_covariance(m);
        const Vector x = Vector::NullaryExpr(n, [&] { return g(rng); });
        CHECK(std::abs(root.quad(x) - x.dot(sigma * x)) <= 1e-10 * (1.0 + x.dot(sigma * x)));
        CHECK((root.sigma_times(x) - sigma * x).cwiseAbs().maxCoeff() <= 1e-10 * (1.0 + sigma.norm()));

        MarketModel dense{Vector::Zero(n), DenseCovariance{sigma}, std::nullopt};
        const Matrix Ld = expand_covariance(dense).to_dense();
        CHECK((Ld * Ld.transpose() - sigma).cwiseAbs().maxCoeff() <= 1e-10 * (1.0 + sigma.norm()));
    }
}

TEST_CASE("SampledCurve interpolation") {
    SampledCurve c{{0.0, 1.0, 1.0, 3.0}, {0.0, 2.0, 5.0, 7.0}};
    CHECK(c(-1.0) == 0.0);
    CHECK(c(0.5) == doctest::Approx(1.0));
    CHECK(c(1.0) == 5.0);  // right-continuous at the jump
    CHECK(c(2.0) == doctest::Approx(6.0));
    CHECK(c(10.0) == 7.0);
    CHECK(SampledCurve::constant(3.0, 0.0, 1.0)(0.3) == 3.0);
}

TEST_CASE("MortalityModel::from_density integrates the density backward") {
    // Uniform death density on [0, 10]: s_t = 1 - t/10.
    std::vector<double> t, p;
    for (int i = 0; i <= 100; ++i) {
        t.push_back(0.1 * i);
        p.push_back(0.1);
    }
    const auto m = MortalityModel::from_density(t, p);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(m.survival[i] == doctest::Approx(1.0 - t[i] / 10.0).epsilon(1e-12));
    CHECK(m.survival_at(2.55) == doctest::Approx(0.745));
}

TEST_CASE("ConstraintSet budget handling") {
    ConstraintSet s;
    CHECK_FALSE(s.has_budget(2));
    const auto b = s.with_budget(2);
    CHECK(b.is_simple_budget(2));
    CHECK(b.with_budget(2).eq.size() == 1);
    Vector th(2);
    th << 0.3, 0.7;
    CHECK(b.max_violation(th) <= 1e-15);
    th << 0.3, 0.8;
    CHECK(b.max_violation(th) == doctest::Approx(0.1));
}

TEST_CASE("wealth homogeneity") {
    auto s = testing::base_spec();
    CHECK(s.is_wealth_homogeneous());
    s.extensions.consumption_floor = SampledCurve::constant(0.0, 0.0, 10.0);
    CHECK(s.is_wealth_homogeneous());
    s.extensions.consumption_floor = SampledCurve::constant(0.01, 0.0, 10.0);
    CHECK_FALSE(s.is_wealth_homogeneous());
}
