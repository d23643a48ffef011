#include "merton/conic/program.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace merton::conic;

namespace {

ConicProgram random_program(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nvar(1, 12);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_real_distribution<double> val(-1e3, 1e3);
    std::uniform_real_distribution<double> alpha(0.01, 0.99);
    ConicProgram p;
    const auto n = static_cast<std::size_t>(nvar(rng));
    p.add_variables(n);
    std::uniform_int_distribution<std::size_t> col(0, n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        if (rng() % 2) p.set_objective(j, val(rng) / 7.0);
    }
    const int blocks = 1 + static_cast<int>(rng() % 6);
    for (int b = 0; b < blocks; ++b) {
        const auto k = static_cast<ConeKind>(kind(rng));
        const std::size_t dim = k == ConeKind::Power3 ? 3 : 2 + rng() % 4;
        std::vector<AffineExpr> rows;
        for (std::size_t i = 0; i < dim; ++i) {
            AffineExpr e(rng() % 3 ? val(rng) / 3.0 : 0.0);
            for (int t = 0; t < 3; ++t) e.add(col(rng), val(rng) / 11.0);
            rows.push_back(e);
        }
        p.add_cone(k, rows, k == ConeKind::Power3 ? alpha(rng) : 0.0);
    }
    return p;
}

}  // namespace

TEST_CASE("text format round-trips exactly") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const ConicProgram p = random_program(rng);
        const ConicProgram q = ConicProgram::from_text(p.to_text());
        REQUIRE(p == q);
    }
}

TEST_CASE("rows are stored as b - A x with no explicit zeros") {
    ConicProgram p;
    const auto x = p.add_variables(2);
    AffineExpr e(3.0);
    e.add(x, 2.0).add(x + 1, 0.0);
    p.add_nonnegative(e);
    REQUIRE(p.triplets().size() == 1);
    CHECK(p.triplets()[0].value == -2.0);
    CHECK(p.rhs()[0] == 3.0);
    const std::vector<double> pt = {1.0, 5.0};
    CHECK(p.slack(pt)[0] == doctest::Approx(5.0));
}

TEST_CASE("consecutive linear blocks merge, conic blocks do not") {
    ConicProgram p;
    const auto x = p.add_variables(3);
    p.add_nonnegative(AffineExpr::var(x));
    p.add_nonnegative(AffineExpr::var(x + 1));
    const AffineExpr soc[2] = {AffineExpr::var(x), AffineExpr::var(x + 1)};
    p.add_second_order(soc);
    p.add_second_order(soc);
    REQUIRE(p.cones().size() == 3);
    CHECK(p.cones()[0].dim == 2);
    CHECK_NOTHROW(p.check());
}

TEST_CASE("invalid cones are rejected") {
    ConicProgram p;
    const auto x = p.add_variables(1);
    const AffineExpr two[2] = {AffineExpr::var(x), AffineExpr(1.0)};
    CHECK_THROWS_AS(p.add_cone(ConeKind::Power3, two, 0.5), std::invalid_argument);
    const AffineExpr three[3] = {AffineExpr::var(x), AffineExpr(1.0), AffineExpr(0.0)};
    CHECK_THROWS_AS(p.add_cone(ConeKind::Power3, three, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(p.add_nonnegative(AffineExpr::var(7)), std::out_of_range);
    CHECK_THROWS(ConicProgram::from_text("CONIC_PROGRAM 2\n"));
}
