#include "merton/conic/solver.hpp"

#include <doctest.h>

#include <cmath>

using namespace merton::conic;

TEST_CASE("LP corner: min x s.t. x >= 3") {
    ConicProgram p;
    const auto x = p.add_variables(1);
    p.set_objective(x, 1.0);
    p.add_nonnegative(AffineExpr(-3.0).add(x, 1.0));
    const SolveResult r = solve(p);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.primal[x] == doctest::Approx(3.0).epsilon(1e-8));
    const auto rep = verify(p, r);
    REQUIRE(rep);
    CHECK(rep->worst() <= 1e-6);
}

TEST_CASE("SOC projection: min t s.t. ||(3,4)|| <= t") {
    ConicProgram p;
    const auto t = p.add_variables(1);
    p.set_objective(t, 1.0);
    const AffineExpr rows[3] = {AffineExpr::var(t), AffineExpr(3.0), AffineExpr(4.0)};
    p.add_second_order(rows);
    const SolveResult r = solve(p);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.primal[t] == doctest::Approx(5.0).epsilon(1e-8));
    CHECK(verify(p, r)->worst() <= 1e-6);
}

namespace {

ConicProgram power_hypograph(double base, double alpha) {
    ConicProgram p;
    const auto tau = p.add_variables(1);
    p.set_objective(tau, -1.0);
    p.add_power3(AffineExpr(base), AffineExpr(1.0), AffineExpr::var(tau), alpha);
    return p;
}

}  // namespace

TEST_CASE("power cone: max tau s.t. (4, 1, tau) in K_pow(0.5)") {
    // Oracle: grid search for the largest tau with 4^0.5 * 1^0.5 >= |tau|.
    double best = -1.0;
    for (int i = 0; i <= 400000; ++i) {
        const double tau = i * 1e-5;
        if (std::pow(4.0, 0.5) >= std::abs(tau)) best = tau;
    }
    const SolveResult r = solve(power_hypograph(4.0, 0.5));
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.primal[0] == doctest::Approx(best).epsilon(1e-7));
    CHECK(r.primal[0] == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("verify flags a perturbed primal") {
    ConicProgram p;
    const auto x = p.add_variables(2);
    p.set_objective(x, 1.0);
    p.set_objective(x + 1, 1.0);
    p.add_zero(AffineExpr(-1.0).add(x, 1.0).add(x + 1, 1.0));
    p.add_nonnegative(AffineExpr::var(x));
    p.add_nonnegative(AffineExpr::var(x + 1));
    SolveResult r = solve(p);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(verify(p, r)->worst() <= 1e-6);
    r.primal[x] += 1e-2;
    CHECK(verify(p, r)->primal >= 1e-3);
}

TEST_CASE("infeasible program has no residual report") {
    ConicProgram p;
    const auto x = p.add_variables(1);
    p.set_objective(x, 1.0);
    p.add_nonnegative(AffineExpr(-1.0).add(x, 1.0));  // x >= 1
    p.add_nonnegative(AffineExpr(0.0).add(x, -1.0));  // x <= 0
    const SolveResult r = solve(p);
    CHECK(r.status == SolveStatus::Infeasible);
    CHECK_FALSE(r.has_solution());
    CHECK_FALSE(verify(p, r).has_value());
}

TEST_CASE("unbounded program is reported") {
    ConicProgram p;
    const auto x = p.add_variables(1);
    p.set_objective(x, -1.0);
    p.add_nonnegative(AffineExpr::var(x));
    CHECK(solve(p).status == SolveStatus::Unbounded);
}

TEST_CASE("SOC tower backend agrees with native power cones") {
    for (double alpha : {0.5, 0.25, 0.3, 2.0 / 3.0, 0.9}) {
        for (double base : {0.7, 4.0, 9.5}) {
            const ConicProgram p = power_hypograph(base, alpha);
            const SolveResult native = solve(p);
            SolverSettings s;
            s.backend = "clarabel-socp";
            const SolveResult tower = solve(p, s);
            REQUIRE(native.status == SolveStatus::Optimal);
            REQUIRE(tower.status == SolveStatus::Optimal);
            const double exact = std::pow(base, alpha);
            CHECK(native.primal[0] == doctest::Approx(exact).epsilon(1e-7));
            CHECK(tower.primal[0] == doctest::Approx(exact).epsilon(1e-7));
            CHECK(std::abs(native.objective - tower.objective) <= 1e-5 * std::abs(native.objective));
            const auto rep = verify(p, tower);
            REQUIRE(rep);
            CHECK_FALSE(rep->dual_available);
            CHECK(rep->primal <= 1e-6);
        }
    }
}

TEST_CASE("negative-exponent hypograph through the tower") {
    // tau >= c^-1 at c = 2 via (tau, c, 1) in K_pow(1/2).
    ConicProgram p;
    const auto tau = p.add_variables(1);
    p.set_objective(tau, 1.0);
    p.add_power3(AffineExpr::var(tau), AffineExpr(2.0), AffineExpr(1.0), 0.5);
    SolverSettings s;
    s.backend = "clarabel-socp";
    CHECK(solve(p, s).primal[0] == doctest::Approx(0.5).epsilon(1e-7));
    CHECK(solve(p).primal[0] == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("capability errors") {
    const ConicProgram p = power_hypograph(2.0, 1.0 / std::sqrt(2.0));
    SolverSettings s;
    s.backend = "clarabel-socp";
    CHECK_THROWS_AS(solve(p, s), CapabilityError);
    s.backend = "nope";
    CHECK_THROWS_AS(solve(p, s), CapabilityError);
}

TEST_CASE("large universes relax tolerances") {
    CHECK(SolverSettings::for_universe(10).tol_gap == 1e-8);
    CHECK(SolverSettings::for_universe(500).tol_gap == 1e-6);
}

TEST_CASE("quadratic objective: min (1/2)(x^2 + 2xy + 3y^2) - x - y s.t. x + y <= 0.5") {
    ConicProgram p;
    const auto x = p.add_variables(2);
    p.add_quadratic(x, x, 1.0);
    p.add_quadratic(x, x + 1, 1.0);
    p.add_quadratic(x + 1, x + 1, 3.0);
    p.set_objective(x, -1.0);
    p.set_objective(x + 1, -1.0);
    p.add_nonnegative(AffineExpr(0.5).add(x, -1.0).add(x + 1, -1.0));
    // KKT by hand: constraint active, P(x,y) - (1,1) + lam (1,1) = 0 -> y = 0, x = 0.5
    for (const char* backend : {"clarabel", "clarabel-socp"}) {
        SolverSettings s;
        s.backend = backend;
        const SolveResult r = solve(p, s);
        REQUIRE(r.status == SolveStatus::Optimal);
        CHECK(std::abs(r.primal[x] - 0.5) <= 1e-8);
        CHECK(std::abs(r.primal[x + 1]) <= 1e-8);
        CHECK(r.objective == doctest::Approx(0.125 - 0.5).epsilon(1e-9));
        const auto rep = verify(p, r);
        REQUIRE(rep);
        CHECK(rep->worst() <= 1e-7);
    }
    const auto back = ConicProgram::from_text(p.to_text());
    CHECK(back == p);
}
