#include "merton/builder/cones.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace merton::builder {

AffineExpr combine(const AffineExpr& e, const AffineExpr& f, double scale) {
    AffineExpr out = e;
    for (const auto& [col, v] : f.terms()) out.add(col, scale * v);
    out.add_constant(scale * f.constant());
    return out;
}

void quad_over_lin_cone(ConicProgram& program, const CovarianceRoot& L, std::size_t x_first, const AffineExpr& w,
                        const AffineExpr& s) {
    std::vector<AffineExpr> rows;
    rows.reserve(static_cast<std::size_t>(L.width()) + 2);
    rows.push_back(combine(w, s));
    const Matrix& d = L.dense;
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
        AffineExpr r;
        for (Eigen::Index i = 0; i < d.rows(); ++i) r.add(x_first + static_cast<std::size_t>(i), 2.0 * d(i, j));
        rows.push_back(std::move(r));
    }
    for (Eigen::Index i = 0; i < L.diagonal.size(); ++i) {
        rows.push_back(AffineExpr::var(x_first + static_cast<std::size_t>(i), 2.0 * L.diagonal(i)));
    }
    rows.push_back(combine(w, s, -1.0));
    program.add_second_order(rows);
}

void power_utility_hypograph(ConicProgram& program, double rho, const AffineExpr& c, std::size_t tau) {
    if (!(rho < 1.0) || rho == 0.0) throw std::invalid_argument("power_utility_hypograph: exponent must be < 1 and nonzero");
    if (rho > 0.0) {
        program.add_power3(c, AffineExpr(1.0), AffineExpr::var(tau), rho);
    } else {
        program.add_power3(AffineExpr::var(tau), c, AffineExpr(1.0), 1.0 / (1.0 - rho));
    }
}

void perspective_of_theta(ConicProgram& program, const ConstraintSet& theta_set, std::size_t x_first,
                          const AffineExpr& w) {
    auto linear = [&](const Vector& a, double scale) {
        AffineExpr e;
        for (Eigen::Index i = 0; i < a.size(); ++i) e.add(x_first + static_cast<std::size_t>(i), scale * a(i));
        return e;
    };
    for (const auto& e : theta_set.eq) program.add_zero(combine(linear(e.a, 1.0), w, -e.b));
    for (const auto& g : theta_set.ineq) program.add_nonnegative(combine(linear(g.g, -1.0), w, g.h));
    for (const auto& c : theta_set.socs) {
        std::vector<AffineExpr> rows;
        rows.push_back(combine(linear(c.q, 1.0), w, c.r));
        for (Eigen::Index r = 0; r < c.P.rows(); ++r) rows.push_back(linear(c.P.row(r).transpose(), 1.0));
        program.add_second_order(rows);
    }
}

}  // namespace merton::builder
