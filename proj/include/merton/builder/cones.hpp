/**
 * @file cones.hpp
 * @brief Conic canonicalizations shared by the planner and the Markowitz solve.
 */

#pragma once

#include "merton/conic/program.hpp"
#include "merton/core/covariance.hpp"

namespace merton::builder {

using conic::AffineExpr;
using conic::ConicProgram;

/// x' Sigma x / w <= s (w > 0) as the second-order cone
/// ||(2 L' x, w - s)||_2 <= w + s, with x stored in columns
/// x_first .. x_first + n - 1. The cone has dimension L.width() + 2.
void quad_over_lin_cone(ConicProgram& program, const CovarianceRoot& L, std::size_t x_first, const AffineExpr& w,
                        const AffineExpr& s);

/// tau <= c^rho for rho in (0, 1) via (c, 1, tau) in Pow(rho), and
/// tau >= c^rho for rho < 0 via (tau, c, 1) in Pow(1/(1+|rho|)). With the
/// objective term (weight/rho) tau maximized, tau equals c^rho at the optimum.
void power_utility_hypograph(ConicProgram& program, double rho, const AffineExpr& c, std::size_t tau);

/// Rows enforcing x / w in Theta through the perspective of Theta:
/// a'x = b w, g'x <= h w and ||P x|| <= q'x + r w.
void perspective_of_theta(ConicProgram& program, const ConstraintSet& theta_set, std::size_t x_first,
                          const AffineExpr& w);

/// e + scale * f.
AffineExpr combine(const AffineExpr& e, const AffineExpr& f, double scale = 1.0);

}  // namespace merton::builder
