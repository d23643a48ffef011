#pragma once

#include "merton/core/types.hpp"

#include <Eigen/Cholesky>

namespace merton::testing {

// Closed-form KKT solution of the Markowitz problem on {1'theta = 1}:
// theta = Sigma^{-1}(mu - nu 1)/(1 - gamma) with nu fixing the budget.
inline Vector kkt_budget(const Vector& mu, const Matrix& sigma, double gamma) {
    const Eigen::LDLT<Matrix> ldlt(sigma);
    const Vector ones = Vector::Ones(mu.size());
    const Vector si_mu = ldlt.solve(mu);
    const Vector si_one = ldlt.solve(ones);
    const double nu = (ones.dot(si_mu) - (1.0 - gamma)) / ones.dot(si_one);
    return (si_mu - nu * si_one) / (1.0 - gamma);
}

}  // namespace merton::testing
