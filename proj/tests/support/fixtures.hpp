#pragma once

#include "merton/core/types.hpp"

namespace merton::testing {

// n = 2, mu = (0.10, 0.02), Sigma = 0.04 I, gamma = 0.5, beta = 1, T = 10.
inline ProblemSpec base_spec() {
    ProblemSpec s;
    s.market.mu = Vector(2);
    s.market.mu << 0.10, 0.02;
    s.market.cov = DenseCovariance{0.04 * Matrix::Identity(2, 2)};
    s.utility.gamma = 0.5;
    s.utility.beta = 1.0;
    s.theta_set = ConstraintSet::budget(2);
    s.horizon = 10.0;
    s.w_init = 1.0;
    return s;
}

// One risky asset (mu = 0.08, vol 0.2) plus a risk-free asset at index 1 (r = 0.02).
inline ProblemSpec risk_free_spec() {
    ProblemSpec s = base_spec();
    s.market.mu << 0.08, 0.02;
    Matrix sigma = Matrix::Zero(2, 2);
    sigma(0, 0) = 0.04;
    s.market.cov = DenseCovariance{sigma};
    s.market.risk_free_index = 1;
    return s;
}

}  // namespace merton::testing
