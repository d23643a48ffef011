#pragma once

#include "merton/core/types.hpp"

#include <stdexcept>

namespace merton {

/// Raised when a covariance cannot be factored (not PSD, or singular outside
/// the risk-free asset).
class CovarianceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Square root L with Sigma = L L', stored as L = [dense, diag(diagonal)].
///
/// Dense covariances give a lower-triangular Cholesky factor in `dense`
/// (with a zero row for the risk-free asset) and an empty `diagonal`.
/// Factor models give dense = F chol(factor_cov) (n x m) and
/// diagonal = sqrt(idio_var), so L has width m + n and the n x n product is
/// never formed.
struct CovarianceRoot {
    Matrix dense;
    Vector diagonal;

    Eigen::Index num_assets() const { return dense.rows(); }
    Eigen::Index width() const { return dense.cols() + diagonal.size(); }

    /// L' x (length width()).
    Vector apply_transpose(const Vector& x) const;
    /// Sigma x = L (L' x).
    Vector sigma_times(const Vector& x) const;
    /// x' Sigma x.
    double quad(const Vector& x) const { return apply_transpose(x).squaredNorm(); }
    /// Materialized L (n x width()), for tests.
    Matrix to_dense() const;
};

CovarianceRoot expand_covariance(const MarketModel& model);
CovarianceRoot expand_covariance(const Covariance& cov, std::optional<int> risk_free_index);

}  // namespace merton
