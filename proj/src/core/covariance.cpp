#include "merton/core/covariance.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <string>

namespace merton {

namespace {

// Cholesky of sigma with row/column `skip` removed; the skipped asset gets a
// zero row in the factor.
Matrix cholesky_without(const Matrix& sigma, std::optional<int> skip) {
    const Eigen::Index n = sigma.rows();
    if (!skip) {
        Eigen::LLT<Matrix> llt(sigma);
        if (llt.info() != Eigen::Success) throw CovarianceError("covariance is not positive definite");
        return llt.matrixL();
    }
    const Eigen::Index r = *skip;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (i != r) keep.push_back(i);
    }
    const auto k = static_cast<Eigen::Index>(keep.size());
    Matrix sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = sigma(keep[i], keep[j]);
    }
    Matrix out = Matrix::Zero(n, k);
    if (k == 0) return out;
    Eigen::LLT<Matrix> llt(sub);
    if (llt.info() != Eigen::Success) {
        throw CovarianceError("covariance of the risky assets is not positive definite");
    }
    const Matrix lsub = llt.matrixL();
    for (Eigen::Index i = 0; i < k; ++i) out.row(keep[i]) = lsub.row(i);
    return out;
}

}  // namespace

Vector CovarianceRoot::apply_transpose(const Vector& x) const {
    Vector out(width());
    out.head(dense.cols()) = dense.transpose() * x;
    out.tail(diagonal.size()) = diagonal.cwiseProduct(x);
    return out;
}

Vector CovarianceRoot::sigma_times(const Vector& x) const {
    Vector out = dense * (dense.transpose() * x);
    if (diagonal.size() > 0) out += diagonal.cwiseAbs2().cwiseProduct(x);
    return out;
}

Matrix CovarianceRoot::to_dense() const {
    Matrix l = Matrix::Zero(num_assets(), width());
    l.leftCols(dense.cols()) = dense;
    for (Eigen::Index i = 0; i < diagonal.size(); ++i) l(i, dense.cols() + i) = diagonal(i);
    return l;
}

CovarianceRoot expand_covariance(const Covariance& cov, std::optional<int> risk_free_index) {
    CovarianceRoot root;
    if (const auto* d = std::get_if<DenseCovariance>(&cov)) {
        root.dense = cholesky_without(d->sigma, risk_free_index);
        return root;
    }
    const auto& f = std::get<FactorCovariance>(cov);
    Eigen::LLT<Matrix> llt(f.factor_cov);
    if (llt.info() != Eigen::Success) throw CovarianceError("factor covariance is not positive definite");
    root.dense = f.loadings * Matrix(llt.matrixL());
    if ((f.idio_var.array() < 0.0).any()) throw CovarianceError("negative idiosyncratic variance");
    root.diagonal = f.idio_var.cwiseSqrt();
    return root;
}

CovarianceRoot expand_covariance(const MarketModel& model) {
    return expand_covariance(model.cov, model.risk_free_index);
}

}  // namespace merton
