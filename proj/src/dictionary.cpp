#include "pog/dictionary.hpp"

#include <stdexcept>
#include <utility>

namespace pog {

Dictionary::Dictionary(int feature_dim, const KernelParams& params)
    : inputs_(feature_dim, 0), targets_(0), params_(params) {
    params_.validate();
    if (feature_dim != params_.feature_dim()) {
        throw std::invalid_argument("Dictionary: feature dimension does not match lengthscales");
    }
    factor_ = CholeskyFactor{Eigen::MatrixXd(0, 0), 0.0};
    alpha_ = Eigen::VectorXd(0);
}

Dictionary::Dictionary(Eigen::MatrixXd inputs, Eigen::VectorXd targets,
                       const KernelParams& params)
    : inputs_(std::move(inputs)), targets_(std::move(targets)), params_(params) {
    params_.validate();
    if (inputs_.cols() != targets_.size()) {
        throw std::invalid_argument("Dictionary: inputs/targets size mismatch");
    }
    if (inputs_.cols() > 0 && inputs_.rows() != params_.feature_dim()) {
        throw std::invalid_argument("Dictionary: feature dimension does not match lengthscales");
    }
    rebuild();
}

void Dictionary::rebuild() {
    Eigen::MatrixXd K = kernel_matrix(params_, inputs_, inputs_);
    K.diagonal().array() += params_.noise_variance;
    factor_ = cholesky_factor(K);
    alpha_ = factor_.solve(targets_);
}

Dictionary Dictionary::appended(const Eigen::Ref<const Eigen::VectorXd>& x, double y) const {
    if (x.size() != feature_dim()) {
        throw std::invalid_argument("Dictionary::appended: feature dimension mismatch");
    }
    const int m = model_order();
    Eigen::MatrixXd inputs(feature_dim(), m + 1);
    inputs.leftCols(m) = inputs_;
    inputs.col(m) = x;
    Eigen::VectorXd targets(m + 1);
    targets.head(m) = targets_;
    targets[m] = y;

    // Extend the cached factor by one row (O(M^2)) when it factors
    // K + noise*I exactly; the appended matrix stays positive definite, so
    // the new pivot is positive unless conditioning forces a full rebuild
    // through the jitter ladder.
    if (factor_.jitter == 0.0) {
        Eigen::VectorXd k(m);
        for (int j = 0; j < m; ++j) k[j] = kernel_eval(params_, inputs_.col(j), x);
        const double d = kernel_eval(params_, x, x) + params_.noise_variance;
        Eigen::VectorXd w;
        double pivot = d;
        if (m > 0) {
            w = factor_.lower.triangularView<Eigen::Lower>().solve(k);
            pivot = d - w.squaredNorm();
        }
        if (pivot > 0.0) {
            Dictionary out(*this);
            out.inputs_ = std::move(inputs);
            out.targets_ = std::move(targets);
            Eigen::MatrixXd L = Eigen::MatrixXd::Zero(m + 1, m + 1);
            L.topLeftCorner(m, m) = factor_.lower;
            if (m > 0) L.block(m, 0, 1, m) = w.transpose();
            L(m, m) = std::sqrt(pivot);
            out.factor_ = CholeskyFactor{std::move(L), 0.0};
            out.alpha_ = out.factor_.solve(out.targets_);
            return out;
        }
    }
    return Dictionary(std::move(inputs), std::move(targets), params_);
}

Dictionary Dictionary::without(int index) const {
    const int m = model_order();
    if (index < 0 || index >= m) {
        throw std::invalid_argument("Dictionary::without: index out of range");
    }
    Eigen::MatrixXd inputs(feature_dim(), m - 1);
    Eigen::VectorXd targets(m - 1);
    int k = 0;
    for (int j = 0; j < m; ++j) {
        if (j == index) continue;
        inputs.col(k) = inputs_.col(j);
        targets[k] = targets_[j];
        ++k;
    }
    return Dictionary(std::move(inputs), std::move(targets), params_);
}

}  // namespace pog
