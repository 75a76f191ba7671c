#pragma once

#include <Eigen/Core>

#include "pog/kernel.hpp"
#include "pog/linalg.hpp"

namespace pog {

// Retained inputs (one column per point), their paired targets, and the
// cached factorization of K_DD + noise*I. Immutable after construction:
// append/prune return a new Dictionary with a freshly built factor, so a
// value can be shared across threads freely.
class Dictionary {
public:
    // Empty dictionary over a feature space of the given dimension.
    explicit Dictionary(int feature_dim, const KernelParams& params);

    // Columns of `inputs` are the retained points; `targets` pairs with them.
    Dictionary(Eigen::MatrixXd inputs, Eigen::VectorXd targets,
               const KernelParams& params);

    int model_order() const { return static_cast<int>(targets_.size()); }
    int feature_dim() const { return static_cast<int>(inputs_.rows()); }

    const Eigen::MatrixXd& inputs() const { return inputs_; }
    const Eigen::VectorXd& targets() const { return targets_; }
    const KernelParams& params() const { return params_; }
    const CholeskyFactor& factor() const { return factor_; }
    // Cached (K_DD + noise*I)^{-1} y
    const Eigen::VectorXd& alpha() const { return alpha_; }

    Dictionary appended(const Eigen::Ref<const Eigen::VectorXd>& x, double y) const;
    Dictionary without(int index) const;

private:
    Eigen::MatrixXd inputs_;   // p x M
    Eigen::VectorXd targets_;  // M
    KernelParams params_;
    CholeskyFactor factor_;    // of K_DD + noise*I
    Eigen::VectorXd alpha_;

    void rebuild();
};

}  // namespace pog
