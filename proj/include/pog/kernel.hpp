#pragma once

#include <Eigen/Core>

namespace pog {

// ARD Gaussian kernel hyperparameters plus the observation noise prior.
// All entries must be strictly positive; lengthscales carry one entry per
// feature dimension.
struct KernelParams {
    double amplitude = 1.0;
    Eigen::VectorXd lengthscales;
    double noise_variance = 1e-2;

    int feature_dim() const { return static_cast<int>(lengthscales.size()); }

    // Throws std::invalid_argument on non-positive or non-finite entries.
    void validate() const;
};

bool operator==(const KernelParams& a, const KernelParams& b);

// k(x1, x2) = amplitude * exp(-1/2 * sum_i (x1_i - x2_i)^2 / q_i^2)
double kernel_eval(const KernelParams& params,
                   const Eigen::Ref<const Eigen::VectorXd>& x1,
                   const Eigen::Ref<const Eigen::VectorXd>& x2);

// Cross-covariance matrix: entry (i, j) = k(A.col(i), B.col(j)).
// Columns are samples, rows are features. When A and B alias the same
// storage the result is mirrored so it is symmetric to the last bit.
Eigen::MatrixXd kernel_matrix(const KernelParams& params,
                              const Eigen::Ref<const Eigen::MatrixXd>& A,
                              const Eigen::Ref<const Eigen::MatrixXd>& B);

}  // namespace pog
