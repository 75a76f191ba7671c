#pragma once

#include <Eigen/Core>

namespace pog {

// Gaussian posterior predictive at a reference set of r points: mean vector
// and full r x r covariance (including the additive noise variance on the
// diagonal). r = 1 for single-point predictives.
struct PredictiveGaussian {
    Eigen::VectorXd mean;
    Eigen::MatrixXd covariance;

    int dim() const { return static_cast<int>(mean.size()); }
};

}  // namespace pog
