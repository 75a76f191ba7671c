#pragma once

#include <Eigen/Core>

#include "pog/dictionary.hpp"
#include "pog/kernel.hpp"
#include "pog/linalg.hpp"
#include "pog/predictive.hpp"

namespace pog {

// Posterior predictive at the reference columns of Xstar:
//   mean = K(X*, D) [K_DD + s2 I]^{-1} y
//   cov  = K(X*, X*) - K(X*, D) [K_DD + s2 I]^{-1} K(D, X*) + s2 I
// An empty dictionary yields the prior (zero mean, K(X*,X*) + s2 I).
// `params` must match the parameters the dictionary was built with.
PredictiveGaussian posterior_predict(const Dictionary& dict,
                                     const KernelParams& params,
                                     const Eigen::Ref<const Eigen::MatrixXd>& Xstar);

PredictiveGaussian posterior_predict(const Dictionary& dict,
                                     const Eigen::Ref<const Eigen::MatrixXd>& Xstar);

namespace detail {
// Shared predictive arithmetic for callers that hold the pieces directly
// (e.g. leave-one-out candidates working off a downdated factor).
PredictiveGaussian predict_with_factor(const Eigen::Ref<const Eigen::MatrixXd>& inputs,
                                       const CholeskyFactor& factor,
                                       const Eigen::Ref<const Eigen::VectorXd>& alpha,
                                       const KernelParams& params,
                                       const Eigen::Ref<const Eigen::MatrixXd>& Xstar);
}  // namespace detail

// log N(y; 0, K + s2 I) computed through the jittered factorization.
double log_marginal_likelihood(const KernelParams& params,
                               const Eigen::Ref<const Eigen::MatrixXd>& X,
                               const Eigen::Ref<const Eigen::VectorXd>& y);

// Coordinate-descent maximization of the log marginal likelihood over
// (amplitude, lengthscales, noise_variance) on a seed-deterministic random
// subset of the data. Multiplicative step grid, at most 50 sweeps. Constant
// features get their lengthscale pinned at 1.0 (with a warning on stderr).
KernelParams tune_hyperparameters(const Eigen::Ref<const Eigen::MatrixXd>& X,
                                  const Eigen::Ref<const Eigen::VectorXd>& y,
                                  int subset_size, unsigned long long seed);

}  // namespace pog
