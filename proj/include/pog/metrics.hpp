#pragma once

#include <Eigen/Core>

#include "pog/dictionary.hpp"
#include "pog/kernel.hpp"

namespace pog {

struct EvalReport {
    double smse = 0.0;
    double msll = 0.0;
    long n_test = 0;
    double train_target_variance = 0.0;
};

// Test-set scores from per-point predictives (scalar variance per point):
//   SMSE = mean (y_i - mu_i)^2 / train_var
//   MSLL = 1/(2N) sum [ (y_i - mu_i)^2 / var_i + log var_i ]
// train_var is the population variance of the training targets. Sums use
// deterministic pairwise accumulation.
EvalReport evaluate(const Dictionary& dict, const KernelParams& params,
                    const Eigen::Ref<const Eigen::MatrixXd>& X_test,
                    const Eigen::Ref<const Eigen::VectorXd>& y_test,
                    double train_var);

}  // namespace pog
