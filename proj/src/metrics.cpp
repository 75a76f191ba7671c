#include "pog/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pog/gp.hpp"
#include "pog/linalg.hpp"

namespace pog {

EvalReport evaluate(const Dictionary& dict, const KernelParams& params,
                    const Eigen::Ref<const Eigen::MatrixXd>& X_test,
                    const Eigen::Ref<const Eigen::VectorXd>& y_test,
                    double train_var) {
    const long n = y_test.size();
    if (!(train_var > 0.0)) {
        throw std::invalid_argument("evaluate: train_var must be positive");
    }
    if (n < 1) {
        throw std::invalid_argument("evaluate: need at least one test point");
    }
    if (X_test.cols() != n) {
        throw std::invalid_argument("evaluate: X_test/y_test size mismatch");
    }

    std::vector<double> sq_errors(static_cast<size_t>(n));
    std::vector<double> loss_terms(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        PredictiveGaussian pred = posterior_predict(dict, params, X_test.col(i));
        const double err = y_test[i] - pred.mean[0];
        const double var = pred.covariance(0, 0);
        sq_errors[static_cast<size_t>(i)] = err * err;
        loss_terms[static_cast<size_t>(i)] = err * err / var + std::log(var);
    }

    EvalReport report;
    report.n_test = n;
    report.train_target_variance = train_var;
    const double dn = static_cast<double>(n);
    report.smse = pairwise_sum(sq_errors.data(), n) / (dn * train_var);
    report.msll = pairwise_sum(loss_terms.data(), n) / (2.0 * dn);
    return report;
}

}  // namespace pog
