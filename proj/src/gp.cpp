#include "pog/gp.hpp"

#include <cmath>
#include <stdexcept>

namespace pog {

namespace detail {

PredictiveGaussian predict_with_factor(const Eigen::Ref<const Eigen::MatrixXd>& inputs,
                                       const CholeskyFactor& factor,
                                       const Eigen::Ref<const Eigen::VectorXd>& alpha,
                                       const KernelParams& params,
                                       const Eigen::Ref<const Eigen::MatrixXd>& Xstar) {
    const long r = Xstar.cols();
    PredictiveGaussian out;
    Eigen::MatrixXd Kss = kernel_matrix(params, Xstar, Xstar);
    if (inputs.cols() == 0) {
        out.mean = Eigen::VectorXd::Zero(r);
        out.covariance = std::move(Kss);
        out.covariance.diagonal().array() += params.noise_variance;
        return out;
    }
    Eigen::MatrixXd Kds = kernel_matrix(params, inputs, Xstar);  // M x r
    out.mean = Kds.transpose() * alpha;
    Eigen::MatrixXd V = factor.solve_lower(Kds);  // M x r
    out.covariance = Kss - V.transpose() * V;
    out.covariance.diagonal().array() += params.noise_variance;
    return out;
}

}  // namespace detail

PredictiveGaussian posterior_predict(const Dictionary& dict, const KernelParams& params,
                                     const Eigen::Ref<const Eigen::MatrixXd>& Xstar) {
    if (!(params == dict.params())) {
        throw std::invalid_argument(
            "posterior_predict: params differ from the dictionary's cached factorization");
    }
    return posterior_predict(dict, Xstar);
}

PredictiveGaussian posterior_predict(const Dictionary& dict,
                                     const Eigen::Ref<const Eigen::MatrixXd>& Xstar) {
    if (Xstar.cols() > 0 && Xstar.rows() != dict.feature_dim()) {
        throw std::invalid_argument("posterior_predict: feature dimension mismatch");
    }
    return detail::predict_with_factor(dict.inputs(), dict.factor(), dict.alpha(),
                                       dict.params(), Xstar);
}

double log_marginal_likelihood(const KernelParams& params,
                               const Eigen::Ref<const Eigen::MatrixXd>& X,
                               const Eigen::Ref<const Eigen::VectorXd>& y) {
    params.validate();
    const long n = y.size();
    if (n < 1) {
        throw std::invalid_argument("log_marginal_likelihood: need at least one sample");
    }
    if (X.cols() != n || X.rows() != params.feature_dim()) {
        throw std::invalid_argument("log_marginal_likelihood: dimension mismatch");
    }
    Eigen::MatrixXd K = kernel_matrix(params, X, X);
    K.diagonal().array() += params.noise_variance;
    CholeskyFactor factor = cholesky_factor(K);
    Eigen::VectorXd alpha = factor.solve(y);
    constexpr double kLog2Pi = 1.8378770664093454835606594728112;
    return -0.5 * y.dot(alpha) - 0.5 * factor.log_det() -
           0.5 * static_cast<double>(n) * kLog2Pi;
}

}  // namespace pog
