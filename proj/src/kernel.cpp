#include "pog/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace pog {

void KernelParams::validate() const {
    if (!(amplitude > 0.0) || !std::isfinite(amplitude)) {
        throw std::invalid_argument("KernelParams: amplitude must be positive");
    }
    if (lengthscales.size() == 0) {
        throw std::invalid_argument("KernelParams: lengthscales must be non-empty");
    }
    for (long i = 0; i < lengthscales.size(); ++i) {
        if (!(lengthscales[i] > 0.0) || !std::isfinite(lengthscales[i])) {
            throw std::invalid_argument("KernelParams: lengthscales must be positive");
        }
    }
    if (!(noise_variance > 0.0) || !std::isfinite(noise_variance)) {
        throw std::invalid_argument("KernelParams: noise_variance must be positive");
    }
}

bool operator==(const KernelParams& a, const KernelParams& b) {
    return a.amplitude == b.amplitude && a.noise_variance == b.noise_variance &&
           a.lengthscales.size() == b.lengthscales.size() &&
           a.lengthscales == b.lengthscales;
}

double kernel_eval(const KernelParams& params,
                   const Eigen::Ref<const Eigen::VectorXd>& x1,
                   const Eigen::Ref<const Eigen::VectorXd>& x2) {
    const long p = params.lengthscales.size();
    if (x1.size() != p || x2.size() != p) {
        throw std::invalid_argument("kernel_eval: feature dimension mismatch");
    }
    double q = 0.0;
    for (long i = 0; i < p; ++i) {
        const double d = (x1[i] - x2[i]) / params.lengthscales[i];
        q += d * d;
    }
    return params.amplitude * std::exp(-0.5 * q);
}

Eigen::MatrixXd kernel_matrix(const KernelParams& params,
                              const Eigen::Ref<const Eigen::MatrixXd>& A,
                              const Eigen::Ref<const Eigen::MatrixXd>& B) {
    const long p = params.lengthscales.size();
    const long m = A.cols();
    const long n = B.cols();
    if ((m > 0 && A.rows() != p) || (n > 0 && B.rows() != p)) {
        throw std::invalid_argument("kernel_matrix: feature dimension mismatch");
    }
    Eigen::MatrixXd K(m, n);
    const bool same = (A.data() == B.data() && m == n && A.rows() == B.rows());
    if (same) {
        for (long j = 0; j < n; ++j) {
            for (long i = 0; i <= j; ++i) {
                const double v = kernel_eval(params, A.col(i), B.col(j));
                K(i, j) = v;
                K(j, i) = v;
            }
        }
    } else {
        for (long j = 0; j < n; ++j) {
            for (long i = 0; i < m; ++i) {
                K(i, j) = kernel_eval(params, A.col(i), B.col(j));
            }
        }
    }
    return K;
}

}  // namespace pog
