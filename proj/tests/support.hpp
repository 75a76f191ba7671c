// Shared test utilities: seeded portable random streams and an independent
// dense-solve oracle for the batch posterior. The oracle deliberately
// reimplements the kernel and uses Eigen's pivoted LDLT so it shares no code
// with the library path it checks.
#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>
#include <random>
#include <utility>

#include "pog/kernel.hpp"
#include "pog/predictive.hpp"

namespace testsupport {

class Rng {
public:
    explicit Rng(unsigned long long seed) : engine_(seed) {}

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller, one value per call
    double gaussian() {
        const double u1 = std::max(uniform(), 1e-300);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

private:
    std::mt19937_64 engine_;
};

struct BatchPosterior {
    Eigen::VectorXd mean;
    Eigen::MatrixXd covariance;
};

inline double oracle_kernel(const pog::KernelParams& params, const Eigen::VectorXd& a,
                            const Eigen::VectorXd& b) {
    double s = 0.0;
    for (long i = 0; i < a.size(); ++i) {
        const double d = (a[i] - b[i]) / params.lengthscales[i];
        s += d * d;
    }
    return params.amplitude * std::exp(-0.5 * s);
}

// Direct dense batch posterior at Xstar given all samples (X, y).
inline BatchPosterior batch_posterior_oracle(const pog::KernelParams& params,
                                             const Eigen::MatrixXd& X,
                                             const Eigen::VectorXd& y,
                                             const Eigen::MatrixXd& Xstar) {
    const long n = X.cols(), r = Xstar.cols();
    Eigen::MatrixXd K(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) K(i, j) = oracle_kernel(params, X.col(i), X.col(j));
    K.diagonal().array() += params.noise_variance;
    Eigen::MatrixXd Ksd(r, n);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < n; ++j) Ksd(i, j) = oracle_kernel(params, Xstar.col(i), X.col(j));
    Eigen::MatrixXd Kss(r, r);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j)
            Kss(i, j) = oracle_kernel(params, Xstar.col(i), Xstar.col(j));

    Eigen::LDLT<Eigen::MatrixXd> solver(K);
    BatchPosterior out;
    out.mean = Ksd * solver.solve(y);
    out.covariance = Kss - Ksd * solver.solve(Ksd.transpose());
    out.covariance.diagonal().array() += params.noise_variance;
    return out;
}

inline pog::PredictiveGaussian gaussian1d(double mean, double var) {
    pog::PredictiveGaussian g;
    g.mean = Eigen::VectorXd::Constant(1, mean);
    g.covariance = Eigen::MatrixXd::Constant(1, 1, var);
    return g;
}

// x uniform on [0,1], y = sin(6*pi*x) + N(0, 0.01)
inline std::pair<Eigen::MatrixXd, Eigen::VectorXd> sine_stream(long n,
                                                               unsigned long long seed) {
    Rng rng(seed);
    Eigen::MatrixXd X(1, n);
    Eigen::VectorXd y(n);
    for (long i = 0; i < n; ++i) {
        X(0, i) = rng.uniform();
        y[i] = std::sin(6.0 * M_PI * X(0, i)) + 0.1 * rng.gaussian();
    }
    return {X, y};
}

}  // namespace testsupport
