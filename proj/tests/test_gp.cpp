#include <doctest.h>

#include <Eigen/Core>
#include <cmath>

#include "pog/dictionary.hpp"
#include "pog/gp.hpp"
#include "support.hpp"

using namespace pog;

namespace {

KernelParams params1d(double a = 1.0, double q = 1.0, double s2 = 0.25) {
    KernelParams p;
    p.amplitude = a;
    p.lengthscales = Eigen::VectorXd::Constant(1, q);
    p.noise_variance = s2;
    return p;
}

}  // namespace

TEST_SUITE("gp") {

TEST_CASE("empty dictionary returns the prior") {
    auto p = params1d();
    Dictionary dict(1, p);
    Eigen::MatrixXd xstar(1, 1);
    xstar << 0.3;
    PredictiveGaussian g = posterior_predict(dict, p, xstar);
    CHECK(g.mean[0] == 0.0);
    CHECK(g.covariance(0, 0) == doctest::Approx(1.25).epsilon(1e-14));
}

TEST_CASE("single-point posterior has the hand-derived values") {
    auto p = params1d();
    Eigen::MatrixXd X(1, 1);
    X << 0.0;
    Eigen::VectorXd y(1);
    y << 1.0;
    Dictionary dict(X, y, p);
    PredictiveGaussian g = posterior_predict(dict, p, X);
    CHECK(g.mean[0] == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(g.covariance(0, 0) == doctest::Approx(0.45).epsilon(1e-14));
}

TEST_CASE("full-history dictionary matches the dense batch oracle") {
    KernelParams p;
    p.amplitude = 1.3;
    p.lengthscales = Eigen::VectorXd::Constant(2, 0.8);
    p.noise_variance = 0.05;
    testsupport::Rng rng(17);
    const long n = 50;
    Eigen::MatrixXd X(2, n);
    Eigen::VectorXd y(n);
    for (long i = 0; i < n; ++i) {
        X(0, i) = rng.uniform(-1, 1);
        X(1, i) = rng.uniform(-1, 1);
        y[i] = std::sin(3.0 * X(0, i)) + 0.2 * rng.gaussian();
    }
    Dictionary dict(X, y, p);
    Eigen::MatrixXd xstar(2, 4);
    for (long j = 0; j < 4; ++j) {
        xstar(0, j) = rng.uniform(-1, 1);
        xstar(1, j) = rng.uniform(-1, 1);
    }
    PredictiveGaussian g = posterior_predict(dict, p, xstar);
    auto oracle = testsupport::batch_posterior_oracle(p, X, y, xstar);
    CHECK((g.mean - oracle.mean).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((g.covariance - oracle.covariance).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("covariance floor and symmetry on random dictionaries") {
    testsupport::Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int p_dim = 1 + static_cast<int>(rng.uniform(0, 4));
        const int m = 1 + static_cast<int>(rng.uniform(0, 20));
        KernelParams p;
        p.amplitude = rng.uniform(0.5, 2.0);
        p.lengthscales = Eigen::VectorXd::Constant(p_dim, rng.uniform(0.3, 2.0));
        p.noise_variance = rng.uniform(0.01, 0.5);
        Eigen::MatrixXd X(p_dim, m);
        Eigen::VectorXd y(m);
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < p_dim; ++i) X(i, j) = rng.uniform(-2, 2);
            y[j] = rng.gaussian();
        }
        Dictionary dict(X, y, p);
        Eigen::MatrixXd xstar(p_dim, 5);
        for (int j = 0; j < 5; ++j)
            for (int i = 0; i < p_dim; ++i) xstar(i, j) = rng.uniform(-2, 2);
        PredictiveGaussian g = posterior_predict(dict, p, xstar);
        CHECK((g.covariance - g.covariance.transpose()).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(g.covariance.diagonal().minCoeff() >= p.noise_variance - 1e-10);
    }
}

TEST_CASE("log marginal likelihood scalar cases") {
    auto p = params1d(1.0, 1.0, 1.0);
    Eigen::MatrixXd X(1, 1);
    X << 0.7;
    Eigen::VectorXd y(1);
    y << 0.0;
    CHECK(log_marginal_likelihood(p, X, y) ==
          doctest::Approx(-1.2655121234846454).epsilon(1e-12));
    y << std::sqrt(2.0);
    CHECK(log_marginal_likelihood(p, X, y) ==
          doctest::Approx(-1.7655121234846454).epsilon(1e-12));
}

TEST_CASE("zero targets drop the quadratic term") {
    KernelParams p;
    p.amplitude = 0.9;
    p.lengthscales = Eigen::VectorXd::Constant(1, 0.6);
    p.noise_variance = 0.2;
    testsupport::Rng rng(3);
    Eigen::MatrixXd X(1, 12);
    Eigen::VectorXd y(12);
    for (int i = 0; i < 12; ++i) {
        X(0, i) = rng.uniform(-1, 1);
        y[i] = rng.gaussian();
    }
    const double with_zero = log_marginal_likelihood(p, X, Eigen::VectorXd::Zero(12));
    const double scaled = log_marginal_likelihood(p, X, Eigen::VectorXd(0.0 * y));
    CHECK(with_zero == scaled);
}

TEST_CASE("log marginal likelihood is permutation invariant") {
    KernelParams p;
    p.amplitude = 1.1;
    p.lengthscales = Eigen::VectorXd::Constant(2, 0.9);
    p.noise_variance = 0.1;
    testsupport::Rng rng(77);
    const long n = 25;
    Eigen::MatrixXd X(2, n);
    Eigen::VectorXd y(n);
    for (long i = 0; i < n; ++i) {
        X(0, i) = rng.uniform(-1, 1);
        X(1, i) = rng.uniform(-1, 1);
        y[i] = rng.gaussian();
    }
    const double base = log_marginal_likelihood(p, X, y);
    // reverse the sample order
    Eigen::MatrixXd Xr = X.rowwise().reverse();
    Eigen::VectorXd yr = y.reverse();
    CHECK(log_marginal_likelihood(p, Xr, yr) == doctest::Approx(base).epsilon(1e-8));
}

TEST_CASE("incremental appends stay compatible with a fresh factorization") {
    KernelParams p;
    p.amplitude = 1.0;
    p.lengthscales = Eigen::VectorXd::Constant(2, 0.3);
    p.noise_variance = 0.01;
    testsupport::Rng rng(88);
    Dictionary grown(2, p);
    Eigen::MatrixXd X(2, 300);
    Eigen::VectorXd y(300);
    for (int t = 0; t < 300; ++t) {
        X(0, t) = rng.uniform(0, 1);
        X(1, t) = rng.uniform(0, 1);
        y[t] = rng.gaussian();
        grown = grown.appended(X.col(t), y[t]);
    }
    Dictionary fresh(X, y, p);
    CHECK(grown.factor().jitter == 0.0);
    CHECK((grown.factor().lower - fresh.factor().lower).cwiseAbs().maxCoeff() <= 1e-10);
    // the cached factor still reconstructs K + noise*I
    Eigen::MatrixXd K = kernel_matrix(p, X, X);
    K.diagonal().array() += p.noise_variance;
    CHECK((grown.factor().lower * grown.factor().lower.transpose() - K).norm() <=
          1e-8 * K.norm());
}

TEST_CASE("appending duplicates keeps the factor exact") {
    KernelParams p;
    p.amplitude = 1.0;
    p.lengthscales = Eigen::VectorXd::Constant(1, 0.5);
    p.noise_variance = 0.01;
    Dictionary dict(1, p);
    Eigen::VectorXd x = Eigen::VectorXd::Constant(1, 0.3);
    for (int t = 0; t < 25; ++t) dict = dict.appended(x, 1.0);
    CHECK(dict.model_order() == 25);
    Eigen::MatrixXd K = kernel_matrix(p, dict.inputs(), dict.inputs());
    K.diagonal().array() += p.noise_variance;
    Eigen::MatrixXd target = K;
    target.diagonal().array() += dict.factor().jitter;
    CHECK((dict.factor().lower * dict.factor().lower.transpose() - target).norm() <=
          1e-8 * K.norm());
}

TEST_CASE("dimension mismatches throw") {
    auto p = params1d();
    Dictionary dict(1, p);
    CHECK_THROWS_AS((void)posterior_predict(dict, p, Eigen::MatrixXd::Zero(2, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        (void)log_marginal_likelihood(p, Eigen::MatrixXd::Zero(1, 3), Eigen::VectorXd::Zero(2)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        (void)log_marginal_likelihood(p, Eigen::MatrixXd::Zero(1, 0), Eigen::VectorXd::Zero(0)),
        std::invalid_argument);
}

TEST_CASE("mismatched params are rejected against the cached factorization") {
    auto p = params1d();
    Eigen::MatrixXd X(1, 1);
    X << 0.0;
    Eigen::VectorXd y(1);
    y << 1.0;
    Dictionary dict(X, y, p);
    auto other = params1d(2.0);
    CHECK_THROWS_AS((void)posterior_predict(dict, other, X), std::invalid_argument);
}

}  // TEST_SUITE
