#include "pog/hellinger.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pog/linalg.hpp"

namespace pog {

namespace {

void check_pair(const PredictiveGaussian& g1, const PredictiveGaussian& g2) {
    const long r = g1.mean.size();
    if (g2.mean.size() != r || g1.covariance.rows() != r || g1.covariance.cols() != r ||
        g2.covariance.rows() != r || g2.covariance.cols() != r) {
        throw std::invalid_argument("hellinger: dimension mismatch");
    }
    if (r == 0) {
        throw std::invalid_argument("hellinger: empty Gaussian");
    }
    if (!g1.mean.allFinite() || !g2.mean.allFinite() || !g1.covariance.allFinite() ||
        !g2.covariance.allFinite()) {
        throw std::invalid_argument("hellinger: non-finite input");
    }
}

double gaussian_density(double x, double mean, double var) {
    const double d = x - mean;
    return std::exp(-0.5 * d * d / var) / std::sqrt(2.0 * M_PI * var);
}

// Composite Simpson over [a, b] with an even number of intervals.
template <typename F>
double simpson(F&& f, double a, double b, long intervals) {
    const double h = (b - a) / static_cast<double>(intervals);
    double odd = 0.0, even = 0.0;
    for (long i = 1; i < intervals; i += 2) odd += f(a + h * static_cast<double>(i));
    for (long i = 2; i < intervals; i += 2) even += f(a + h * static_cast<double>(i));
    return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

}  // namespace

double hellinger_gaussian(const PredictiveGaussian& g1, const PredictiveGaussian& g2) {
    check_pair(g1, g2);
    const long r = g1.mean.size();

    // log of the determinant ratio |Sbar| / sqrt(|S1| |S2|), guaranteed
    // nonnegative. The univariate case is written via log1p of an explicit
    // square so it stays exact down to zero.
    double log_ratio;
    Eigen::VectorXd diff = g1.mean - g2.mean;
    double maha;  // diff^T Sbar^{-1} diff
    if (r == 1) {
        const double s1 = g1.covariance(0, 0);
        const double s2 = g2.covariance(0, 0);
        if (!(s1 > 0.0) || !(s2 > 0.0)) {
            throw std::invalid_argument("hellinger: non-positive variance");
        }
        const double root1 = std::sqrt(s1);
        const double root2 = std::sqrt(s2);
        const double gap = root1 - root2;
        log_ratio = std::log1p(gap * gap / (2.0 * root1 * root2));
        maha = diff[0] * diff[0] / (0.5 * (s1 + s2));
    } else {
        CholeskyFactor f1 = cholesky_factor(g1.covariance);
        CholeskyFactor f2 = cholesky_factor(g2.covariance);
        Eigen::MatrixXd sbar = 0.5 * (g1.covariance + g2.covariance);
        CholeskyFactor fbar = cholesky_factor(sbar);
        log_ratio = std::max(0.0, fbar.log_det() - 0.5 * (f1.log_det() + f2.log_det()));
        maha = fbar.solve_lower(diff).squaredNorm();
    }

    const double log_bc = -0.5 * log_ratio - 0.125 * maha;
    const double one_minus_bc = -std::expm1(log_bc);
    return std::sqrt(std::clamp(one_minus_bc, 0.0, 1.0));
}

double hellinger_quadrature(const PredictiveGaussian& g1, const PredictiveGaussian& g2) {
    check_pair(g1, g2);
    const long r = g1.mean.size();
    if (r > 2) {
        throw std::invalid_argument("hellinger_quadrature: only dimensions 1 and 2 supported");
    }
    for (long i = 0; i < r; ++i) {
        for (long j = 0; j < r; ++j) {
            if (i == j) continue;
            const double scale = std::sqrt(g1.covariance(i, i) * g1.covariance(j, j));
            if (std::abs(g1.covariance(i, j)) > 1e-12 * scale ||
                std::abs(g2.covariance(i, j)) > 1e-12 * scale) {
                throw std::invalid_argument("hellinger_quadrature: covariance must be diagonal");
            }
        }
    }

    // Integration box: +-10 standard deviations of the equal-weight mixture
    // around its mean, per axis.
    Eigen::VectorXd lo(r), hi(r);
    for (long i = 0; i < r; ++i) {
        const double center = 0.5 * (g1.mean[i] + g2.mean[i]);
        const double gap = 0.5 * (g1.mean[i] - g2.mean[i]);
        const double pooled =
            std::sqrt(0.5 * (g1.covariance(i, i) + g2.covariance(i, i)) + gap * gap);
        lo[i] = center - 10.0 * pooled;
        hi[i] = center + 10.0 * pooled;
    }

    double integral;
    if (r == 1) {
        auto integrand = [&](double x) {
            const double a = std::sqrt(gaussian_density(x, g1.mean[0], g1.covariance(0, 0)));
            const double b = std::sqrt(gaussian_density(x, g2.mean[0], g2.covariance(0, 0)));
            return 0.5 * (a - b) * (a - b);
        };
        // Refine by doubling until two successive estimates agree.
        long intervals = 2048;
        integral = simpson(integrand, lo[0], hi[0], intervals);
        for (int k = 0; k < 8; ++k) {
            intervals *= 2;
            const double next = simpson(integrand, lo[0], hi[0], intervals);
            const double delta = std::abs(next - integral);
            integral = next;
            if (delta <= 1e-13 * std::max(1.0, std::abs(next))) break;
        }
    } else {
        const long nodes = 2048;
        auto inner = [&](double x0) {
            const double a0 = gaussian_density(x0, g1.mean[0], g1.covariance(0, 0));
            const double b0 = gaussian_density(x0, g2.mean[0], g2.covariance(0, 0));
            auto integrand = [&](double x1) {
                const double a =
                    std::sqrt(a0 * gaussian_density(x1, g1.mean[1], g1.covariance(1, 1)));
                const double b =
                    std::sqrt(b0 * gaussian_density(x1, g2.mean[1], g2.covariance(1, 1)));
                return 0.5 * (a - b) * (a - b);
            };
            return simpson(integrand, lo[1], hi[1], nodes);
        };
        integral = simpson(inner, lo[0], hi[0], nodes);
    }
    return std::sqrt(std::max(integral, 0.0));
}

}  // namespace pog
