#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <vector>

#include "pog/dataset.hpp"
#include "pog/gp.hpp"

namespace pog {

namespace {

double safe_objective(const KernelParams& params, const Eigen::MatrixXd& X,
                      const Eigen::VectorXd& y) {
    try {
        return log_marginal_likelihood(params, X, y);
    } catch (const NumericalError&) {
        return -std::numeric_limits<double>::infinity();
    }
}

}  // namespace

KernelParams tune_hyperparameters(const Eigen::Ref<const Eigen::MatrixXd>& X,
                                  const Eigen::Ref<const Eigen::VectorXd>& y,
                                  int subset_size, unsigned long long seed) {
    const long n = y.size();
    const long p = X.rows();
    if (X.cols() != n) {
        throw std::invalid_argument("tune_hyperparameters: X/y size mismatch");
    }
    if (subset_size < 1 || subset_size > n) {
        throw std::invalid_argument("tune_hyperparameters: subset_size must be in [1, n]");
    }

    std::vector<long> order = shuffled_indices(n, seed);
    Eigen::MatrixXd Xs(p, subset_size);
    Eigen::VectorXd ys(subset_size);
    for (int i = 0; i < subset_size; ++i) {
        Xs.col(i) = X.col(order[static_cast<size_t>(i)]);
        ys[i] = y[order[static_cast<size_t>(i)]];
    }

    const double var_y = (ys.array() - ys.mean()).square().sum() / subset_size;
    const double sigma_floor = 1e-6 * std::max(var_y, 1.0);

    KernelParams params;
    params.amplitude = std::max(var_y, 1e-6);
    params.noise_variance = std::max(0.1 * var_y, sigma_floor);
    params.lengthscales.resize(p);
    std::vector<bool> fixed(static_cast<size_t>(p), false);
    for (long i = 0; i < p; ++i) {
        const double mean = Xs.row(i).mean();
        const double sd = std::sqrt((Xs.row(i).array() - mean).square().sum() / subset_size);
        if (sd > 0.0) {
            params.lengthscales[i] = sd;
        } else {
            params.lengthscales[i] = 1.0;
            fixed[static_cast<size_t>(i)] = true;
            std::cerr << "tune_hyperparameters: feature " << i
                      << " has zero variance; lengthscale fixed at 1.0\n";
        }
    }

    const double steps[] = {4.0, 2.0, 1.5, 1.1, 1.0 / 1.1, 1.0 / 1.5, 0.5, 0.25};
    const double lo = 1e-8, hi = 1e8;
    const long n_coords = p + 2;  // amplitude, lengthscales, noise

    auto get = [&](long c) -> double {
        if (c == 0) return params.amplitude;
        if (c <= p) return params.lengthscales[c - 1];
        return params.noise_variance;
    };
    auto set = [&](long c, double v) {
        if (c == 0) {
            params.amplitude = v;
        } else if (c <= p) {
            params.lengthscales[c - 1] = v;
        } else {
            params.noise_variance = v;
        }
    };
    auto clamp_for = [&](long c, double v) -> double {
        if (c == n_coords - 1) return std::clamp(v, sigma_floor, hi);
        return std::clamp(v, lo, hi);
    };

    double current = safe_objective(params, Xs, ys);
    for (int sweep = 0; sweep < 50; ++sweep) {
        bool improved = false;
        for (long c = 0; c < n_coords; ++c) {
            if (c >= 1 && c <= p && fixed[static_cast<size_t>(c - 1)]) continue;
            const double base = get(c);
            double best_val = base;
            double best_obj = current;
            for (double f : steps) {
                const double trial = clamp_for(c, base * f);
                if (trial == base) continue;
                set(c, trial);
                const double obj = safe_objective(params, Xs, ys);
                if (obj > best_obj) {
                    best_obj = obj;
                    best_val = trial;
                }
            }
            set(c, best_val);
            if (best_obj > current) {
                current = best_obj;
                improved = true;
            }
        }
        if (!improved) break;
    }
    return params;
}

}  // namespace pog
