#include "pog/compression.hpp"

#include <cassert>
#include <mutex>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "pog/gp.hpp"
#include "pog/hellinger.hpp"

namespace pog {

namespace {

// Leave-one-out predictive for candidate `j` of the current dictionary,
// using a downdated factor (O(M^2)) instead of a fresh factorization.
PredictiveGaussian leave_one_out_predictive(const Dictionary& dict, int j,
                                            const KernelParams& params,
                                            const Eigen::Ref<const Eigen::MatrixXd>& reference,
                                            bool use_downdate) {
    const int m = dict.model_order();
    if (!use_downdate) {
        Dictionary cand = dict.without(j);
        return posterior_predict(cand, reference);
    }
    Eigen::MatrixXd inputs(dict.feature_dim(), m - 1);
    Eigen::VectorXd targets(m - 1);
    int k = 0;
    for (int c = 0; c < m; ++c) {
        if (c == j) continue;
        inputs.col(k) = dict.inputs().col(c);
        targets[k] = dict.targets()[c];
        ++k;
    }
    CholeskyFactor factor = cholesky_delete(dict.factor(), j);
    Eigen::VectorXd alpha = factor.solve(targets);
    return detail::predict_with_factor(inputs, factor, alpha, params, reference);
}

template <typename F>
void parallel_for(int n, int threads, F&& body) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    const int workers = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (int i = w; i < n; i += workers) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

CompressionResult dhmp(const Dictionary& dict_in, const KernelParams& params,
                       const Eigen::Ref<const Eigen::MatrixXd>& reference,
                       double eps, const CompressionOptions& options) {
    if (!(eps >= 0.0)) {
        throw std::invalid_argument("dhmp: eps must be nonnegative");
    }
    if (reference.cols() == 0) {
        throw std::invalid_argument("dhmp: reference set must be nonempty");
    }
    if (reference.rows() != dict_in.feature_dim()) {
        throw std::invalid_argument("dhmp: reference feature dimension mismatch");
    }

    CompressionResult result{dict_in, 0.0, {}, {}};
    if (dict_in.model_order() == 0) {
        return result;
    }

    const PredictiveGaussian rho_in = posterior_predict(dict_in, reference);

    Dictionary current = dict_in;
    std::vector<int> original_ids(static_cast<size_t>(dict_in.model_order()));
    for (size_t i = 0; i < original_ids.size(); ++i) original_ids[i] = static_cast<int>(i);

    while (current.model_order() > 0) {
        const int m = current.model_order();
        // Downdating assumes the factored matrix is K + noise*I exactly; a
        // jittered factor would drift from the rebuild path, so skip it then.
        const bool downdate = options.use_downdate && current.factor().jitter == 0.0;

        std::vector<double> gamma(static_cast<size_t>(m));
        parallel_for(m, options.threads, [&](int j) {
            PredictiveGaussian pred =
                leave_one_out_predictive(current, j, params, reference, downdate);
            gamma[static_cast<size_t>(j)] = hellinger_gaussian(pred, rho_in);
        });

        std::vector<std::pair<int, double>> round;
        round.reserve(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) {
            round.emplace_back(original_ids[static_cast<size_t>(j)],
                               gamma[static_cast<size_t>(j)]);
        }
        result.candidate_errors_trace.push_back(std::move(round));

        // argmin; ties go to the lowest original index, which is the first
        // position reached since original_ids is ascending.
        int best = 0;
        for (int j = 1; j < m; ++j) {
            if (gamma[static_cast<size_t>(j)] < gamma[static_cast<size_t>(best)]) best = j;
        }
        if (gamma[static_cast<size_t>(best)] > eps) break;

        // Commit against the rebuilt dictionary so the returned distance is
        // measured on exactly the factorization the caller receives.
        Dictionary pruned = current.without(best);
        const double achieved =
            hellinger_gaussian(posterior_predict(pruned, reference), rho_in);
        if (achieved > eps) break;

        result.removed_indices.push_back(original_ids[static_cast<size_t>(best)]);
        original_ids.erase(original_ids.begin() + best);
        current = std::move(pruned);
        result.achieved_distance = achieved;
    }

    assert(result.achieved_distance <= eps);
    result.dictionary = std::move(current);
    return result;
}

}  // namespace pog
