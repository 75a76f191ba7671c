#include "pog/pog.hpp"

#include <stdexcept>

namespace pog {

double budget_at(const BudgetSchedule& schedule, long t) {
    if (t < 1) {
        throw std::invalid_argument("budget_at: step index must be >= 1");
    }
    switch (schedule.kind) {
        case BudgetSchedule::Kind::constant:
            return schedule.eps0;
        case BudgetSchedule::Kind::diminishing:
            return schedule.eps0 / static_cast<double>(t);
    }
    throw std::invalid_argument("budget_at: unknown schedule kind");
}

PogState pog_init(const KernelParams& params, const BudgetSchedule& schedule,
                  int feature_dim, ReferenceMode ref_mode, int threads) {
    if (!ref_mode.newest_only && ref_mode.grid.cols() == 0) {
        throw std::invalid_argument("pog_init: fixed-grid reference mode needs grid points");
    }
    PogState state{Dictionary(feature_dim, params), params,          schedule,
                   std::move(ref_mode),             std::max(1, threads), 0,
                   PredictiveGaussian{},            {}};
    return state;
}

PogState pog_step(const PogState& state, const Eigen::Ref<const Eigen::VectorXd>& x,
                  double y) {
    if (x.size() != state.dictionary.feature_dim()) {
        throw std::invalid_argument("pog_step: feature dimension mismatch");
    }
    const long t = state.step_count + 1;
    const double eps_t = budget_at(state.schedule, t);

    Eigen::MatrixXd newest(x.size(), 1);
    newest.col(0) = x;
    const Eigen::MatrixXd& reference = state.ref_mode.newest_only ? newest : state.ref_mode.grid;

    CompressionOptions opts;
    opts.threads = state.threads;
    CompressionResult compressed = dhmp(state.dictionary, state.params, reference, eps_t, opts);

    PogState next = state;
    next.step_count = t;
    next.last_predictive = posterior_predict(compressed.dictionary, newest);
    next.dictionary = compressed.dictionary.appended(x, y);

    StepRecord record;
    record.t = t;
    record.model_order = next.dictionary.model_order();
    record.eps_t = eps_t;
    record.step_hellinger = compressed.achieved_distance;
    next.history.push_back(record);
    return next;
}

DenseState dense_init(const KernelParams& params, int feature_dim) {
    return DenseState{Dictionary(feature_dim, params), params, 0};
}

std::pair<PredictiveGaussian, DenseState> dense_step(const DenseState& state,
                                                     const Eigen::Ref<const Eigen::VectorXd>& x,
                                                     double y) {
    if (x.size() != state.dictionary.feature_dim()) {
        throw std::invalid_argument("dense_step: feature dimension mismatch");
    }
    Eigen::MatrixXd newest(x.size(), 1);
    newest.col(0) = x;
    PredictiveGaussian predictive = posterior_predict(state.dictionary, newest);
    DenseState next{state.dictionary.appended(x, y), state.params, state.step_count + 1};
    return {std::move(predictive), std::move(next)};
}

}  // namespace pog
