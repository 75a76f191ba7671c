#pragma once

#include <Eigen/Core>
#include <optional>
#include <utility>
#include <vector>

#include "pog/compression.hpp"
#include "pog/dictionary.hpp"
#include "pog/gp.hpp"
#include "pog/kernel.hpp"
#include "pog/predictive.hpp"

namespace pog {

// Per-step compression budget: constant eps_t = eps0, or diminishing
// eps_t = eps0 / t.
struct BudgetSchedule {
    enum class Kind { constant, diminishing };
    Kind kind = Kind::constant;
    double eps0 = 0.0;

    static BudgetSchedule constant(double eps0) { return {Kind::constant, eps0}; }
    static BudgetSchedule diminishing(double eps0) { return {Kind::diminishing, eps0}; }
};

// eps_t for step t >= 1; throws std::invalid_argument for t < 1.
double budget_at(const BudgetSchedule& schedule, long t);

// Per-step telemetry. smse/msll stay empty unless a harness fills them in;
// elapsed_micros is likewise owned by the harness (the core loop leaves 0).
struct StepRecord {
    long t = 0;
    int model_order = 0;
    double eps_t = 0.0;
    double step_hellinger = 0.0;
    std::optional<double> smse;
    std::optional<double> msll;
    long elapsed_micros = 0;
};

// Where the compression measures Hellinger error: at the newest sample alone
// (the default), or at a fixed reference grid (columns are points).
struct ReferenceMode {
    bool newest_only = true;
    Eigen::MatrixXd grid;

    static ReferenceMode newest() { return {}; }
    static ReferenceMode fixed_grid(Eigen::MatrixXd grid_points) {
        return {false, std::move(grid_points)};
    }
};

// Immutable state of the online loop. Advancing returns a new value; the
// input state is never mutated, so snapshots can be scored concurrently.
struct PogState {
    Dictionary dictionary;
    KernelParams params;
    BudgetSchedule schedule;
    ReferenceMode ref_mode;
    int threads = 1;
    long step_count = 0;
    // Predictive at the most recent sample, post-compression, pre-append.
    PredictiveGaussian last_predictive;
    std::vector<StepRecord> history;
};

PogState pog_init(const KernelParams& params, const BudgetSchedule& schedule,
                  int feature_dim, ReferenceMode ref_mode = ReferenceMode::newest(),
                  int threads = 1);

// One sample of the online loop: predictive at x from the current
// dictionary, compression within budget eps_t, then append (x, y). The
// newest point is always admitted.
PogState pog_step(const PogState& state, const Eigen::Ref<const Eigen::VectorXd>& x,
                  double y);

// Uncompressed sequential baseline: stores every sample, model order = t.
struct DenseState {
    Dictionary dictionary;
    KernelParams params;
    long step_count = 0;
};

DenseState dense_init(const KernelParams& params, int feature_dim);

// Predictive at x from the full history, then append (x, y).
std::pair<PredictiveGaussian, DenseState> dense_step(const DenseState& state,
                                                     const Eigen::Ref<const Eigen::VectorXd>& x,
                                                     double y);

}  // namespace pog
