#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pog/dataset.hpp"
#include "pog/kernel.hpp"
#include "pog/metrics.hpp"
#include "pog/pog.hpp"

namespace pog {

enum class Algo { pog, dense };

struct ExperimentConfig {
    std::string data_path;
    bool has_header = false;

    // Exactly one of test_path / split_fraction must be set.
    std::optional<std::string> test_path;
    std::optional<double> split_fraction;  // fraction of rows used for training

    Algo algo = Algo::pog;
    double eps0 = 1e-3;
    BudgetSchedule::Kind schedule_kind = BudgetSchedule::Kind::constant;

    // Either explicit kernel parameters or a tuning subset size.
    std::optional<KernelParams> kernel_override;
    int tune_subset = 200;

    unsigned long long seed = 42;
    long eval_every = 50;
    std::optional<std::string> ref_grid_path;  // fixed-grid compression reference
    bool standardize_features = false;
    bool standardize_targets = false;
    bool shuffle = false;
    int epochs = 1;
    int threads = 1;
    // Wall-clock step timings make output files run-dependent, so they are
    // opt-in; without this flag elapsed_micros is written as 0.
    bool record_timing = false;

    std::string output_path;
};

struct ExperimentResult {
    std::vector<StepRecord> records;
    EvalReport final_report;  // averaged over the last (up to) 100 steps
    KernelParams params;
    int final_model_order = 0;
    long steps = 0;
};

// Streams the training rows through POG or the dense baseline, scoring the
// test set every eval_every steps and over the final 100 steps. Records are
// appended to the output CSV as they are produced; a sidecar JSON stores the
// resolved configuration, kernel parameters, and final report.
ExperimentResult run_experiment(const ExperimentConfig& config);

// CSV column order: t,model_order,eps_t,step_hellinger,smse,msll,elapsed_micros
std::string step_record_csv_header();
std::string step_record_csv_row(const StepRecord& record, bool with_timing);

}  // namespace pog
