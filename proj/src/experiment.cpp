#include "pog/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "pog/gp.hpp"

namespace pog {

namespace {

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

double population_variance(const Eigen::VectorXd& y) {
    if (y.size() == 0) return 0.0;
    return (y.array() - y.mean()).square().sum() / static_cast<double>(y.size());
}

nlohmann::json params_to_json(const KernelParams& params) {
    nlohmann::json j;
    j["amplitude"] = params.amplitude;
    j["lengthscales"] = std::vector<double>(
        params.lengthscales.data(), params.lengthscales.data() + params.lengthscales.size());
    j["noise_variance"] = params.noise_variance;
    return j;
}

std::string sidecar_path(const std::string& csv_path) {
    const size_t dot = csv_path.find_last_of('.');
    const size_t slash = csv_path.find_last_of("/\\");
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
        return csv_path.substr(0, dot) + ".json";
    }
    return csv_path + ".json";
}

}  // namespace

std::string step_record_csv_header() {
    return "t,model_order,eps_t,step_hellinger,smse,msll,elapsed_micros";
}

std::string step_record_csv_row(const StepRecord& r, bool with_timing) {
    std::ostringstream row;
    row << r.t << ',' << r.model_order << ',' << format_double(r.eps_t) << ','
        << format_double(r.step_hellinger) << ',';
    if (r.smse) row << format_double(*r.smse);
    row << ',';
    if (r.msll) row << format_double(*r.msll);
    row << ',' << (with_timing ? r.elapsed_micros : 0);
    return row.str();
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    if (config.test_path.has_value() == config.split_fraction.has_value()) {
        throw std::invalid_argument(
            "run_experiment: exactly one of test_path / split_fraction must be set");
    }
    if (config.split_fraction &&
        !(*config.split_fraction > 0.0 && *config.split_fraction < 1.0)) {
        throw std::invalid_argument("run_experiment: split_fraction must be in (0, 1)");
    }
    if (config.eval_every < 1) {
        throw std::invalid_argument("run_experiment: eval_every must be >= 1");
    }
    if (config.epochs < 1) {
        throw std::invalid_argument("run_experiment: epochs must be >= 1");
    }
    if (config.output_path.empty()) {
        throw std::invalid_argument("run_experiment: output_path required");
    }

    Dataset full = load_dataset(config.data_path, config.has_header);
    Eigen::MatrixXd X_train, X_test;
    Eigen::VectorXd y_train, y_test;
    if (config.test_path) {
        Dataset test = load_dataset(*config.test_path, config.has_header);
        if (test.feature_dim() != full.feature_dim()) {
            throw ParseError("test set feature dimension differs from training set");
        }
        X_train = full.X;
        y_train = full.y;
        X_test = test.X;
        y_test = test.y;
    } else {
        const long n = full.size();
        const long n_train = static_cast<long>(std::floor(*config.split_fraction *
                                                          static_cast<double>(n)));
        if (n_train < 1 || n_train >= n) {
            throw std::invalid_argument("run_experiment: degenerate train/test split");
        }
        X_train = full.X.leftCols(n_train);
        y_train = full.y.head(n_train);
        X_test = full.X.rightCols(n - n_train);
        y_test = full.y.tail(n - n_train);
    }

    if (config.standardize_features) {
        StandardizeResult s = standardize(X_train, X_test);
        X_train = std::move(s.train);
        X_test = std::move(s.test);
    }
    if (config.standardize_targets) {
        const double mean = y_train.mean();
        const double sd = std::sqrt(population_variance(y_train));
        if (sd > 0.0) {
            y_train = (y_train.array() - mean) / sd;
            y_test = (y_test.array() - mean) / sd;
        } else {
            std::cerr << "run_experiment: training targets have zero variance; "
                         "targets passed through unscaled\n";
        }
    }

    KernelParams params;
    if (config.kernel_override) {
        params = *config.kernel_override;
        params.validate();
        if (params.feature_dim() != X_train.rows()) {
            throw std::invalid_argument("run_experiment: kernel override dimension mismatch");
        }
    } else {
        const int subset =
            static_cast<int>(std::min<long>(config.tune_subset, y_train.size()));
        params = tune_hyperparameters(X_train, y_train, subset, config.seed);
    }

    const double train_var = population_variance(y_train);

    // Stream order: one seeded pass over the training rows, repeated per
    // epoch; later epochs re-see the same samples as new stream elements.
    std::vector<long> order;
    if (config.shuffle) {
        order = shuffled_indices(y_train.size(), config.seed);
    } else {
        order.resize(static_cast<size_t>(y_train.size()));
        for (long i = 0; i < y_train.size(); ++i) order[static_cast<size_t>(i)] = i;
    }
    const long total_steps = static_cast<long>(order.size()) * config.epochs;
    const long final_window_start = std::max<long>(1, total_steps - 100 + 1);

    std::ofstream out(config.output_path, std::ios::trunc);
    if (!out) {
        throw ParseError("cannot open output file: " + config.output_path);
    }
    out << step_record_csv_header() << '\n';
    out.flush();

    BudgetSchedule schedule{config.schedule_kind, config.eps0};
    ReferenceMode ref = ReferenceMode::newest();
    if (config.ref_grid_path) {
        ref = ReferenceMode::fixed_grid(load_matrix(*config.ref_grid_path, false));
    }

    PogState pog_state = pog_init(params, schedule, static_cast<int>(X_train.rows()), ref,
                                  config.threads);
    DenseState dense_state = dense_init(params, static_cast<int>(X_train.rows()));

    ExperimentResult result;
    result.params = params;

    std::vector<double> window_smse, window_msll;
    long t = 0;
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        for (long idx : order) {
            ++t;
            const Eigen::VectorXd x = X_train.col(idx);
            const double y = y_train[idx];

            const auto started = std::chrono::steady_clock::now();
            StepRecord record;
            if (config.algo == Algo::pog) {
                pog_state = pog_step(pog_state, x, y);
                record = pog_state.history.back();
            } else {
                auto [pred, next] = dense_step(dense_state, x, y);
                dense_state = std::move(next);
                record.t = t;
                record.model_order = dense_state.dictionary.model_order();
                record.eps_t = budget_at(schedule, t);
                record.step_hellinger = 0.0;
            }
            const auto elapsed = std::chrono::steady_clock::now() - started;
            record.elapsed_micros =
                std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();

            const Dictionary& dict = config.algo == Algo::pog ? pog_state.dictionary
                                                              : dense_state.dictionary;
            const bool in_final_window = t >= final_window_start;
            const bool scheduled_eval = (t % config.eval_every) == 0;
            if (in_final_window || scheduled_eval) {
                EvalReport report = evaluate(dict, params, X_test, y_test, train_var);
                if (scheduled_eval) {
                    record.smse = report.smse;
                    record.msll = report.msll;
                }
                if (in_final_window) {
                    window_smse.push_back(report.smse);
                    window_msll.push_back(report.msll);
                }
            }

            out << step_record_csv_row(record, config.record_timing) << '\n';
            out.flush();
            result.records.push_back(std::move(record));
        }
    }

    result.steps = t;
    result.final_model_order = config.algo == Algo::pog
                                   ? pog_state.dictionary.model_order()
                                   : dense_state.dictionary.model_order();
    result.final_report.n_test = y_test.size();
    result.final_report.train_target_variance = train_var;
    result.final_report.smse =
        pairwise_sum(window_smse.data(), static_cast<long>(window_smse.size())) /
        static_cast<double>(window_smse.size());
    result.final_report.msll =
        pairwise_sum(window_msll.data(), static_cast<long>(window_msll.size())) /
        static_cast<double>(window_msll.size());

    nlohmann::json side;
    side["config"] = {
        {"data", config.data_path},
        {"test", config.test_path ? nlohmann::json(*config.test_path) : nlohmann::json()},
        {"split", config.split_fraction ? nlohmann::json(*config.split_fraction)
                                        : nlohmann::json()},
        {"algo", config.algo == Algo::pog ? "pog" : "dense"},
        {"eps0", config.eps0},
        {"schedule",
         config.schedule_kind == BudgetSchedule::Kind::constant ? "constant" : "diminishing"},
        {"seed", config.seed},
        {"eval_every", config.eval_every},
        {"ref_mode", config.ref_grid_path ? "grid:" + *config.ref_grid_path : "newest"},
        {"standardize_features", config.standardize_features},
        {"standardize_targets", config.standardize_targets},
        {"shuffle", config.shuffle},
        {"epochs", config.epochs},
        {"threads", config.threads},
        {"tuned", !config.kernel_override.has_value()},
    };
    side["kernel_params"] = params_to_json(params);
    side["final_report"] = {{"smse", result.final_report.smse},
                            {"msll", result.final_report.msll},
                            {"n_test", result.final_report.n_test},
                            {"train_target_variance", train_var},
                            {"model_order", result.final_model_order},
                            {"steps", result.steps}};
    std::ofstream side_out(sidecar_path(config.output_path), std::ios::trunc);
    side_out << side.dump(2) << '\n';

    return result;
}

}  // namespace pog
