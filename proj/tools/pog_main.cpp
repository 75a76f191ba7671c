// Command-line front end: stream a CSV through the online GP (compressed or
// dense), tune kernel hyperparameters, or evaluate the Hellinger distance
// between two univariate Gaussians.

#include <CLI11.hpp>
#include <Eigen/Core>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pog/experiment.hpp"
#include "pog/gp.hpp"
#include "pog/hellinger.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitDataError = 3;
constexpr int kExitNumericalError = 4;

int run_command(const pog::ExperimentConfig& config) {
    pog::ExperimentResult result = pog::run_experiment(config);
    std::cerr << "steps=" << result.steps << " model_order=" << result.final_model_order
              << " final_smse=" << result.final_report.smse
              << " final_msll=" << result.final_report.msll << "\n";
    return 0;
}

int tune_command(const std::string& data_path, bool has_header, int subset,
                 unsigned long long seed) {
    pog::Dataset data = pog::load_dataset(data_path, has_header);
    const int effective = static_cast<int>(std::min<long>(subset, data.size()));
    pog::KernelParams params = pog::tune_hyperparameters(data.X, data.y, effective, seed);
    nlohmann::json j;
    j["amplitude"] = params.amplitude;
    j["lengthscales"] = std::vector<double>(
        params.lengthscales.data(), params.lengthscales.data() + params.lengthscales.size());
    j["noise_variance"] = params.noise_variance;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int hellinger_command(double mean1, double var1, double mean2, double var2) {
    pog::PredictiveGaussian g1{Eigen::VectorXd::Constant(1, mean1),
                               Eigen::MatrixXd::Constant(1, 1, var1)};
    pog::PredictiveGaussian g2{Eigen::VectorXd::Constant(1, mean2),
                               Eigen::MatrixXd::Constant(1, 1, var2)};
    std::cout << pog::hellinger_gaussian(g1, g2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parsimonious online Gaussian process regression"};
    app.require_subcommand(1);

    pog::ExperimentConfig config;
    std::string test_path;
    double split_fraction = 0.0;
    std::string algo = "pog";
    std::string schedule = "constant";
    std::string ref_mode = "newest";
    std::vector<double> lengthscales;
    double amplitude = 0.0;
    double noise = 0.0;

    auto* run = app.add_subcommand("run", "Stream a dataset through the online GP");
    run->add_option("--data", config.data_path, "Training CSV (last column is the target)")
        ->required();
    auto* test_opt = run->add_option("--test", test_path, "Held-out test CSV");
    auto* split_opt =
        run->add_option("--split", split_fraction, "Training fraction of --data rows (0, 1)");
    test_opt->excludes(split_opt);
    run->add_option("--algo", algo, "pog|dense")
        ->check(CLI::IsMember({"pog", "dense"}));
    run->add_option("--eps", config.eps0, "Compression budget eps0")
        ->check(CLI::NonNegativeNumber);
    run->add_option("--schedule", schedule, "constant|diminishing")
        ->check(CLI::IsMember({"constant", "diminishing"}));
    run->add_option("--tune", config.tune_subset, "Hyperparameter tuning subset size");
    run->add_option("--amplitude", amplitude, "Kernel amplitude override");
    run->add_option("--lengthscales", lengthscales, "Kernel lengthscale overrides")
        ->delimiter(',');
    run->add_option("--noise", noise, "Noise variance override");
    run->add_option("--seed", config.seed, "Random seed");
    run->add_option("--eval-every", config.eval_every, "Test-set evaluation period")
        ->check(CLI::PositiveNumber);
    run->add_option("--ref-mode", ref_mode, "newest | grid:<csv>");
    run->add_flag("--standardize", config.standardize_features,
                  "Standardize features with training statistics");
    run->add_flag("--standardize-targets", config.standardize_targets,
                  "Standardize targets with training statistics");
    run->add_flag("--shuffle", config.shuffle, "Seeded shuffle of the training stream");
    run->add_option("--epochs", config.epochs, "Number of passes over the training rows")
        ->check(CLI::PositiveNumber);
    run->add_option("--threads", config.threads, "Compression candidate threads")
        ->check(CLI::PositiveNumber);
    run->add_flag("--header", config.has_header, "Input CSVs carry a header row");
    run->add_flag("--timing", config.record_timing,
                  "Record wall-clock step timings (makes outputs run-dependent)");
    run->add_option("--out", config.output_path, "Output records CSV")->required();

    std::string tune_data;
    int tune_subset = 200;
    unsigned long long tune_seed = 42;
    bool tune_header = false;
    auto* tune = app.add_subcommand("tune", "Print tuned kernel parameters as JSON");
    tune->add_option("--data", tune_data, "Training CSV")->required();
    tune->add_option("--subset", tune_subset, "Tuning subset size")->check(CLI::PositiveNumber);
    tune->add_option("--seed", tune_seed, "Random seed");
    tune->add_flag("--header", tune_header, "Input CSV carries a header row");

    double mean1 = 0.0, var1 = 1.0, mean2 = 0.0, var2 = 1.0;
    auto* hell = app.add_subcommand("hellinger",
                                    "Closed-form Hellinger distance between two Gaussians");
    hell->add_option("--mean1", mean1)->required();
    hell->add_option("--var1", var1)->required();
    hell->add_option("--mean2", mean2)->required();
    hell->add_option("--var2", var2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    try {
        if (run->parsed()) {
            if (test_opt->count() > 0) config.test_path = test_path;
            if (split_opt->count() > 0) config.split_fraction = split_fraction;
            if (!config.test_path && !config.split_fraction) {
                std::cerr << "error: one of --test or --split is required\n";
                return kExitConfigError;
            }
            config.algo = (algo == "pog") ? pog::Algo::pog : pog::Algo::dense;
            config.schedule_kind = (schedule == "constant")
                                       ? pog::BudgetSchedule::Kind::constant
                                       : pog::BudgetSchedule::Kind::diminishing;
            if (ref_mode != "newest") {
                if (ref_mode.rfind("grid:", 0) != 0 || ref_mode.size() <= 5) {
                    std::cerr << "error: --ref-mode must be 'newest' or 'grid:<csv>'\n";
                    return kExitConfigError;
                }
                config.ref_grid_path = ref_mode.substr(5);
            }
            const bool any_override =
                amplitude > 0.0 || noise > 0.0 || !lengthscales.empty();
            if (any_override) {
                if (!(amplitude > 0.0) || !(noise > 0.0) || lengthscales.empty()) {
                    std::cerr << "error: kernel overrides need --amplitude, "
                                 "--lengthscales and --noise together\n";
                    return kExitConfigError;
                }
                pog::KernelParams params;
                params.amplitude = amplitude;
                params.noise_variance = noise;
                params.lengthscales = Eigen::Map<const Eigen::VectorXd>(
                    lengthscales.data(), static_cast<long>(lengthscales.size()));
                config.kernel_override = params;
            }
            return run_command(config);
        }
        if (tune->parsed()) {
            return tune_command(tune_data, tune_header, tune_subset, tune_seed);
        }
        if (hell->parsed()) {
            return hellinger_command(mean1, var1, mean2, var2);
        }
    } catch (const pog::ParseError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const pog::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitConfigError;
}
