// Python bindings for the core operations: kernel evaluation, posterior
// prediction, Hellinger distances, budgeted compression, and the online loop.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pog/compression.hpp"
#include "pog/dataset.hpp"
#include "pog/gp.hpp"
#include "pog/hellinger.hpp"
#include "pog/metrics.hpp"
#include "pog/pog.hpp"

namespace py = pybind11;
using namespace pog;

namespace {

PredictiveGaussian make_gaussian(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov) {
    return PredictiveGaussian{mean, cov};
}

}  // namespace

PYBIND11_MODULE(pog_core, m) {
    m.doc() = "Online Gaussian process regression with Hellinger-budget "
              "dictionary compression";

    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<KernelParams>(m, "KernelParams")
        .def(py::init([](double amplitude, const Eigen::VectorXd& lengthscales,
                         double noise_variance) {
                 KernelParams p{amplitude, lengthscales, noise_variance};
                 p.validate();
                 return p;
             }),
             py::arg("amplitude"), py::arg("lengthscales"), py::arg("noise_variance"))
        .def_readonly("amplitude", &KernelParams::amplitude)
        .def_property_readonly("lengthscales",
                               [](const KernelParams& p) { return p.lengthscales; })
        .def_readonly("noise_variance", &KernelParams::noise_variance)
        .def("__repr__", [](const KernelParams& p) {
            return "KernelParams(amplitude=" + std::to_string(p.amplitude) +
                   ", dim=" + std::to_string(p.feature_dim()) +
                   ", noise_variance=" + std::to_string(p.noise_variance) + ")";
        });

    py::class_<PredictiveGaussian>(m, "PredictiveGaussian")
        .def(py::init(&make_gaussian), py::arg("mean"), py::arg("covariance"))
        .def_readonly("mean", &PredictiveGaussian::mean)
        .def_readonly("covariance", &PredictiveGaussian::covariance)
        .def_property_readonly("dim", &PredictiveGaussian::dim);

    py::class_<Dictionary>(m, "Dictionary")
        .def(py::init<int, const KernelParams&>(), py::arg("feature_dim"), py::arg("params"))
        .def(py::init<Eigen::MatrixXd, Eigen::VectorXd, const KernelParams&>(),
             py::arg("inputs"), py::arg("targets"), py::arg("params"))
        .def_property_readonly("model_order", &Dictionary::model_order)
        .def_property_readonly("feature_dim", &Dictionary::feature_dim)
        .def_property_readonly("inputs", [](const Dictionary& d) { return d.inputs(); })
        .def_property_readonly("targets", [](const Dictionary& d) { return d.targets(); })
        .def("appended", &Dictionary::appended, py::arg("x"), py::arg("y"))
        .def("without", &Dictionary::without, py::arg("index"));

    m.def("kernel_eval", &kernel_eval, py::arg("params"), py::arg("x1"), py::arg("x2"));
    m.def("kernel_matrix", &kernel_matrix, py::arg("params"), py::arg("A"), py::arg("B"));
    m.def(
        "cholesky_factor",
        [](const Eigen::MatrixXd& S) {
            CholeskyFactor f = cholesky_factor(S);
            return py::make_tuple(f.lower, f.jitter);
        },
        py::arg("S"), "Lower Cholesky factor of S + jitter*I; returns (L, jitter)");
    m.def("posterior_predict",
          py::overload_cast<const Dictionary&, const KernelParams&,
                            const Eigen::Ref<const Eigen::MatrixXd>&>(&posterior_predict),
          py::arg("dictionary"), py::arg("params"), py::arg("Xstar"));
    m.def("log_marginal_likelihood", &log_marginal_likelihood, py::arg("params"),
          py::arg("X"), py::arg("y"));
    m.def("tune_hyperparameters", &tune_hyperparameters, py::arg("X"), py::arg("y"),
          py::arg("subset_size"), py::arg("seed"));

    m.def("hellinger_gaussian", &hellinger_gaussian, py::arg("g1"), py::arg("g2"));
    m.def("hellinger_quadrature", &hellinger_quadrature, py::arg("g1"), py::arg("g2"));

    py::class_<CompressionResult>(m, "CompressionResult")
        .def_readonly("dictionary", &CompressionResult::dictionary)
        .def_readonly("achieved_distance", &CompressionResult::achieved_distance)
        .def_readonly("removed_indices", &CompressionResult::removed_indices)
        .def_readonly("candidate_errors_trace", &CompressionResult::candidate_errors_trace);

    m.def(
        "dhmp",
        [](const Dictionary& dict, const KernelParams& params, const Eigen::MatrixXd& reference,
           double eps, int threads, bool use_downdate) {
            CompressionOptions options;
            options.threads = threads;
            options.use_downdate = use_downdate;
            return dhmp(dict, params, reference, eps, options);
        },
        py::arg("dictionary"), py::arg("params"), py::arg("reference"), py::arg("eps"),
        py::arg("threads") = 1, py::arg("use_downdate") = true);

    py::class_<BudgetSchedule>(m, "BudgetSchedule")
        .def_static("constant", &BudgetSchedule::constant, py::arg("eps0"))
        .def_static("diminishing", &BudgetSchedule::diminishing, py::arg("eps0"));
    m.def("budget_at", &budget_at, py::arg("schedule"), py::arg("t"));

    py::class_<StepRecord>(m, "StepRecord")
        .def_readonly("t", &StepRecord::t)
        .def_readonly("model_order", &StepRecord::model_order)
        .def_readonly("eps_t", &StepRecord::eps_t)
        .def_readonly("step_hellinger", &StepRecord::step_hellinger);

    py::class_<PogState>(m, "PogState")
        .def_readonly("step_count", &PogState::step_count)
        .def_readonly("last_predictive", &PogState::last_predictive)
        .def_readonly("history", &PogState::history)
        .def_property_readonly("dictionary",
                               [](const PogState& s) { return s.dictionary; })
        .def_property_readonly("model_order",
                               [](const PogState& s) { return s.dictionary.model_order(); });

    m.def(
        "pog_init",
        [](const KernelParams& params, const BudgetSchedule& schedule, int feature_dim,
           int threads) { return pog_init(params, schedule, feature_dim,
                                          ReferenceMode::newest(), threads); },
        py::arg("params"), py::arg("schedule"), py::arg("feature_dim"), py::arg("threads") = 1);
    m.def("pog_step", &pog_step, py::arg("state"), py::arg("x"), py::arg("y"));

    py::class_<DenseState>(m, "DenseState")
        .def_readonly("step_count", &DenseState::step_count)
        .def_property_readonly("dictionary",
                               [](const DenseState& s) { return s.dictionary; });
    m.def("dense_init", &dense_init, py::arg("params"), py::arg("feature_dim"));
    m.def("dense_step", &dense_step, py::arg("state"), py::arg("x"), py::arg("y"));

    py::class_<EvalReport>(m, "EvalReport")
        .def_readonly("smse", &EvalReport::smse)
        .def_readonly("msll", &EvalReport::msll)
        .def_readonly("n_test", &EvalReport::n_test)
        .def_readonly("train_target_variance", &EvalReport::train_target_variance);
    m.def("evaluate", &evaluate, py::arg("dictionary"), py::arg("params"), py::arg("X_test"),
          py::arg("y_test"), py::arg("train_var"));

    m.def(
        "load_dataset",
        [](const std::string& path, bool has_header) {
            Dataset d = load_dataset(path, has_header);
            return py::make_tuple(d.X, d.y);
        },
        py::arg("path"), py::arg("has_header") = false,
        "Load a CSV whose last column is the target; returns (X, y) with "
        "samples as columns of X");
    m.def(
        "standardize",
        [](const Eigen::MatrixXd& X_train, const Eigen::MatrixXd& X_test) {
            StandardizeResult s = standardize(X_train, X_test);
            return py::make_tuple(s.train, s.test, s.mean, s.scale);
        },
        py::arg("X_train"), py::arg("X_test"));
}
