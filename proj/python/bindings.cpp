#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kernellab/common.hpp"
#include "kernellab/data_synth.hpp"
#include "kernellab/dataset_io.hpp"
#include "kernellab/eigensystem.hpp"
#include "kernellab/estimator.hpp"
#include "kernellab/filters.hpp"
#include "kernellab/kernels.hpp"
#include "kernellab/risk.hpp"
#include "kernellab/smoothness.hpp"

namespace py = pybind11;
using namespace kernellab;

namespace {

RiskMethod make_method(const std::string& name, int points, int n_test, std::uint64_t seed) {
  if (name == "quadrature") return QuadratureMethod{points};
  if (name == "monte-carlo") return MonteCarloMethod{n_test, seed};
  throw DomainError("risk method must be 'quadrature' or 'monte-carlo'");
}

}  // namespace

PYBIND11_MODULE(_kernellab, m) {
  m.doc() = "Spectral kernel classifiers, smoothness estimation, and rate experiments";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
  py::register_exception<SingularMatrixError>(m, "SingularMatrixError", PyExc_RuntimeError);
  py::register_exception<DegenerateFitError>(m, "DegenerateFitError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<SearchExhaustedError>(m, "SearchExhaustedError", PyExc_RuntimeError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<LabelError>(m, "LabelError", PyExc_ValueError);
  py::register_exception<InsufficientDataError>(m, "InsufficientDataError", PyExc_ValueError);
  py::register_exception<ZeroImageError>(m, "ZeroImageError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<KernelSpec>(m, "KernelSpec")
      .def_static("min_kernel", &KernelSpec::min_kernel)
      .def_static("ntk", &KernelSpec::ntk, py::arg("depth"))
      .def_property_readonly("kappa_bound", &KernelSpec::kappa_bound)
      .def_property_readonly("name", &KernelSpec::name);

  m.def("ntk_kappa", &ntk_kappa, py::arg("order"), py::arg("u"));
  m.def("eval_kernel", &eval_kernel, py::arg("spec"), py::arg("x"), py::arg("x_prime"));
  m.def(
      "gram_matrix",
      [](const KernelSpec& spec, const PointSet& points) {
        return gram_matrix(spec, points).entries;
      },
      py::arg("spec"), py::arg("points"));

  py::class_<EigenSystem>(m, "EigenSystem")
      .def_property_readonly("lambdas",
                             [](const EigenSystem& s) {
                               return Eigen::Map<const Eigen::VectorXd>(
                                          s.lambdas.data(),
                                          static_cast<Eigen::Index>(s.lambdas.size()))
                                   .eval();
                             })
      .def_readonly("beta", &EigenSystem::beta)
      .def("eigenfunction",
           [](const EigenSystem& s, int j, const Point& x) { return s.eigenfunction(j, x); });
  m.def("min_kernel_eigensystem", &min_kernel_eigensystem, py::arg("j_max"));

  py::class_<EmpiricalSpectrum>(m, "EmpiricalSpectrum")
      .def_readonly("values", &EmpiricalSpectrum::values)
      .def_readonly("vectors", &EmpiricalSpectrum::vectors)
      .def_readonly("sample_size", &EmpiricalSpectrum::sample_size);
  m.def(
      "empirical_eigendecomposition",
      [](const Eigen::MatrixXd& gram) {
        GramMatrix g{gram, static_cast<int>(gram.rows())};
        return empirical_eigendecomposition(g);
      },
      py::arg("gram"));
  m.def("empirical_spectrum", &empirical_spectrum, py::arg("spec"), py::arg("points"),
        py::arg("top_k") = 0);
  m.def(
      "effective_dimension",
      [](const std::vector<double>& lambdas, double nu) {
        return effective_dimension(lambdas, nu);
      },
      py::arg("lambdas"), py::arg("nu"));
  m.def(
      "edr_fit",
      [](const std::vector<double>& lambdas, int j_begin, int j_end) {
        return edr_fit(lambdas, j_begin, j_end);
      },
      py::arg("lambdas"), py::arg("j_begin"), py::arg("j_end"));

  py::class_<Filter>(m, "Filter")
      .def_static("gradient_flow", &Filter::gradient_flow)
      .def_static("ridge", &Filter::ridge)
      .def_static("spectral_cutoff", &Filter::spectral_cutoff)
      .def_static("iterated_tikhonov", &Filter::iterated_tikhonov, py::arg("steps"))
      .def("phi", &Filter::phi, py::arg("nu"), py::arg("z"))
      .def("psi", &Filter::psi, py::arg("nu"), py::arg("z"))
      .def_property_readonly("qualification", &Filter::qualification)
      .def_property_readonly("name", &Filter::name);

  py::class_<FilterBoundsReport>(m, "FilterBoundsReport")
      .def_readonly("passed", &FilterBoundsReport::passed)
      .def_readonly("max_phi_margin", &FilterBoundsReport::max_phi_margin)
      .def_readonly("max_psi_margin", &FilterBoundsReport::max_psi_margin);
  m.def(
      "verify_filter_bounds",
      [](const Filter& filter, const std::vector<double>& nus, const std::vector<double>& alphas,
         const std::vector<double>& zs, double tau) {
        return verify_filter_bounds(filter, nus, alphas, zs, tau);
      },
      py::arg("filter"), py::arg("nu_grid"), py::arg("alpha_grid"), py::arg("z_grid"),
      py::arg("tau"));

  py::class_<FittedClassifier>(m, "FittedClassifier")
      .def_readonly("coefficients", &FittedClassifier::coefficients)
      .def_readonly("nu", &FittedClassifier::nu)
      .def("predict",
           [](const FittedClassifier& model, const Point& x) { return predict(model, x); })
      .def("predict_many",
           [](const FittedClassifier& model, const PointSet& points) {
             return predict(model, points);
           })
      .def("classify",
           [](const FittedClassifier& model, const Point& x) { return classify(model, x); });
  m.def("fit", &fit, py::arg("kernel"), py::arg("points"), py::arg("labels"), py::arg("filter"),
        py::arg("nu"));
  m.def(
      "gradient_flow_closed_form",
      [](const Eigen::MatrixXd& gram, const Eigen::VectorXd& labels, double t,
         const Eigen::VectorXd& k_row) {
        GramMatrix g{gram, static_cast<int>(gram.rows())};
        return gradient_flow_closed_form(g, labels, t, k_row);
      },
      py::arg("gram"), py::arg("labels"), py::arg("t"), py::arg("k_row"));

  py::class_<ConditionalModel>(m, "ConditionalModel")
      .def_property_readonly("dim", [](const ConditionalModel& m_) { return m_.dim; })
      .def("f_star", [](const ConditionalModel& m_, const Point& x) { return m_.f_star(x); });
  m.def("cosine_model", &cosine_model);
  m.def("constant_model", &constant_model, py::arg("level"));
  m.def("sample_classification", &sample_classification, py::arg("model"), py::arg("n"),
        py::arg("seed"));
  m.def("sample_regression", &sample_regression, py::arg("model"), py::arg("n"),
        py::arg("sigma"), py::arg("seed"));
  m.def("equispaced_design", &equispaced_design, py::arg("n"));
  m.def("bump_u", &bump_u, py::arg("x"));

  py::class_<HardInstance>(m, "HardInstance")
      .def_readonly("q", &HardInstance::q)
      .def_readonly("dim", &HardInstance::dim)
      .def_readonly("sr", &HardInstance::sr)
      .def_readonly("c_psi", &HardInstance::c_psi)
      .def_readonly("omega", &HardInstance::omega);
  m.def("make_hard_instance", &make_hard_instance, py::arg("q"), py::arg("dim"), py::arg("sr"),
        py::arg("c_psi"), py::arg("omega"));
  m.def("grid_center", &grid_center, py::arg("instance"), py::arg("cell"));
  m.def("cell_index", &cell_index, py::arg("instance"), py::arg("x"));
  m.def("psi", &psi, py::arg("instance"), py::arg("x"));
  m.def("varshamov_gilbert", &varshamov_gilbert, py::arg("m"), py::arg("seed"));
  m.def("hard_instance_model", &hard_instance_model, py::arg("instance"));

  m.def("projection_coefficients", &projection_coefficients, py::arg("spectrum"),
        py::arg("labels"));
  py::class_<SmoothnessEstimate>(m, "SmoothnessEstimate")
      .def_readonly("r_hat", &SmoothnessEstimate::r_hat)
      .def_readonly("s_hat", &SmoothnessEstimate::s_hat)
      .def_readonly("slope", &SmoothnessEstimate::slope)
      .def_readonly("intercept", &SmoothnessEstimate::intercept)
      .def_readonly("truncation", &SmoothnessEstimate::truncation)
      .def_readonly("n_used", &SmoothnessEstimate::n_used)
      .def_readonly("fit_residual", &SmoothnessEstimate::fit_residual);
  m.def(
      "truncation_estimate",
      [](const std::vector<double>& p, int truncation, double beta) {
        return truncation_estimate(p, truncation, beta);
      },
      py::arg("p"), py::arg("truncation"), py::arg("beta"));
  py::class_<RepeatedEstimate>(m, "RepeatedEstimate")
      .def_readonly("mean", &RepeatedEstimate::mean)
      .def_readonly("stddev", &RepeatedEstimate::stddev)
      .def_readonly("estimates", &RepeatedEstimate::estimates);
  m.def("repeated_estimate", &repeated_estimate, py::arg("data_source"), py::arg("kernel"),
        py::arg("n"), py::arg("truncation"), py::arg("beta"), py::arg("reps"),
        py::arg("base_seed"));

  m.def(
      "excess_risk",
      [](const ConditionalModel& model, const std::function<double(const Point&)>& classifier,
         const std::string& method, int points, int n_test, std::uint64_t seed) {
        return excess_risk(model, classifier, make_method(method, points, n_test, seed));
      },
      py::arg("model"), py::arg("classifier"), py::arg("method") = "quadrature",
      py::arg("points") = 10001, py::arg("n_test") = 100000, py::arg("seed") = 0);
  m.def("zero_one_risk", &zero_one_risk, py::arg("classifier"), py::arg("points"),
        py::arg("labels"));
  m.def("l2_risk", &l2_risk, py::arg("model"), py::arg("classifier"),
        py::arg("quadrature_points") = 10001);
  m.def("nu_rule", &nu_rule, py::arg("n"), py::arg("s"), py::arg("beta"),
        py::arg("constant") = 1.0);

  py::class_<RateStudyRow>(m, "RateStudyRow")
      .def_readonly("n", &RateStudyRow::n)
      .def_readonly("mean_excess_risk", &RateStudyRow::mean_excess_risk)
      .def_readonly("std_excess_risk", &RateStudyRow::std_excess_risk)
      .def_readonly("nu", &RateStudyRow::nu)
      .def_readonly("mean_l2_risk", &RateStudyRow::mean_l2_risk);
  py::class_<RateStudyResult>(m, "RateStudyResult")
      .def_readonly("rows", &RateStudyResult::rows)
      .def_readonly("fitted_slope", &RateStudyResult::fitted_slope)
      .def_readonly("theoretical_slope", &RateStudyResult::theoretical_slope)
      .def_readonly("fitted_l2_slope", &RateStudyResult::fitted_l2_slope);
  m.def(
      "rate_study",
      [](const ConditionalModel& model, const KernelSpec& kernel, const Filter& filter,
         const std::vector<int>& n_grid, double s, double beta, int reps, std::uint64_t seed,
         double nu_constant) {
        return rate_study(model, kernel, filter, n_grid, s, beta, reps, seed, nu_constant);
      },
      py::arg("model"), py::arg("kernel"), py::arg("filter"), py::arg("n_grid"), py::arg("s"),
      py::arg("beta"), py::arg("reps"), py::arg("base_seed"), py::arg("nu_constant") = 1.0);

  py::class_<IdxTensor>(m, "IdxTensor")
      .def_readonly("magic", &IdxTensor::magic)
      .def_readonly("dims", &IdxTensor::dims)
      .def_property_readonly("data", [](const IdxTensor& t) { return py::bytes(
          reinterpret_cast<const char*>(t.data.data()), t.data.size()); });
  py::class_<LabeledImages>(m, "LabeledImages")
      .def_readonly("labels", &LabeledImages::labels)
      .def_readonly("image_size", &LabeledImages::image_size)
      .def_readonly("source", &LabeledImages::source)
      .def_property_readonly("count", &LabeledImages::count);
  m.def("load_idx", &load_idx, py::arg("path"));
  m.def("from_idx", &from_idx, py::arg("images"), py::arg("labels"), py::arg("source"));
  m.def("load_cifar10", &load_cifar10, py::arg("path"));
  m.def("two_class_subset", &two_class_subset, py::arg("data"), py::arg("label_pos"),
        py::arg("label_neg"), py::arg("n"), py::arg("seed"));

  m.def("set_max_threads", &set_max_threads, py::arg("threads"));
}
