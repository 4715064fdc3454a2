#include "kernellab/risk.hpp"

#include <cmath>

#include "kernellab/errors.hpp"

namespace kernellab {

namespace {

inline int sign_of(double v) { return v >= 0.0 ? 1 : -1; }

double quadrature_expectation(const ConditionalModel& model, int points,
                              const std::function<double(const Point&, double)>& integrand) {
  if (model.dim != 1 || !model.density) {
    throw DomainError("quadrature risk: requires a one-dimensional model with a density");
  }
  if (points < 10) throw DomainError("quadrature risk: need at least 10 nodes");
  // composite trapezoid over equispaced nodes on [0,1], weighted by the density
  const double h = 1.0 / (points - 1);
  double total = 0.0;
  Point x(1);
  for (int i = 0; i < points; ++i) {
    x(0) = static_cast<double>(i) * h;
    const double w = (i == 0 || i == points - 1) ? 0.5 : 1.0;
    total += w * integrand(x, model.density(x));
  }
  return total * h;
}

}  // namespace

double excess_risk(const ConditionalModel& model, const Classifier& classifier,
                   const RiskMethod& method) {
  const auto loss = [&](const Point& x) {
    const double f_star = model.f_star(x);
    return sign_of(classifier(x)) != sign_of(f_star) ? std::abs(f_star) : 0.0;
  };
  if (const auto* quad = std::get_if<QuadratureMethod>(&method)) {
    return quadrature_expectation(
        model, quad->points,
        [&](const Point& x, double density) { return density > 0.0 ? loss(x) * density : 0.0; });
  }
  const auto& mc = std::get<MonteCarloMethod>(method);
  if (mc.n_test < 1) throw DomainError("excess_risk: n_test must be >= 1");
  Rng rng(mc.seed);
  double total = 0.0;
  for (int i = 0; i < mc.n_test; ++i) total += loss(model.sample_point(rng));
  return total / mc.n_test;
}

double zero_one_risk(const Classifier& classifier, const PointSet& points,
                     const Eigen::VectorXd& labels) {
  if (points.rows() < 1 || labels.size() != points.rows()) {
    throw DomainError("zero_one_risk: empty or mismatched test set");
  }
  int errors = 0;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    if (sign_of(classifier(points.row(i))) != sign_of(labels(i))) ++errors;
  }
  return static_cast<double>(errors) / static_cast<double>(points.rows());
}

double l2_risk(const ConditionalModel& model, const Classifier& classifier,
               int quadrature_points) {
  return quadrature_expectation(model, quadrature_points, [&](const Point& x, double density) {
    if (density <= 0.0) return 0.0;
    const double diff = classifier(x) - model.f_star(x);
    return diff * diff * density;
  });
}

double nu_rule(int n, double s, double beta, double constant) {
  if (n < 1) throw DomainError("nu_rule: n must be >= 1");
  if (!(s > 0.0)) throw DomainError("nu_rule: s must be positive");
  if (!(beta > 1.0)) throw DomainError("nu_rule: beta must exceed 1");
  if (!(constant > 0.0)) throw DomainError("nu_rule: constant must be positive");
  return constant * std::pow(static_cast<double>(n), beta / (s * beta + 1.0));
}

RateStudyResult rate_study(const ConditionalModel& model, const KernelSpec& kernel,
                           const Filter& filter, std::span<const int> n_grid, double s,
                           double beta, int reps, std::uint64_t base_seed, double nu_constant) {
  if (n_grid.size() < 3) throw DomainError("rate_study: need at least three sample sizes");
  for (int n : n_grid) {
    if (n < 32) throw DomainError("rate_study: each sample size must be >= 32");
  }
  if (reps < 3) throw DomainError("rate_study: reps must be >= 3");

  std::vector<int> sizes(n_grid.begin(), n_grid.end());
  std::sort(sizes.begin(), sizes.end());

  const bool use_quadrature = model.dim == 1 && static_cast<bool>(model.density);
  RateStudyResult result;
  result.theoretical_slope = -s * beta / (2.0 * (s * beta + 1.0));
  std::vector<double> log_n, log_risk, log_l2;
  std::uint64_t replicate_counter = 0;
  for (std::size_t gi = 0; gi < sizes.size(); ++gi) {
    const int n = sizes[gi];
    const double nu = nu_rule(n, s, beta, nu_constant);
    std::vector<double> risks, l2s;
    risks.reserve(static_cast<std::size_t>(reps));
    for (int rep = 0; rep < reps; ++rep, ++replicate_counter) {
      const std::uint64_t seed = base_seed + replicate_counter;
      try {
        auto [points, labels] = sample_classification(model, n, seed);
        const FittedClassifier fitted = fit(kernel, points, labels, filter, nu);
        const Classifier classifier = [&fitted](const Point& x) { return predict(fitted, x); };
        if (use_quadrature) {
          risks.push_back(excess_risk(model, classifier, QuadratureMethod{}));
          l2s.push_back(l2_risk(model, classifier, QuadratureMethod{}.points));
        } else {
          risks.push_back(excess_risk(model, classifier,
                     MonteCarloMethod{100000, seed + 0x9e3779b97f4a7c15ULL}));
        }
      } catch (const Error& error) {
        throw Error("rate_study n=" + std::to_string(n) + " replicate " + std::to_string(rep) +
                    ": " + error.what());
      }
    }
    const MeanStd stats = mean_std(risks);
    const MeanStd l2_stats = mean_std(l2s);
    result.rows.push_back(RateStudyRow{n, stats.mean, stats.stddev, nu, l2_stats.mean});
    log_n.push_back(std::log(static_cast<double>(n)));
    log_risk.push_back(std::log(std::max(stats.mean, 1e-300)));
    if (use_quadrature) log_l2.push_back(std::log(std::max(l2_stats.mean, 1e-300)));
  }
  result.fitted_slope = fit_line(log_n, log_risk).slope;
  if (!log_l2.empty()) result.fitted_l2_slope = fit_line(log_n, log_l2).slope;
  return result;
}

}  // namespace kernellab
