#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "kernellab/common.hpp"
#include "kernellab/data_synth.hpp"
#include "kernellab/estimator.hpp"

namespace kernellab {

using Classifier = std::function<double(const Point&)>;

/// Equispaced nodes on [0,1] weighted by the model's density. Only valid for
/// one-dimensional models that expose a density.
struct QuadratureMethod {
  int points = 10001;
};

/// Sample average over a fresh draw from the model's marginal.
struct MonteCarloMethod {
  int n_test = 100000;
  std::uint64_t seed = 0;
};

using RiskMethod = std::variant<QuadratureMethod, MonteCarloMethod>;

/// E_X[ |f_star(X)| 1{sign(f(X)) != sign(f_star(X))} ] with sign(0) = +1 on
/// both sides: the gap between the classifier's 0-1 risk and the best
/// attainable one.
double excess_risk(const ConditionalModel& model, const Classifier& classifier,
                   const RiskMethod& method);

/// Fraction of test points with sign(f(X)) != Y, sign(0) = +1.
double zero_one_risk(const Classifier& classifier, const PointSet& points,
                     const Eigen::VectorXd& labels);

/// Quadrature estimate of the squared L2(mu) distance between the classifier
/// and the model's Bayes function.
double l2_risk(const ConditionalModel& model, const Classifier& classifier,
               int quadrature_points);

/// Regularization schedule nu = constant * n^{beta/(s beta + 1)}.
double nu_rule(int n, double s, double beta, double constant);

struct RateStudyRow {
  int n = 0;
  double mean_excess_risk = 0.0;
  double std_excess_risk = 0.0;
  double nu = 0.0;
  double mean_l2_risk = 0.0;  // companion squared-L2 track of the same fits
};

struct RateStudyResult {
  std::vector<RateStudyRow> rows;              // ascending n
  double fitted_slope = 0.0;                   // log mean excess risk vs log n
  double theoretical_slope = 0.0;              // -s beta / (2 (s beta + 1))
  double fitted_l2_slope = 0.0;                // log mean squared-L2 risk vs log n
};

/// For each n: draw `reps` training sets, fit with nu from nu_rule, and
/// average the excess risk (quadrature for one-dimensional models with a
/// density, Monte Carlo otherwise). Replicate seeds derive from base_seed so
/// runs are reproducible and replicates independent.
RateStudyResult rate_study(const ConditionalModel& model, const KernelSpec& kernel,
                           const Filter& filter, std::span<const int> n_grid, double s,
                           double beta, int reps, std::uint64_t base_seed,
                           double nu_constant = 1.0);

}  // namespace kernellab
