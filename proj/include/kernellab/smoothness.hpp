#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "kernellab/common.hpp"
#include "kernellab/eigensystem.hpp"
#include "kernellab/kernels.hpp"

namespace kernellab {

/// Projection magnitudes p_j = |y^T v_j| against the empirical eigenvectors,
/// ordered by descending eigenvalue. Eigenvector signs are arbitrary, hence
/// the absolute value.
Eigen::VectorXd projection_coefficients(const EmpiricalSpectrum& spectrum,
                                        const Eigen::VectorXd& labels);

/// Result of fitting the decay of projection coefficients: slope of
/// log p_j on log j over the leading `truncation` indices, r_hat = -slope,
/// and the derived relative smoothness s_hat = (2 r_hat - 1)/beta.
struct SmoothnessEstimate {
  double r_hat = 0.0;
  double s_hat = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  int truncation = 0;
  int n_used = 0;
  double fit_residual = 0.0;
};

/// Log-log least squares on p_1..p_truncation (one-based index against
/// magnitude). Entries at or below 1e-14 are excluded rather than clipped;
/// fewer than three usable entries raise DegenerateFitError.
SmoothnessEstimate truncation_estimate(std::span<const double> p, int truncation, double beta);

/// Produces one labeled sample of the requested size for a given seed.
using LabeledSampler =
    std::function<std::pair<PointSet, Eigen::VectorXd>(int n, std::uint64_t seed)>;

struct RepeatedEstimate {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, denominator reps - 1
  std::vector<double> estimates;
};

/// Full pipeline per replicate r = 0..reps-1 with seed base_seed + r:
/// draw (X, y), decompose K(X,X)/n, project, fit the truncated decay.
/// Replicate errors are rethrown with the replicate index attached.
RepeatedEstimate repeated_estimate(const LabeledSampler& data_source, const KernelSpec& kernel,
                                   int n, int truncation, double beta, int reps,
                                   std::uint64_t base_seed);

}  // namespace kernellab
