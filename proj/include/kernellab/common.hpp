#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace kernellab {

/// A single input point. One-dimensional models use size-1 vectors.
using Point = Eigen::VectorXd;

/// A sample of n points, one per row.
using PointSet = Eigen::MatrixXd;

using Rng = std::mt19937_64;

/// Wrap a vector of scalars as an n x 1 point set.
PointSet scalar_points(std::span<const double> values);

/// Slope/intercept of an ordinary least-squares line through (x_i, y_i).
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
  int n_used = 0;
};

/// Least-squares line fit. Requires at least two points with distinct x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Cap on worker threads used by row-parallel loops. 0 restores the default
/// (hardware concurrency). Also forwarded to the BLAS backend when supported.
void set_max_threads(int threads);
int max_threads();

/// Run fn(i) for i in [0, count) across the configured number of threads.
/// Work is split into contiguous index blocks, so writes to per-index slots
/// are race-free and the result does not depend on scheduling.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn);

/// Sample mean and standard deviation (denominator n - 1).
struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;
};
MeanStd mean_std(std::span<const double> values);

}  // namespace kernellab
