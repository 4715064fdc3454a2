#include "kernellab/smoothness.hpp"

#include <cmath>

#include "kernellab/errors.hpp"

namespace kernellab {

Eigen::VectorXd projection_coefficients(const EmpiricalSpectrum& spectrum,
                                        const Eigen::VectorXd& labels) {
  if (labels.size() != spectrum.vectors.rows()) {
    throw DomainError("projection_coefficients: label count does not match the spectrum");
  }
  return (spectrum.vectors.transpose() * labels).cwiseAbs();
}

SmoothnessEstimate truncation_estimate(std::span<const double> p, int truncation, double beta) {
  if (truncation < 3) throw DomainError("truncation_estimate: truncation must be >= 3");
  if (static_cast<int>(p.size()) < truncation) {
    throw DomainError("truncation_estimate: fewer coefficients than the truncation point");
  }
  if (!(beta > 1.0)) throw DomainError("truncation_estimate: beta must exceed 1");

  std::vector<double> log_j, log_p;
  log_j.reserve(static_cast<std::size_t>(truncation));
  log_p.reserve(static_cast<std::size_t>(truncation));
  for (int j = 0; j < truncation; ++j) {
    const double value = p[static_cast<std::size_t>(j)];
    if (value <= 1e-14) continue;  // excluded, not clipped: clipping would bias the slope
    log_j.push_back(std::log(static_cast<double>(j) + 1.0));
    log_p.push_back(std::log(value));
  }
  if (log_j.size() < 3) {
    throw DegenerateFitError("truncation_estimate: fewer than three usable coefficients");
  }
  const LineFit line = fit_line(log_j, log_p);

  SmoothnessEstimate estimate;
  estimate.slope = line.slope;
  estimate.intercept = line.intercept;
  estimate.r_hat = -line.slope;
  estimate.s_hat = (2.0 * estimate.r_hat - 1.0) / beta;
  estimate.truncation = truncation;
  estimate.n_used = line.n_used;
  estimate.fit_residual = line.rms_residual;
  return estimate;
}

RepeatedEstimate repeated_estimate(const LabeledSampler& data_source, const KernelSpec& kernel,
                                   int n, int truncation, double beta, int reps,
                                   std::uint64_t base_seed) {
  if (reps < 2) throw DomainError("repeated_estimate: reps must be >= 2");
  RepeatedEstimate out;
  out.estimates.assign(static_cast<std::size_t>(reps), 0.0);
  // replicates are independent; per-index slots keep the result identical
  // under any thread count
  parallel_for(reps, [&](std::int64_t rep) {
    try {
      auto [points, labels] = data_source(n, base_seed + static_cast<std::uint64_t>(rep));
      const EmpiricalSpectrum spectrum = empirical_spectrum(kernel, points, truncation);
      const Eigen::VectorXd p = projection_coefficients(spectrum, labels);
      const SmoothnessEstimate estimate =
          truncation_estimate(std::span<const double>(p.data(), static_cast<std::size_t>(p.size())),
                              truncation, beta);
      out.estimates[static_cast<std::size_t>(rep)] = estimate.s_hat;
    } catch (const Error& error) {
      throw Error("replicate " + std::to_string(rep) + ": " + error.what());
    }
  });
  const MeanStd stats = mean_std(out.estimates);
  out.mean = stats.mean;
  out.stddev = stats.stddev;
  return out;
}

}  // namespace kernellab
