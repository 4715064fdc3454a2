#include "kernellab/estimator.hpp"

#include <cmath>

#include "kernellab/errors.hpp"

namespace kernellab {

FittedClassifier fit(const KernelSpec& kernel, const PointSet& points,
                     const Eigen::VectorXd& labels, const Filter& filter, double nu) {
  if (points.rows() < 1) throw DomainError("fit: need at least one training point");
  if (labels.size() != points.rows()) throw DomainError("fit: label/point count mismatch");
  if (!(nu > 0.0)) throw DomainError("fit: nu must be positive");

  const EmpiricalSpectrum spectrum = empirical_spectrum(kernel, points);
  const double n = static_cast<double>(spectrum.sample_size);
  const double floor = spectrum.values.size() > 0
                           ? kEigenvalueFloorRatio * std::max(spectrum.values(0), 0.0)
                           : 0.0;
  Eigen::VectorXd filtered = spectrum.vectors.transpose() * labels;
  for (Eigen::Index j = 0; j < filtered.size(); ++j) {
    const double value = spectrum.values(j);
    filtered(j) *= (value > floor) ? filter.phi(nu, value) : 0.0;
  }
  FittedClassifier model{kernel, points, (spectrum.vectors * filtered) / n, nu, filter};
  return model;
}

double predict(const FittedClassifier& model, const Point& x) {
  return kernel_row(model.kernel, x, model.train_points).dot(model.coefficients);
}

Eigen::VectorXd predict(const FittedClassifier& model, const PointSet& points) {
  Eigen::VectorXd out(points.rows());
  parallel_for(points.rows(), [&](std::int64_t i) {
    const Point x = points.row(i);
    out(i) = predict(model, x);
  });
  return out;
}

int classify(const FittedClassifier& model, const Point& x) {
  return predict(model, x) >= 0.0 ? 1 : -1;
}

double gradient_flow_closed_form(const GramMatrix& gram, const Eigen::VectorXd& labels,
                                 double t, const Eigen::VectorXd& k_row) {
  if (labels.size() != gram.n || k_row.size() != gram.n) {
    throw DomainError("gradient_flow_closed_form: size mismatch");
  }
  if (!(t >= 0.0)) throw DomainError("gradient_flow_closed_form: t must be nonnegative");

  // Eigenbasis of the unscaled matrix: K = U D U^T, value = sum over modes of
  // (1 - exp(-(t/n) d)) / d * (u^T y)(u^T k_row), dropping floored modes.
  // The decomposition of K/n has the same vectors with values d/n.
  const EmpiricalSpectrum eig = empirical_eigendecomposition(gram);
  if (eig.values.size() == 0 || !(eig.values(0) > 0.0)) {
    throw SingularMatrixError("gradient_flow_closed_form: all eigenvalues under the floor");
  }
  const double n = static_cast<double>(gram.n);
  const double floor = kEigenvalueFloorRatio * eig.values(0) * n;
  const double scale = t / n;
  const Eigen::VectorXd uy = eig.vectors.transpose() * labels;
  const Eigen::VectorXd uk = eig.vectors.transpose() * k_row;
  double total = 0.0;
  for (Eigen::Index j = 0; j < eig.values.size(); ++j) {
    const double d = eig.values(j) * n;
    if (!(d > floor)) continue;
    total += -std::expm1(-scale * d) / d * uy(j) * uk(j);
  }
  return total;
}

}  // namespace kernellab
