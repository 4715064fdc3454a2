#pragma once

#include "kernellab/common.hpp"
#include "kernellab/eigensystem.hpp"
#include "kernellab/filters.hpp"
#include "kernellab/kernels.hpp"

namespace kernellab {

/// Kernel expansion f(x) = sum_i coefficients[i] K(x, X_i) produced by a
/// spectral algorithm. Immutable after fit; safe to share across threads.
struct FittedClassifier {
  KernelSpec kernel;
  PointSet train_points;
  Eigen::VectorXd coefficients;
  double nu = 0.0;
  Filter filter = Filter::gradient_flow();
};

/// Spectral-algorithm fit: with K(X,X)/n = V S V^T, the coefficients are
/// c = (1/n) V phi_nu(S) V^T y. Eigenvalues under the working floor
/// contribute nothing (their kernel rows vanish to solver precision anyway).
FittedClassifier fit(const KernelSpec& kernel, const PointSet& points,
                     const Eigen::VectorXd& labels, const Filter& filter, double nu);

double predict(const FittedClassifier& model, const Point& x);
Eigen::VectorXd predict(const FittedClassifier& model, const PointSet& points);

/// sign(f(x)) with sign(0) = +1.
int classify(const FittedClassifier& model, const Point& x);

/// Direct gradient-flow evaluation k_row^T K^{-1} (I - exp(-(t/n) K)) y,
/// computed through the eigendecomposition of K. Equals predict() of a
/// gradient-flow fit with nu = t up to solver precision, and serves as its
/// independent check. Throws SingularMatrixError when every eigenvalue of K
/// is under the floor.
double gradient_flow_closed_form(const GramMatrix& gram, const Eigen::VectorXd& labels,
                                 double t, const Eigen::VectorXd& k_row);

}  // namespace kernellab
