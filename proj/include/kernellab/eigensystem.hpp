#pragma once

#include <functional>
#include <span>
#include <vector>

#include "kernellab/common.hpp"
#include "kernellab/kernels.hpp"

namespace kernellab {

/// Reference measure of a kernel-measure pair.
struct Measure {
  enum class Kind { UniformUnitInterval, UniformSphere };
  Kind kind = Kind::UniformUnitInterval;
  int dim = 1;
};

/// Analytic eigensystem of a kernel under its reference measure.
/// Eigenvalues are strictly positive and nonincreasing; indexing is zero-based.
struct EigenSystem {
  std::vector<double> lambdas;
  std::function<double(int, const Point&)> eigenfunction;
  double beta = 2.0;  // polynomial decay exponent of the eigenvalues
  Measure measure;

  /// Truncated Mercer series over the leading `order` eigenpairs.
  MercerSeries truncate(int order) const;
};

/// Eigensystem of the min kernel on [0,1] under the uniform measure:
///   lambda_j = ((2j+1) pi / 2)^{-2},  e_j(x) = sqrt(2) sin((2j+1) pi x / 2)
/// for zero-based j; the decay exponent is beta = 2.
EigenSystem min_kernel_eigensystem(int j_max);

/// Eigenpairs of K/n in descending order. `vectors` columns are orthonormal
/// and indexed in the original sample order. May hold only the leading k <= n
/// pairs when a partial decomposition was requested.
struct EmpiricalSpectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // n x k
  int sample_size = 0;
};

/// Dense symmetric eigendecomposition of G/n (all pairs, descending values,
/// ties broken by ascending position). Throws NumericalError if the solver
/// fails to converge.
EmpiricalSpectrum empirical_eigendecomposition(const GramMatrix& gram);

/// Spectrum of K(X,X)/n for a kernel and point set, without materializing the
/// Gram matrix when a structural shortcut exists. The min kernel on sorted
/// scalar inputs has an exactly tridiagonal inverse (unit-interval Brownian
/// covariance), so its spectrum is obtained from a tridiagonal solver; any
/// other input falls back to the dense route. Both routes agree to solver
/// precision. top_k = 0 requests all pairs.
EmpiricalSpectrum empirical_spectrum(const KernelSpec& spec, const PointSet& points, int top_k = 0);

/// Effective dimension N(nu) = sum_i lambda_i / (lambda_i + 1/nu).
/// Strictly increasing in nu, with values in (0, #lambdas).
double effective_dimension(std::span<const double> lambdas, double nu);

/// Decay exponent fitted by least squares of log lambda_j on log(j+1) over
/// zero-based indices [j_begin, j_end). Returns the negated slope.
/// Throws DegenerateFitError when all eigenvalues in the range are equal.
double edr_fit(std::span<const double> lambdas, int j_begin, int j_end);

/// Empirical eigenvalues below this fraction of the leading eigenvalue are
/// treated as zero by downstream filters and inversions.
inline constexpr double kEigenvalueFloorRatio = 1e-12;

}  // namespace kernellab
