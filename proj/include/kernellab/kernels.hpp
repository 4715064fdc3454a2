#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "kernellab/common.hpp"
#include "kernellab/errors.hpp"

namespace kernellab {

/// Truncated Mercer expansion K(x,x') = sum_{j<order} lambdas[j] e_j(x) e_j(x').
/// Truncation error is the caller's responsibility.
struct MercerSeries {
  std::vector<double> lambdas;                           // descending, positive
  std::function<double(int, const Point&)> eigenfunction;  // j is zero-based
  int order = 0;
  double kappa_bound = 0.0;  // sup_x of the truncated diagonal
};

/// Declarative description of a positive-definite kernel.
///
/// Min:          K(x,x') = min(x,x') on scalars in [0,1].
/// Ntk(depth L): the depth-L ReLU tangent kernel on the unit sphere,
///               K(x,x') = sum_{r=0}^{L} kappa1^(r)(u) prod_{s=r}^{L-1} kappa0(kappa1^(s)(u))
///               with u = <x,x'> and kappa1^(0)(u) = u.
/// CustomMercer: a truncated Mercer series supplied by the caller.
class KernelSpec {
 public:
  enum class Kind { Min, Ntk, CustomMercer };

  static KernelSpec min_kernel();
  static KernelSpec ntk(int depth);
  static KernelSpec custom_mercer(MercerSeries series);

  Kind kind() const { return kind_; }
  int ntk_depth() const { return depth_; }
  double kappa_bound() const { return kappa_bound_; }
  const MercerSeries& mercer() const;
  std::string name() const;

  /// Throws DomainError if the point is outside this kernel's domain.
  void check_point(const Point& x) const;

 private:
  KernelSpec() = default;
  Kind kind_ = Kind::Min;
  int depth_ = 0;
  double kappa_bound_ = 1.0;
  std::shared_ptr<const MercerSeries> mercer_;
};

/// Arc-cosine kernels of order 0 and 1 used by the tangent-kernel recursion:
///   kappa0(u) = (pi - arccos u) / pi
///   kappa1(u) = (u (pi - arccos u) + sqrt(1 - u^2)) / pi
/// Inputs within 1e-12 of [-1,1] are clamped; anything further out throws DomainError.
double ntk_kappa(int order, double u);

/// K(x, x'). Symmetric in its arguments; K(x,x) <= kappa_bound.
double eval_kernel(const KernelSpec& spec, const Point& x, const Point& x_prime);

/// Symmetric kernel matrix over a point set.
struct GramMatrix {
  Eigen::MatrixXd entries;
  int n = 0;
};

/// Assemble K(X, X). Rows are computed in parallel; output is deterministic.
GramMatrix gram_matrix(const KernelSpec& spec, const PointSet& points);

/// One kernel row k(x, X) against a fitted point set.
Eigen::VectorXd kernel_row(const KernelSpec& spec, const Point& x, const PointSet& points);

}  // namespace kernellab
