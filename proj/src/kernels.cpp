#include "kernellab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace kernellab {

namespace {

constexpr double kSphereTolerance = 1e-9;
constexpr double kKappaClamp = 1e-12;

double ntk_value(int depth, double ubar) {
  // K = sum_{r=0}^{L} k1[r] * prod_{s=r}^{L-1} kappa0(k1[s]), k1[0] = ubar.
  std::vector<double> k1(static_cast<std::size_t>(depth) + 1);
  k1[0] = ubar;
  for (int p = 1; p <= depth; ++p) k1[p] = ntk_kappa(1, k1[p - 1]);
  double total = k1[depth];
  double suffix = 1.0;
  for (int r = depth - 1; r >= 0; --r) {
    suffix *= ntk_kappa(0, k1[r]);
    total += k1[r] * suffix;
  }
  return total;
}

}  // namespace

KernelSpec KernelSpec::min_kernel() {
  KernelSpec spec;
  spec.kind_ = Kind::Min;
  spec.kappa_bound_ = 1.0;
  return spec;
}

KernelSpec KernelSpec::ntk(int depth) {
  if (depth < 1) throw DomainError("ntk: depth must be a positive integer");
  KernelSpec spec;
  spec.kind_ = Kind::Ntk;
  spec.depth_ = depth;
  spec.kappa_bound_ = static_cast<double>(depth) + 1.0;
  return spec;
}

KernelSpec KernelSpec::custom_mercer(MercerSeries series) {
  if (series.order < 1) throw DomainError("custom_mercer: truncation order must be >= 1");
  if (static_cast<int>(series.lambdas.size()) < series.order) {
    throw DomainError("custom_mercer: fewer eigenvalues than the truncation order");
  }
  if (!series.eigenfunction) throw DomainError("custom_mercer: missing eigenfunction evaluator");
  KernelSpec spec;
  spec.kind_ = Kind::CustomMercer;
  spec.kappa_bound_ = series.kappa_bound;
  spec.mercer_ = std::make_shared<const MercerSeries>(std::move(series));
  return spec;
}

const MercerSeries& KernelSpec::mercer() const {
  if (kind_ != Kind::CustomMercer || !mercer_) {
    throw DomainError("mercer: kernel is not a custom Mercer series");
  }
  return *mercer_;
}

std::string KernelSpec::name() const {
  switch (kind_) {
    case Kind::Min:
      return "min";
    case Kind::Ntk:
      return "ntk-" + std::to_string(depth_);
    case Kind::CustomMercer:
      return "mercer-" + std::to_string(mercer_->order);
  }
  return "unknown";
}

void KernelSpec::check_point(const Point& x) const {
  switch (kind_) {
    case Kind::Min: {
      if (x.size() != 1) throw DomainError("min kernel: points must be scalars");
      const double v = x(0);
      if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError("min kernel: point outside [0,1]");
      }
      return;
    }
    case Kind::Ntk: {
      const double norm = x.norm();
      if (std::abs(norm - 1.0) > kSphereTolerance) {
        throw DomainError("ntk kernel: point is not on the unit sphere");
      }
      return;
    }
    case Kind::CustomMercer:
      return;  // the series evaluator defines its own domain
  }
}

double ntk_kappa(int order, double u) {
  if (order != 0 && order != 1) throw DomainError("ntk_kappa: order must be 0 or 1");
  if (std::abs(u) > 1.0 + kKappaClamp) {
    throw DomainError("ntk_kappa: argument outside [-1, 1]");
  }
  u = std::clamp(u, -1.0, 1.0);
  const double angle = M_PI - std::acos(u);
  if (order == 0) return angle / M_PI;
  return (u * angle + std::sqrt(1.0 - u * u)) / M_PI;
}

double eval_kernel(const KernelSpec& spec, const Point& x, const Point& x_prime) {
  spec.check_point(x);
  spec.check_point(x_prime);
  switch (spec.kind()) {
    case KernelSpec::Kind::Min:
      return std::min(x(0), x_prime(0));
    case KernelSpec::Kind::Ntk: {
      if (x.size() != x_prime.size()) {
        throw DomainError("ntk kernel: points have different dimensions");
      }
      // identical points sit at angle zero by definition; arccos is infinitely
      // steep at 1, so the dot product's round-off would otherwise leak into
      // the diagonal
      const double inner = (x == x_prime) ? 1.0 : std::clamp(x.dot(x_prime), -1.0, 1.0);
      return ntk_value(spec.ntk_depth(), inner);
    }
    case KernelSpec::Kind::CustomMercer: {
      const MercerSeries& series = spec.mercer();
      double total = 0.0;
      for (int j = 0; j < series.order; ++j) {
        total += series.lambdas[j] * series.eigenfunction(j, x) * series.eigenfunction(j, x_prime);
      }
      return total;
    }
  }
  return 0.0;
}

GramMatrix gram_matrix(const KernelSpec& spec, const PointSet& points) {
  const Eigen::Index n = points.rows();
  if (n < 1) throw DomainError("gram_matrix: need at least one point");
  for (Eigen::Index i = 0; i < n; ++i) spec.check_point(points.row(i));

  GramMatrix gram;
  gram.n = static_cast<int>(n);
  switch (spec.kind()) {
    case KernelSpec::Kind::Min: {
      gram.entries.resize(n, n);
      parallel_for(n, [&](std::int64_t i) {
        const double xi = points(i, 0);
        for (Eigen::Index j = 0; j < n; ++j) gram.entries(i, j) = std::min(xi, points(j, 0));
      });
      break;
    }
    case KernelSpec::Kind::Ntk: {
      Eigen::MatrixXd inner = points * points.transpose();
      gram.entries.resize(n, n);
      const int depth = spec.ntk_depth();
      parallel_for(n, [&](std::int64_t i) {
        for (Eigen::Index j = 0; j < i; ++j) {
          gram.entries(i, j) = ntk_value(depth, std::clamp(inner(i, j), -1.0, 1.0));
        }
        gram.entries(i, i) = ntk_value(depth, 1.0);  // self-pairs sit at angle zero
      });
      // mirror the strictly lower triangle for exact symmetry
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) gram.entries(i, j) = gram.entries(j, i);
      break;
    }
    case KernelSpec::Kind::CustomMercer: {
      const MercerSeries& series = spec.mercer();
      Eigen::MatrixXd basis(n, series.order);
      parallel_for(n, [&](std::int64_t i) {
        for (int j = 0; j < series.order; ++j) basis(i, j) = series.eigenfunction(j, points.row(i));
      });
      Eigen::VectorXd lambdas =
          Eigen::Map<const Eigen::VectorXd>(series.lambdas.data(), series.order);
      gram.entries = basis * lambdas.asDiagonal() * basis.transpose();
      gram.entries = ((gram.entries + gram.entries.transpose()) / 2.0).eval();
      break;
    }
  }
  return gram;
}

Eigen::VectorXd kernel_row(const KernelSpec& spec, const Point& x, const PointSet& points) {
  Eigen::VectorXd row(points.rows());
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    row(i) = eval_kernel(spec, x, points.row(i));
  }
  return row;
}

}  // namespace kernellab
