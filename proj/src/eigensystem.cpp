#include "kernellab/eigensystem.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kernellab/errors.hpp"

namespace kernellab {

MercerSeries EigenSystem::truncate(int order) const {
  if (order < 1 || order > static_cast<int>(lambdas.size())) {
    throw DomainError("truncate: order outside the available eigenvalues");
  }
  MercerSeries series;
  series.lambdas.assign(lambdas.begin(), lambdas.begin() + order);
  series.eigenfunction = eigenfunction;
  series.order = order;
  // kappa for the truncated diagonal: sup sum lambda_j e_j(x)^2 <= 2 sum lambda_j
  // for the sine system (|e_j| <= sqrt(2)); callers may tighten it.
  double total = 0.0;
  for (int j = 0; j < order; ++j) total += series.lambdas[j];
  series.kappa_bound = 2.0 * total;
  return series;
}

EigenSystem min_kernel_eigensystem(int j_max) {
  if (j_max < 1) throw DomainError("min_kernel_eigensystem: j_max must be >= 1");
  EigenSystem system;
  system.lambdas.resize(j_max);
  for (int j = 0; j < j_max; ++j) {
    const double freq = (2.0 * j + 1.0) * M_PI / 2.0;
    system.lambdas[j] = 1.0 / (freq * freq);
  }
  system.eigenfunction = [](int j, const Point& x) {
    return std::sqrt(2.0) * std::sin((2.0 * j + 1.0) * M_PI * x(0) / 2.0);
  };
  system.beta = 2.0;
  system.measure = Measure{Measure::Kind::UniformUnitInterval, 1};
  return system;
}

namespace {

// Reorder eigenpairs from LAPACK's ascending output to descending values,
// breaking exact ties by ascending original position.
EmpiricalSpectrum descending_spectrum(const Eigen::VectorXd& values_asc,
                                      const Eigen::MatrixXd& vectors_asc, int n) {
  const Eigen::Index k = values_asc.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return values_asc(a) > values_asc(b);
  });
  EmpiricalSpectrum spectrum;
  spectrum.sample_size = n;
  spectrum.values.resize(k);
  spectrum.vectors.resize(vectors_asc.rows(), k);
  for (Eigen::Index j = 0; j < k; ++j) {
    spectrum.values(j) = values_asc(order[static_cast<std::size_t>(j)]);
    spectrum.vectors.col(j) = vectors_asc.col(order[static_cast<std::size_t>(j)]);
  }
  return spectrum;
}

EmpiricalSpectrum dense_spectrum(const Eigen::MatrixXd& scaled, int top_k) {
  const int n = static_cast<int>(scaled.rows());
  Eigen::MatrixXd work = scaled;
  if (top_k <= 0 || top_k >= n) {
    Eigen::VectorXd values(n);
    const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, work.data(), n,
                                           values.data());
    if (info != 0) {
      throw NumericalError("dense eigensolver failed to converge (dsyevd info=" +
                           std::to_string(info) + ")");
    }
    return descending_spectrum(values, work, n);
  }
  Eigen::VectorXd values(n);
  Eigen::MatrixXd vectors(n, top_k);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(top_k));
  lapack_int found = 0;
  const lapack_int info =
      LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, work.data(), n, 0.0, 0.0,
                     n - top_k + 1, n, 0.0, &found, values.data(), vectors.data(), n,
                     isuppz.data());
  if (info != 0 || found != top_k) {
    throw NumericalError("dense eigensolver failed to converge (dsyevr info=" +
                         std::to_string(info) + ")");
  }
  return descending_spectrum(values.head(top_k), vectors, n);
}

// The min kernel on sorted scalars 0 < x_1 < ... < x_n is the covariance of a
// standard Brownian path, whose precision matrix is tridiagonal:
//   (K^{-1})_{ii} = 1/g_i + 1/g_{i+1} (last row: 1/g_n),
//   (K^{-1})_{i,i+1} = -1/g_{i+1},  g_i = x_i - x_{i-1}, x_0 = 0.
// Eigenpairs of K/n are the reciprocals of n K^{-1}'s, with identical vectors.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // length n (last entry unused, as LAPACK requires)
};

bool build_min_kernel_tridiagonal(const Eigen::VectorXd& sorted, Tridiagonal* out) {
  const Eigen::Index n = sorted.size();
  const double n_d = static_cast<double>(n);
  out->diag.resize(static_cast<std::size_t>(n));
  out->off.assign(static_cast<std::size_t>(n), 0.0);
  double prev = 0.0;
  std::vector<double> inv_gap(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double gap = sorted(i) - prev;
    if (!(gap > 1e-300)) return false;  // duplicates or x = 0: use the dense route
    inv_gap[static_cast<std::size_t>(i)] = 1.0 / gap;
    prev = sorted(i);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const double next = (i + 1 < n) ? inv_gap[static_cast<std::size_t>(i) + 1] : 0.0;
    out->diag[static_cast<std::size_t>(i)] = n_d * (inv_gap[static_cast<std::size_t>(i)] + next);
  }
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    out->off[static_cast<std::size_t>(i)] = -n_d * inv_gap[static_cast<std::size_t>(i) + 1];
  }
  return true;
}

bool tridiagonal_eigensolve(Tridiagonal tri, int n, int top_k, Eigen::VectorXd* values,
                            Eigen::MatrixXd* vectors) {
  if (top_k > 0 && top_k < n) {
    Eigen::VectorXd w(n);
    Eigen::MatrixXd z(n, top_k);
    std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(top_k));
    lapack_int found = 0;
    lapack_int tryrac = 1;
    Tridiagonal copy = tri;  // dstemr overwrites its input
    const lapack_int info =
        LAPACKE_dstemr(LAPACK_COL_MAJOR, 'V', 'I', n, copy.diag.data(), copy.off.data(), 0.0,
                       0.0, 1, top_k, &found, w.data(), z.data(), n, top_k, isuppz.data(),
                       &tryrac);
    if (info == 0 && found == top_k) {
      *values = w.head(top_k);
      *vectors = std::move(z);
      return true;
    }
    // fall through to the full divide-and-conquer solve
  }
  Eigen::MatrixXd z(n, n);
  const lapack_int info =
      LAPACKE_dstevd(LAPACK_COL_MAJOR, 'V', n, tri.diag.data(), tri.off.data(), z.data(), n);
  if (info != 0) {
    throw NumericalError("tridiagonal eigensolver failed (dstevd info=" + std::to_string(info) +
                         ")");
  }
  const int k = (top_k > 0 && top_k < n) ? top_k : n;
  *values = Eigen::Map<const Eigen::VectorXd>(tri.diag.data(), n).head(k);
  *vectors = z.leftCols(k);
  return true;
}

EmpiricalSpectrum min_kernel_spectrum_sorted(const PointSet& points, int top_k) {
  const Eigen::Index n = points.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index a, Eigen::Index b) { return points(a, 0) < points(b, 0); });
  Eigen::VectorXd sorted(n);
  for (Eigen::Index i = 0; i < n; ++i) sorted(i) = points(order[static_cast<std::size_t>(i)], 0);

  Tridiagonal tri;
  if (!build_min_kernel_tridiagonal(sorted, &tri)) {
    return {};  // caller falls back to the dense route
  }
  Eigen::VectorXd w;
  Eigen::MatrixXd z;
  tridiagonal_eigensolve(std::move(tri), static_cast<int>(n), top_k, &w, &z);

  // Smallest precision eigenvalues correspond to the leading kernel
  // eigenvalues; restore the original sample order on the vector rows.
  EmpiricalSpectrum spectrum;
  spectrum.sample_size = static_cast<int>(n);
  const Eigen::Index k = w.size();
  spectrum.values.resize(k);
  spectrum.vectors.resize(n, k);
  for (Eigen::Index j = 0; j < k; ++j) spectrum.values(j) = 1.0 / w(j);
  for (Eigen::Index i = 0; i < n; ++i) {
    spectrum.vectors.row(order[static_cast<std::size_t>(i)]) = z.row(i);
  }
  return spectrum;
}

}  // namespace

EmpiricalSpectrum empirical_eigendecomposition(const GramMatrix& gram) {
  if (gram.n < 1 || gram.entries.rows() != gram.n || gram.entries.cols() != gram.n) {
    throw DomainError("empirical_eigendecomposition: malformed Gram matrix");
  }
  const Eigen::MatrixXd scaled = gram.entries / static_cast<double>(gram.n);
  return dense_spectrum(scaled, 0);
}

EmpiricalSpectrum empirical_spectrum(const KernelSpec& spec, const PointSet& points, int top_k) {
  const Eigen::Index n = points.rows();
  if (n < 1) throw DomainError("empirical_spectrum: need at least one point");
  if (top_k > n) top_k = 0;
  if (spec.kind() == KernelSpec::Kind::Min && points.cols() == 1) {
    for (Eigen::Index i = 0; i < n; ++i) spec.check_point(points.row(i));
    EmpiricalSpectrum spectrum = min_kernel_spectrum_sorted(points, top_k);
    if (spectrum.sample_size == static_cast<int>(n)) return spectrum;
  }
  const GramMatrix gram = gram_matrix(spec, points);
  const Eigen::MatrixXd scaled = gram.entries / static_cast<double>(gram.n);
  return dense_spectrum(scaled, top_k);
}

double effective_dimension(std::span<const double> lambdas, double nu) {
  if (lambdas.empty()) throw DomainError("effective_dimension: empty eigenvalue list");
  if (!(nu > 0.0)) throw DomainError("effective_dimension: nu must be positive");
  const double inv_nu = 1.0 / nu;
  double total = 0.0;
  for (double lambda : lambdas) total += lambda / (lambda + inv_nu);
  return total;
}

double edr_fit(std::span<const double> lambdas, int j_begin, int j_end) {
  if (j_begin < 0 || j_end > static_cast<int>(lambdas.size()) || j_end - j_begin < 3) {
    throw DomainError("edr_fit: index range must contain at least three eigenvalues");
  }
  std::vector<double> log_j, log_lambda;
  log_j.reserve(static_cast<std::size_t>(j_end - j_begin));
  log_lambda.reserve(static_cast<std::size_t>(j_end - j_begin));
  double lo = lambdas[static_cast<std::size_t>(j_begin)];
  double hi = lo;
  for (int j = j_begin; j < j_end; ++j) {
    const double lambda = lambdas[static_cast<std::size_t>(j)];
    if (!(lambda > 0.0)) throw DomainError("edr_fit: eigenvalues must be positive");
    lo = std::min(lo, lambda);
    hi = std::max(hi, lambda);
    log_j.push_back(std::log(static_cast<double>(j) + 1.0));
    log_lambda.push_back(std::log(lambda));
  }
  if (lo == hi) throw DegenerateFitError("edr_fit: all eigenvalues in the range are equal");
  return -fit_line(log_j, log_lambda).slope;
}

}  // namespace kernellab
