#include "kernellab/data_synth.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <unordered_set>

namespace kernellab {

namespace {

Point scalar_point(double x) {
  Point p(1);
  p(0) = x;
  return p;
}

double check_f_star(double value) {
  if (std::abs(value) > 1.0) {
    throw ModelError("conditional model: |f_star| > 1 at a sampled point");
  }
  return value;
}

}  // namespace

ConditionalModel cosine_model() {
  ConditionalModel model;
  model.f_star = [](const Point& x) { return std::cos(2.0 * std::numbers::pi * x(0)); };
  model.sample_point = [](Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    return scalar_point(unif(rng));
  };
  model.density = [](const Point& x) {
    return (x(0) >= 0.0 && x(0) <= 1.0) ? 1.0 : 0.0;
  };
  model.dim = 1;
  return model;
}

ConditionalModel constant_model(double level) {
  if (std::abs(level) > 1.0) throw ModelError("constant_model: |level| must be <= 1");
  ConditionalModel model = cosine_model();
  model.f_star = [level](const Point&) { return level; };
  return model;
}

std::pair<PointSet, Eigen::VectorXd> sample_classification(const ConditionalModel& model, int n,
                                                           std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_classification: n must be >= 1");
  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  PointSet points(n, model.dim);
  Eigen::VectorXd labels(n);
  for (int i = 0; i < n; ++i) {
    const Point x = model.sample_point(rng);
    points.row(i) = x;
    const double eta = (1.0 + check_f_star(model.f_star(x))) / 2.0;
    labels(i) = unif(rng) < eta ? 1.0 : -1.0;
  }
  return {std::move(points), std::move(labels)};
}

std::pair<PointSet, Eigen::VectorXd> sample_regression(const ConditionalModel& model, int n,
                                                       double sigma, std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_regression: n must be >= 1");
  if (sigma < 0.0) throw DomainError("sample_regression: sigma must be >= 0");
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  PointSet points(n, model.dim);
  Eigen::VectorXd values(n);
  for (int i = 0; i < n; ++i) {
    const Point x = model.sample_point(rng);
    points.row(i) = x;
    values(i) = model.f_star(x) + (sigma > 0.0 ? sigma * gauss(rng) : 0.0);
  }
  return {std::move(points), std::move(values)};
}

PointSet equispaced_design(int n) {
  if (n < 1) throw DomainError("equispaced_design: n must be >= 1");
  PointSet points(n, 1);
  for (int i = 0; i < n; ++i) points(i, 0) = static_cast<double>(i + 1) / n;
  return points;
}

namespace {

// Edge profile exp(-1/((1/2 - z)(z - 1/4))) rescaled by its peak e^{64} so the
// quadrature tolerance is meaningful; the scale cancels in the normalized
// ratio that defines the bump.
double edge_profile(double z) {
  if (z <= 0.25 || z >= 0.5) return 0.0;
  return std::exp(64.0 - 1.0 / ((0.5 - z) * (z - 0.25)));
}

double simpson(double (*f)(double), double a, double b) {
  return (b - a) / 6.0 * (f(a) + 4.0 * f((a + b) / 2.0) + f(b));
}

double adaptive_simpson(double (*f)(double), double a, double b, double whole, double tol,
                        int depth) {
  const double mid = (a + b) / 2.0;
  const double left = simpson(f, a, mid);
  const double right = simpson(f, mid, b);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, mid, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, mid, b, right, tol / 2.0, depth - 1);
}

double edge_integral(double from) {
  // integral of the rescaled profile over [from, 1/2] to 1e-10 absolute
  const double a = std::max(from, 0.25);
  if (a >= 0.5) return 0.0;
  return adaptive_simpson(&edge_profile, a, 0.5, simpson(&edge_profile, a, 0.5), 1e-10, 48);
}

double bump_normalizer() {
  static const double value = edge_integral(0.25);
  return value;
}

}  // namespace

double bump_u(double x) {
  if (x < 0.0) throw DomainError("bump_u: argument must be >= 0");
  if (x <= 0.25) return 1.0;
  if (x >= 0.5) return 0.0;
  // quadrature noise is ~1e-10; keep the ratio inside the function's range
  return std::clamp(edge_integral(x) / bump_normalizer(), 0.0, 1.0);
}

HardInstance make_hard_instance(int q, int dim, double sr, double c_psi,
                                std::vector<int> omega) {
  if (q < 1) throw DomainError("hard instance: q must be >= 1");
  if (dim < 1) throw DomainError("hard instance: dim must be >= 1");
  if (!(sr > 0.0)) throw DomainError("hard instance: sr must be positive");
  if (!(c_psi > 0.0 && c_psi <= 1.0)) throw DomainError("hard instance: c_psi must be in (0,1]");
  std::size_t cells = 1;
  for (int i = 0; i < dim; ++i) cells *= static_cast<std::size_t>(q);
  if (omega.size() != cells) throw DomainError("hard instance: omega size must be q^dim");
  for (int w : omega) {
    if (w != 1 && w != -1) throw DomainError("hard instance: omega entries must be +/-1");
  }
  return HardInstance{q, dim, sr, c_psi, std::move(omega)};
}

int cell_count(const HardInstance& inst) {
  int cells = 1;
  for (int i = 0; i < inst.dim; ++i) cells *= inst.q;
  return cells;
}

Point grid_center(const HardInstance& inst, int cell) {
  if (cell < 0 || cell >= cell_count(inst)) throw DomainError("grid_center: cell out of range");
  Point z(inst.dim);
  for (int i = 0; i < inst.dim; ++i) {
    const int k = cell % inst.q;
    z(i) = (2.0 * k + 1.0) / (2.0 * inst.q);
    cell /= inst.q;
  }
  return z;
}

int cell_index(const HardInstance& inst, const Point& x) {
  if (x.size() != inst.dim) throw DomainError("cell_index: wrong point dimension");
  int cell = 0;
  int stride = 1;
  for (int i = 0; i < inst.dim; ++i) {
    const double scaled = x(i) * inst.q;
    double floor = std::floor(scaled);
    // exact boundaries are ties between adjacent centers; take the one
    // nearer the origin
    if (scaled == floor && floor > 0.0) floor -= 1.0;
    const int k = std::clamp(static_cast<int>(floor), 0, inst.q - 1);
    cell += stride * k;
    stride *= inst.q;
  }
  return cell;
}

double psi(const HardInstance& inst, const Point& x) {
  // Supports have radius 1/(2q) around centers spaced 1/q apart, so only the
  // term of the nearest center can be nonzero.
  const Point z = grid_center(inst, cell_index(inst, x));
  const double scaled_dist = (x - z).norm() * inst.q;
  if (scaled_dist >= 0.5) return 0.0;
  return inst.c_psi * std::pow(static_cast<double>(inst.q), -inst.sr) * bump_u(scaled_dist);
}

std::vector<std::vector<int>> varshamov_gilbert(int m, std::uint64_t seed) {
  if (m < 8) throw DomainError("varshamov_gilbert: m must be >= 8");
  const double target_real = std::pow(2.0, static_cast<double>(m) / 8.0);
  const std::size_t target = static_cast<std::size_t>(std::ceil(target_real));
  const int min_hamming = (m + 7) / 8;  // sum_k |w_k - w'_k| >= m/4 in +/-1 coordinates
  const double cap_real = 1000.0 * target_real;
  const std::uint64_t draw_cap =
      cap_real > 1e18 ? std::uint64_t(1) << 63 : static_cast<std::uint64_t>(cap_real);

  Rng rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::vector<int>> codebook;
  codebook.reserve(target);
  std::vector<int> candidate(static_cast<std::size_t>(m));
  for (std::uint64_t draw = 0; draw < draw_cap && codebook.size() < target; ++draw) {
    for (int k = 0; k < m; ++k) candidate[static_cast<std::size_t>(k)] = coin(rng) ? 1 : -1;
    bool separated = true;
    for (const auto& kept : codebook) {
      int hamming = 0;
      for (int k = 0; k < m; ++k) hamming += kept[static_cast<std::size_t>(k)] != candidate[static_cast<std::size_t>(k)];
      if (hamming < min_hamming) {
        separated = false;
        break;
      }
    }
    if (separated) codebook.push_back(candidate);
  }
  if (codebook.size() < target) {
    throw SearchExhaustedError("varshamov_gilbert: retry cap reached before " +
                               std::to_string(target) + " codewords");
  }
  return codebook;
}

ConditionalModel hard_instance_model(const HardInstance& inst) {
  const double radius = 1.0 / (4.0 * inst.q);
  const int cells = cell_count(inst);
  const double ball_volume = [&] {
    // volume of a dim-ball of the marginal's radius
    const double d = static_cast<double>(inst.dim);
    return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0) *
           std::pow(radius, d);
  }();

  ConditionalModel model;
  model.dim = inst.dim;
  model.f_star = [inst](const Point& x) {
    return inst.omega[static_cast<std::size_t>(cell_index(inst, x))] * psi(inst, x);
  };
  model.sample_point = [inst, radius, cells](Rng& rng) {
    std::uniform_int_distribution<int> pick(0, cells - 1);
    std::uniform_real_distribution<double> unif(-radius, radius);
    const Point z = grid_center(inst, pick(rng));
    Point x(inst.dim);
    while (true) {  // rejection from the bounding cube
      double norm2 = 0.0;
      for (int i = 0; i < inst.dim; ++i) {
        x(i) = unif(rng);
        norm2 += x(i) * x(i);
      }
      if (norm2 <= radius * radius) break;
    }
    return Point(x + z);
  };
  model.density = [inst, radius, cells, ball_volume](const Point& x) {
    const Point z = grid_center(inst, cell_index(inst, x));
    const double mass_per_cell = 1.0 / cells;
    return (x - z).norm() <= radius ? mass_per_cell / ball_volume : 0.0;
  };
  return model;
}

}  // namespace kernellab
