#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "kernellab/common.hpp"
#include "kernellab/errors.hpp"

namespace kernellab {

/// Binary-response population: P(Y=1 | X=x) = (1 + f_star(x))/2 with
/// |f_star| <= 1, together with a sampler for the marginal of X. `density`
/// is the marginal's Lebesgue density when available (used by quadrature);
/// it may be empty for sphere-supported marginals.
struct ConditionalModel {
  std::function<double(const Point&)> f_star;
  std::function<Point(Rng&)> sample_point;
  std::function<double(const Point&)> density;
  int dim = 1;
};

/// f_star(x) = cos(2 pi x), X uniform on [0,1].
ConditionalModel cosine_model();

/// Constant Bayes function, X uniform on [0,1]. |level| <= 1.
ConditionalModel constant_model(double level);

/// Labels drawn as Y = +1 with probability (1 + f_star(X))/2, else -1.
/// Deterministic given the seed. Throws ModelError if |f_star| > 1 at a
/// sampled point.
std::pair<PointSet, Eigen::VectorXd> sample_classification(const ConditionalModel& model,
                                                           int n, std::uint64_t seed);

/// Y = f_star(X) + sigma * standard normal noise. Deterministic given the seed.
std::pair<PointSet, Eigen::VectorXd> sample_regression(const ConditionalModel& model, int n,
                                                       double sigma, std::uint64_t seed);

/// Fixed regular design x_i = i/n, i = 1..n, as scalar points. Regression
/// smoothness experiments use this design: it resolves projection
/// coefficients up to far higher index than an i.i.d. draw of the same size.
PointSet equispaced_design(int n);

/// Smooth transition bump: u = 1 on [0, 1/4], u = 0 on [1/2, inf),
/// nonincreasing and C^inf in between, built as the normalized tail integral
/// of exp(-1/((1/2 - z)(z - 1/4))).
double bump_u(double x);

/// One member of the hard classification family: a regular q^dim grid of
/// bump functions scaled by c_psi * q^{-sr} and signed per cell by a
/// codeword, with the marginal uniform on small balls around the centers.
struct HardInstance {
  int q = 1;                 // grid resolution per coordinate
  int dim = 1;
  double sr = 1.0;           // product of smoothness and kernel order
  double c_psi = 1.0;        // amplitude scale in (0, 1]
  std::vector<int> omega;    // +/-1 per cell, q^dim entries
};

HardInstance make_hard_instance(int q, int dim, double sr, double c_psi,
                                std::vector<int> omega);

/// Number of grid cells, q^dim.
int cell_count(const HardInstance& inst);

/// Center z_k of cell k, components (2 k_i + 1)/(2q), row-major over coordinates.
Point grid_center(const HardInstance& inst, int cell);

/// Cell whose center is nearest to x; exact ties go to the center nearest the
/// origin.
int cell_index(const HardInstance& inst, const Point& x);

/// psi(x) = c_psi q^{-sr} sum_k u(q ||x - z_k||). The supports are disjoint,
/// so at most one term is nonzero; 0 <= psi <= c_psi q^{-sr}.
double psi(const HardInstance& inst, const Point& x);

/// Well-separated sign codebook: at least 2^{m/8} words in {-1,+1}^m whose
/// pairwise coordinate differences satisfy sum_k |w_k - w'_k| >= m/4
/// (Hamming distance >= m/8). Randomized greedy search, deterministic given
/// the seed; throws SearchExhaustedError after 1000 * 2^{m/8} draws.
std::vector<std::vector<int>> varshamov_gilbert(int m, std::uint64_t seed);

/// Conditional model of a hard instance: f(x) = omega[cell(x)] * psi(x), with
/// X drawn by picking a cell uniformly and sampling the ball of radius
/// 1/(4q) around its center (rejection from the bounding cube).
ConditionalModel hard_instance_model(const HardInstance& inst);

}  // namespace kernellab
