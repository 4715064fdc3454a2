#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

#include "doctest.h"
#include "kernellab/eigensystem.hpp"
#include "kernellab/kernels.hpp"

using namespace kernellab;

namespace {

Point pt(double x) {
  Point p(1);
  p(0) = x;
  return p;
}

Point unit_vector(std::initializer_list<double> values) {
  Point p(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) p(i++) = v;
  return p / p.norm();
}

PointSet random_sphere_points(int n, int dim, std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  PointSet points(n, dim);
  for (int i = 0; i < n; ++i) {
    Point x(dim);
    do {
      for (int j = 0; j < dim; ++j) x(j) = gauss(rng);
    } while (x.norm() == 0.0);
    points.row(i) = x / x.norm();
  }
  return points;
}

PointSet random_interval_points(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  PointSet points(n, 1);
  for (int i = 0; i < n; ++i) points(i, 0) = unif(rng);
  return points;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("arc-cosine kappas at reference arguments") {
  CHECK(ntk_kappa(0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ntk_kappa(1, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ntk_kappa(1, 0.0) == doctest::Approx(0.31830988618379067).epsilon(1e-14));
  CHECK(ntk_kappa(0, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ntk_kappa(0, -1.0) == doctest::Approx(0.0).epsilon(1e-14));
  // clamped just outside the interval
  CHECK(ntk_kappa(1, 1.0 + 1e-13) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(ntk_kappa(1, 1.1), DomainError);
  CHECK_THROWS_AS(ntk_kappa(2, 0.0), DomainError);
}

TEST_CASE("min kernel evaluation") {
  const KernelSpec spec = KernelSpec::min_kernel();
  CHECK(eval_kernel(spec, pt(0.3), pt(0.7)) == doctest::Approx(0.3));
  CHECK(eval_kernel(spec, pt(0.7), pt(0.3)) == doctest::Approx(0.3));
  CHECK(eval_kernel(spec, pt(1.0), pt(1.0)) <= spec.kappa_bound());
  CHECK_THROWS_AS(eval_kernel(spec, pt(1.2), pt(0.5)), DomainError);
  CHECK_THROWS_AS(eval_kernel(spec, pt(-0.1), pt(0.5)), DomainError);
}

TEST_CASE("tangent kernel diagonal equals depth + 1") {
  for (int depth : {1, 2, 3, 5}) {
    const KernelSpec spec = KernelSpec::ntk(depth);
    const Point x = unit_vector({0.3, -1.2, 0.4});
    CHECK(eval_kernel(spec, x, x) == doctest::Approx(depth + 1.0).epsilon(1e-10));
    CHECK(spec.kappa_bound() == doctest::Approx(depth + 1.0));
  }
}

TEST_CASE("tangent kernel at orthogonal inputs matches the hand-evaluated recursion") {
  // depth 1: u*kappa0(u) + kappa1(u) at u=0 -> 1/pi; deeper values evaluated
  // independently at high precision from the same recursion
  const Point x = unit_vector({1.0, 0.0, 0.0, 0.0});
  const Point y = unit_vector({0.0, 1.0, 0.0, 0.0});
  CHECK(eval_kernel(KernelSpec::ntk(1), x, y) ==
        doctest::Approx(0.31830988618379067).epsilon(1e-13));
  CHECK(eval_kernel(KernelSpec::ntk(2), x, y) ==
        doctest::Approx(0.68570863628294249).epsilon(1e-13));
  CHECK(eval_kernel(KernelSpec::ntk(3), x, y) ==
        doctest::Approx(1.060388106802583).epsilon(1e-13));
}

TEST_CASE("tangent kernel at general angles") {
  const Point x = unit_vector({1.0, 0.0});
  const Point y_half = unit_vector({0.5, std::sqrt(3.0) / 2.0});  // <x,y> = 0.5
  CHECK(eval_kernel(KernelSpec::ntk(1), x, y_half) ==
        doctest::Approx(0.94233111437756269).epsilon(1e-12));
  Point y_neg(2);
  y_neg << -0.3, std::sqrt(1.0 - 0.09);  // <x,y> = -0.3
  CHECK(eval_kernel(KernelSpec::ntk(2), x, y_neg) ==
        doctest::Approx(0.44954970510074489).epsilon(1e-12));
  CHECK_THROWS_AS(eval_kernel(KernelSpec::ntk(1), 2.0 * x, y_half), DomainError);
}

TEST_CASE("gram matrix entries for the min kernel") {
  const PointSet x = scalar_points(std::vector<double>{0.25, 0.5, 0.75});
  const GramMatrix gram = gram_matrix(KernelSpec::min_kernel(), x);
  Eigen::MatrixXd expected(3, 3);
  expected << 0.25, 0.25, 0.25, 0.25, 0.5, 0.5, 0.25, 0.5, 0.75;
  CHECK((gram.entries - expected).cwiseAbs().maxCoeff() == doctest::Approx(0.0));

  const GramMatrix single = gram_matrix(KernelSpec::min_kernel(),
                                        scalar_points(std::vector<double>{0.5}));
  CHECK(single.entries(0, 0) == doctest::Approx(0.5));
}

TEST_CASE("gram diagonal for depth-3 tangent kernel") {
  const PointSet points = random_sphere_points(17, 6, 11);
  const GramMatrix gram = gram_matrix(KernelSpec::ntk(3), points);
  for (int i = 0; i < 17; ++i) CHECK(gram.entries(i, i) == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("custom Mercer kernel reproduces its series") {
  const EigenSystem system = min_kernel_eigensystem(400);
  const KernelSpec custom = KernelSpec::custom_mercer(system.truncate(400));
  const KernelSpec exact = KernelSpec::min_kernel();
  // truncation error of the series is O(sum of dropped eigenvalues)
  for (auto [a, b] : {std::pair{0.3, 0.7}, {0.9, 0.2}, {0.5, 0.5}}) {
    CHECK(eval_kernel(custom, pt(a), pt(b)) ==
          doctest::Approx(eval_kernel(exact, pt(a), pt(b))).epsilon(2e-3));
  }
}

TEST_CASE("symmetry of kernel evaluations") {
  Rng rng(99);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const KernelSpec min_spec = KernelSpec::min_kernel();
  for (int i = 0; i < 50; ++i) {
    const Point a = pt(unif(rng)), b = pt(unif(rng));
    CHECK(eval_kernel(min_spec, a, b) == eval_kernel(min_spec, b, a));
  }
  const KernelSpec ntk_spec = KernelSpec::ntk(2);
  const PointSet sphere = random_sphere_points(20, 4, 5);
  for (int i = 0; i + 1 < 20; i += 2) {
    const Point a = sphere.row(i), b = sphere.row(i + 1);
    CHECK(eval_kernel(ntk_spec, a, b) ==
          doctest::Approx(eval_kernel(ntk_spec, b, a)).epsilon(1e-12));
  }
}

TEST_CASE("gram matrices are numerically positive semidefinite") {
  Rng seed_source(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 8 + static_cast<int>(seed_source() % 57);
    const GramMatrix gram =
        gram_matrix(KernelSpec::min_kernel(), random_interval_points(n, seed_source()));
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram.entries);
    CHECK(eig.eigenvalues().minCoeff() >= -1e-8 * n);
    CHECK((gram.entries - gram.entries.transpose()).cwiseAbs().maxCoeff() <=
          1e-12 * gram.entries.cwiseAbs().maxCoeff());
  }
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 8 + static_cast<int>(seed_source() % 57);
    const GramMatrix gram =
        gram_matrix(KernelSpec::ntk(2), random_sphere_points(n, 5, seed_source()));
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram.entries);
    CHECK(eig.eigenvalues().minCoeff() >= -1e-8 * n);
  }
}

TEST_CASE("Cauchy-Schwarz on random pairs") {
  const KernelSpec spec = KernelSpec::ntk(3);
  const PointSet sphere = random_sphere_points(40, 8, 123);
  for (int i = 0; i + 1 < 40; i += 2) {
    const Point a = sphere.row(i), b = sphere.row(i + 1);
    const double kab = eval_kernel(spec, a, b);
    CHECK(kab * kab <=
          eval_kernel(spec, a, a) * eval_kernel(spec, b, b) + 1e-10);
  }
}

}  // TEST_SUITE
