#include <cmath>
#include <vector>

#include "doctest.h"
#include "kernellab/data_synth.hpp"
#include "kernellab/smoothness.hpp"

using namespace kernellab;

TEST_SUITE("smoothness") {

TEST_CASE("projections of scaled eigenvectors are recovered exactly") {
  PointSet x(3, 1);
  x << 0.2, 0.5, 0.9;
  const EmpiricalSpectrum spectrum =
      empirical_spectrum(KernelSpec::min_kernel(), x);
  SUBCASE("first eigenvector scaled by 7") {
    const Eigen::VectorXd y = 7.0 * spectrum.vectors.col(0);
    const Eigen::VectorXd p = projection_coefficients(spectrum, y);
    CHECK(p(0) == doctest::Approx(7.0).epsilon(1e-10));
    CHECK(p(1) <= 1e-8);
    CHECK(p(2) <= 1e-8);
  }
  SUBCASE("labels orthogonal to the leading eigenvector") {
    const Eigen::VectorXd y =
        spectrum.vectors.col(1) * 2.0 - spectrum.vectors.col(2) * 3.0;
    const Eigen::VectorXd p = projection_coefficients(spectrum, y);
    CHECK(p(0) <= 1e-8);
  }
}

TEST_CASE("exact power laws are recovered to machine precision") {
  std::vector<double> p(150);
  SUBCASE("unit scale, r = 1") {
    for (int j = 0; j < 150; ++j) p[static_cast<std::size_t>(j)] = 1.0 / (j + 1.0);
    const SmoothnessEstimate est = truncation_estimate(p, 100, 2.0);
    CHECK(est.r_hat == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(est.s_hat == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(est.slope == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(est.n_used == 100);
    CHECK(est.fit_residual <= 1e-12);
  }
  SUBCASE("arbitrary scale does not change the exponent") {
    for (int j = 0; j < 150; ++j) p[static_cast<std::size_t>(j)] = 42.0 * std::pow(j + 1.0, -1.7);
    const SmoothnessEstimate est = truncation_estimate(p, 120, 2.0);
    CHECK(est.r_hat == doctest::Approx(1.7).epsilon(1e-12));
    CHECK(est.s_hat == doctest::Approx((2.0 * 1.7 - 1.0) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("scale invariance of the fitted exponents") {
  std::vector<double> p(60), p_scaled(60);
  for (int j = 0; j < 60; ++j) {
    p[static_cast<std::size_t>(j)] = std::pow(j + 1.0, -0.9) * (1.0 + 0.1 * std::sin(j));
    p_scaled[static_cast<std::size_t>(j)] = 17.0 * p[static_cast<std::size_t>(j)];
  }
  const SmoothnessEstimate a = truncation_estimate(p, 50, 2.0);
  const SmoothnessEstimate b = truncation_estimate(p_scaled, 50, 2.0);
  CHECK(a.r_hat == doctest::Approx(b.r_hat).epsilon(1e-12));
  CHECK(a.s_hat == doctest::Approx(b.s_hat).epsilon(1e-12));
  CHECK(b.intercept > a.intercept);
}

TEST_CASE("beta passthrough identity") {
  std::vector<double> p(40);
  for (int j = 0; j < 40; ++j) p[static_cast<std::size_t>(j)] = std::pow(j + 1.0, -1.3);
  for (double beta : {1.5, 2.0, 3.0, 784.0 / 783.0}) {
    const SmoothnessEstimate est = truncation_estimate(p, 30, beta);
    CHECK(est.s_hat * beta + 1.0 == doctest::Approx(2.0 * est.r_hat).epsilon(1e-12));
  }
}

TEST_CASE("near-zero coefficients are excluded, not clipped") {
  std::vector<double> p(50);
  for (int j = 0; j < 50; ++j) p[static_cast<std::size_t>(j)] = std::pow(j + 1.0, -1.0);
  p[10] = 0.0;
  p[20] = 1e-15;
  const SmoothnessEstimate est = truncation_estimate(p, 50, 2.0);
  CHECK(est.n_used == 48);
  CHECK(est.r_hat == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<double> dead(10, 0.0);
  CHECK_THROWS_AS(truncation_estimate(dead, 10, 2.0), DegenerateFitError);
  CHECK_THROWS_AS(truncation_estimate(p, 2, 2.0), DomainError);
}

TEST_CASE("noiseless cosine regression on the fixed design estimates s near 1/2") {
  const LabeledSampler sampler = [](int n, std::uint64_t) {
    const PointSet x = equispaced_design(n);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) y(i) = std::cos(2.0 * M_PI * x(i, 0));
    return std::pair{x, y};
  };
  const RepeatedEstimate out =
      repeated_estimate(sampler, KernelSpec::min_kernel(), 1000, 100, 2.0, 2, 1);
  CHECK(out.mean == doctest::Approx(0.5).epsilon(0.12));
  CHECK(out.stddev <= 1e-12);  // the design and labels are deterministic
}

TEST_CASE("repeated estimates are deterministic and seed-sensitive") {
  const ConditionalModel model = cosine_model();
  const LabeledSampler sampler = [&model](int n, std::uint64_t seed) {
    return sample_classification(model, n, seed);
  };
  const RepeatedEstimate a =
      repeated_estimate(sampler, KernelSpec::min_kernel(), 600, 60, 2.0, 4, 9);
  const RepeatedEstimate b =
      repeated_estimate(sampler, KernelSpec::min_kernel(), 600, 60, 2.0, 4, 9);
  CHECK(a.estimates == b.estimates);
  CHECK(a.stddev > 0.0);
  const RepeatedEstimate c =
      repeated_estimate(sampler, KernelSpec::min_kernel(), 600, 60, 2.0, 4, 10);
  CHECK(a.estimates != c.estimates);
}

}  // TEST_SUITE
