#include <cmath>
#include <vector>

#include "doctest.h"
#include "kernellab/filters.hpp"
#include "kernellab/errors.hpp"

using namespace kernellab;

namespace {

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  }
  return out;
}

std::vector<double> logspace(double lo_exp, double hi_exp, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        std::pow(10.0, lo_exp + (hi_exp - lo_exp) * i / (count - 1));
  }
  return out;
}

}  // namespace

TEST_SUITE("filters") {

TEST_CASE("gradient flow values and limits") {
  const Filter gf = Filter::gradient_flow();
  CHECK(gf.phi(2.0, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(gf.phi(1.0, 1.0) == doctest::Approx(0.63212055882855768).epsilon(1e-14));
  CHECK(gf.psi(3.0, 2.0) == doctest::Approx(0.0024787521766663584).epsilon(1e-14));
  CHECK(gf.psi(5.0, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("ridge values") {
  const Filter ridge = Filter::ridge();
  CHECK(ridge.phi(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ridge.psi(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ridge.qualification() == doctest::Approx(1.0));
}

TEST_CASE("residual identity psi = 1 - z phi") {
  const std::vector<Filter> filters{Filter::gradient_flow(), Filter::ridge(),
                                    Filter::spectral_cutoff(), Filter::iterated_tikhonov(3)};
  for (const Filter& filter : filters) {
    for (double nu : {0.5, 1.0, 7.0, 300.0}) {
      for (double z : {0.0, 1e-8, 0.03, 0.5, 1.0, 3.9}) {
        CHECK(filter.psi(nu, z) ==
              doctest::Approx(1.0 - z * filter.phi(nu, z)).epsilon(1e-11));
        CHECK(filter.psi(nu, 0.0) == doctest::Approx(1.0));
      }
    }
  }
}

TEST_CASE("cutoff switches at z = 1/nu") {
  const Filter cutoff = Filter::spectral_cutoff();
  CHECK(cutoff.phi(10.0, 0.5) == doctest::Approx(2.0));
  CHECK(cutoff.phi(10.0, 0.05) == doctest::Approx(0.05 >= 0.1 ? 20.0 : 0.0));
  CHECK(cutoff.phi(10.0, 0.0999) == doctest::Approx(0.0));
  CHECK(cutoff.psi(10.0, 0.0999) == doctest::Approx(1.0));
  CHECK(cutoff.psi(10.0, 0.5) == doctest::Approx(0.0));
}

TEST_CASE("iterated Tikhonov limits") {
  const Filter it = Filter::iterated_tikhonov(4);
  CHECK(it.phi(2.0, 0.0) == doctest::Approx(8.0));  // m * nu at z = 0
  CHECK(it.qualification() == doctest::Approx(4.0));
  CHECK(it.bound_E() == doctest::Approx(4.0));
  CHECK_THROWS_AS(Filter::iterated_tikhonov(0), DomainError);
}

TEST_CASE("gradient-flow residual peak matches the calculus bound exactly") {
  // max_z z e^{-nu z} = 1/(e nu) at z = 1/nu; with tau = 1 the declared bound
  // (1/e) nu^{-1} is attained
  const Filter gf = Filter::gradient_flow();
  for (double nu : {0.5, 1.0, 4.0}) {
    const double z_star = 1.0 / nu;
    const double peak = z_star * gf.psi(nu, z_star);
    CHECK(peak == doctest::Approx((1.0 / M_E) / nu).epsilon(1e-12));
    CHECK(gf.bound_F(1.0) == doctest::Approx(1.0 / M_E).epsilon(1e-12));
  }
}

TEST_CASE("declared-constant grid bounds hold for every variant") {
  const std::vector<double> nus = logspace(-1.0, 5.0, 40);
  const std::vector<double> alphas = linspace(0.0, 1.0, 21);
  const std::vector<double> zs = linspace(0.0, 4.0, 101);  // kappa^2 = 4 for depth-1 ntk

  SUBCASE("gradient flow, tau above e so the declared F covers alpha = 0") {
    const auto report = verify_filter_bounds(Filter::gradient_flow(), nus, alphas, zs, 3.0);
    CHECK(report.passed);
    CHECK(report.max_phi_margin <= 1e-12);
  }
  SUBCASE("ridge at its qualification") {
    const auto report = verify_filter_bounds(Filter::ridge(), nus, alphas, zs, 1.0);
    CHECK(report.passed);
  }
  SUBCASE("spectral cutoff") {
    const auto report = verify_filter_bounds(Filter::spectral_cutoff(), nus, alphas, zs, 3.0);
    CHECK(report.passed);
  }
  SUBCASE("iterated Tikhonov") {
    const auto report =
        verify_filter_bounds(Filter::iterated_tikhonov(2), nus, alphas, zs, 2.0);
    CHECK(report.passed);
  }
  SUBCASE("tau beyond the qualification is rejected") {
    CHECK_THROWS_AS(verify_filter_bounds(Filter::ridge(), nus, alphas, zs, 2.0), DomainError);
  }
  SUBCASE("empty grids are rejected") {
    const std::vector<double> empty;
    CHECK_THROWS_AS(verify_filter_bounds(Filter::ridge(), empty, alphas, zs, 1.0), DomainError);
    CHECK_THROWS_AS(verify_filter_bounds(Filter::ridge(), nus, alphas, empty, 1.0), DomainError);
  }
  SUBCASE("alphas outside the unit interval are rejected") {
    const std::vector<double> bad{0.0, 1.5};
    CHECK_THROWS_AS(verify_filter_bounds(Filter::ridge(), nus, bad, zs, 1.0), DomainError);
  }
}

TEST_CASE("gradient-flow phi bound is tight at z = 0, alpha = 0") {
  const std::vector<double> nus{0.5, 1.0, 10.0};
  const std::vector<double> alphas{0.0};
  const std::vector<double> zs{0.0, 0.5, 1.0};
  const auto report = verify_filter_bounds(Filter::gradient_flow(), nus, alphas, zs, 3.0);
  CHECK(report.passed);
  CHECK(report.max_phi_margin == doctest::Approx(0.0).epsilon(1e-12));  // phi(0) = nu = E nu
  CHECK(report.worst_phi_z == doctest::Approx(0.0));
}

}  // TEST_SUITE
