#include "kernellab/filters.hpp"

#include <cmath>
#include <limits>

#include "kernellab/errors.hpp"

namespace kernellab {

Filter Filter::gradient_flow() { return Filter(Kind::GradientFlow); }
Filter Filter::ridge() { return Filter(Kind::Ridge); }
Filter Filter::spectral_cutoff() { return Filter(Kind::SpectralCutoff); }

Filter Filter::iterated_tikhonov(int steps) {
  if (steps < 1) throw DomainError("iterated_tikhonov: steps must be >= 1");
  return Filter(Kind::IteratedTikhonov, steps);
}

double Filter::phi(double nu, double z) const {
  switch (kind_) {
    case Kind::GradientFlow:
      return z == 0.0 ? nu : -std::expm1(-nu * z) / z;
    case Kind::Ridge:
      return nu / (nu * z + 1.0);
    case Kind::SpectralCutoff:
      return z >= 1.0 / nu ? 1.0 / z : 0.0;
    case Kind::IteratedTikhonov:
      return z == 0.0 ? steps_ * nu
                      : (1.0 - std::pow(nu * z + 1.0, -steps_)) / z;
  }
  return 0.0;
}

double Filter::psi(double nu, double z) const {
  switch (kind_) {
    case Kind::GradientFlow:
      return std::exp(-nu * z);
    case Kind::Ridge:
      return 1.0 / (nu * z + 1.0);
    case Kind::SpectralCutoff:
      return z >= 1.0 / nu ? 0.0 : 1.0;
    case Kind::IteratedTikhonov:
      return std::pow(nu * z + 1.0, -steps_);
  }
  return 0.0;
}

double Filter::qualification() const {
  switch (kind_) {
    case Kind::GradientFlow:
    case Kind::SpectralCutoff:
      return std::numeric_limits<double>::infinity();
    case Kind::Ridge:
      return 1.0;
    case Kind::IteratedTikhonov:
      return static_cast<double>(steps_);
  }
  return 1.0;
}

double Filter::bound_E() const {
  return kind_ == Kind::IteratedTikhonov ? static_cast<double>(steps_) : 1.0;
}

double Filter::bound_F(double tau) const {
  if (kind_ == Kind::GradientFlow) return std::pow(tau / M_E, tau);
  return 1.0;
}

std::string Filter::name() const {
  switch (kind_) {
    case Kind::GradientFlow:
      return "gradient-flow";
    case Kind::Ridge:
      return "ridge";
    case Kind::SpectralCutoff:
      return "spectral-cutoff";
    case Kind::IteratedTikhonov:
      return "iterated-tikhonov-" + std::to_string(steps_);
  }
  return "unknown";
}

FilterBoundsReport verify_filter_bounds(const Filter& filter, std::span<const double> nu_grid,
                                        std::span<const double> alpha_grid,
                                        std::span<const double> z_grid, double tau_check) {
  if (nu_grid.empty() || alpha_grid.empty() || z_grid.empty()) {
    throw DomainError("verify_filter_bounds: empty grid");
  }
  if (!(tau_check >= 1.0) || tau_check > filter.qualification()) {
    throw DomainError("verify_filter_bounds: tau outside [1, qualification]");
  }
  for (double a : alpha_grid) {
    if (a < 0.0 || a > 1.0) throw DomainError("verify_filter_bounds: alpha outside [0,1]");
  }

  FilterBoundsReport report;
  report.checked_E = filter.bound_E();
  report.checked_F = filter.bound_F(tau_check);
  report.tau = tau_check;
  report.max_phi_margin = -std::numeric_limits<double>::infinity();
  report.max_psi_margin = -std::numeric_limits<double>::infinity();

  for (double nu : nu_grid) {
    for (double alpha : alpha_grid) {
      const double phi_bound = report.checked_E * std::pow(nu, 1.0 - alpha);
      const double psi_bound = report.checked_F * std::pow(nu, -alpha);
      for (double z : z_grid) {
        const double za = std::pow(z, alpha);
        const double phi_margin = za * filter.phi(nu, z) / phi_bound - 1.0;
        if (phi_margin > report.max_phi_margin) {
          report.max_phi_margin = phi_margin;
          report.worst_phi_nu = nu;
          report.worst_phi_z = z;
          report.worst_phi_alpha = alpha;
        }
        const double psi_margin = za * std::abs(filter.psi(nu, z)) / psi_bound - 1.0;
        if (psi_margin > report.max_psi_margin) {
          report.max_psi_margin = psi_margin;
          report.worst_psi_nu = nu;
          report.worst_psi_z = z;
          report.worst_psi_alpha = alpha;
        }
      }
    }
  }
  constexpr double kGridSlack = 1e-12;  // round-off from pow/exp on exact-equality cases
  report.passed =
      report.max_phi_margin <= kGridSlack && report.max_psi_margin <= kGridSlack;
  return report;
}

}  // namespace kernellab
