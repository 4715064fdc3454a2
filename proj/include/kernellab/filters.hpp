#pragma once

#include <span>
#include <string>

namespace kernellab {

/// Spectral regularization filter phi_nu(z) with residual psi_nu(z) = 1 - z phi_nu(z).
///
/// Shipped variants and their constants (E, F, qualification tau):
///   GradientFlow        phi = (1 - exp(-nu z))/z      E = 1, tau unbounded, F(tau) = (tau/e)^tau
///   Ridge               phi = nu / (nu z + 1)         E = 1, tau = 1, F = 1
///   SpectralCutoff      phi = 1/z for z >= 1/nu, else 0   E = 1, tau unbounded, F = 1
///   IteratedTikhonov(m) phi = (1 - (nu z + 1)^-m)/z   E = m, tau = m, F = 1
///
/// Values at z = 0 are the analytic limits (nu for gradient flow, m nu for
/// iterated Tikhonov), never epsilon-shifted quotients.
class Filter {
 public:
  enum class Kind { GradientFlow, Ridge, SpectralCutoff, IteratedTikhonov };

  static Filter gradient_flow();
  static Filter ridge();
  static Filter spectral_cutoff();
  static Filter iterated_tikhonov(int steps);

  double phi(double nu, double z) const;
  double psi(double nu, double z) const;

  /// Largest admissible residual order; +infinity for gradient flow and cutoff.
  double qualification() const;
  double bound_E() const;
  double bound_F(double tau) const;

  Kind kind() const { return kind_; }
  int steps() const { return steps_; }
  std::string name() const;

 private:
  explicit Filter(Kind kind, int steps = 0) : kind_(kind), steps_(steps) {}
  Kind kind_;
  int steps_;
};

/// Grid check of the two filter inequalities
///   z^a phi_nu(z)   <= E nu^{1-a}   for a in [0,1]
///   z^a |psi_nu(z)| <= F nu^{-a}    for a in [0, tau]
/// Margins are normalized: (observed / bound) - 1, so any positive margin is
/// a violation.
struct FilterBoundsReport {
  bool passed = false;
  double max_phi_margin = 0.0;
  double max_psi_margin = 0.0;
  double worst_phi_nu = 0.0, worst_phi_z = 0.0, worst_phi_alpha = 0.0;
  double worst_psi_nu = 0.0, worst_psi_z = 0.0, worst_psi_alpha = 0.0;
  double checked_E = 0.0, checked_F = 0.0, tau = 0.0;
};

/// Evaluate both inequalities over the grids with the filter's declared
/// constants. tau_check must not exceed the filter's qualification; alphas
/// must lie in [0,1].
FilterBoundsReport verify_filter_bounds(const Filter& filter,
                                        std::span<const double> nu_grid,
                                        std::span<const double> alpha_grid,
                                        std::span<const double> z_grid,
                                        double tau_check);

}  // namespace kernellab
