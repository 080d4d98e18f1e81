/// @file exact.hpp
/// @brief Closed-form evaluation of every explicit object in the construction:
/// the large-scale shear u^L and its frozen companion, the amplitude law a(t),
/// the tilted-wave ansatz, its residual forcing, and the exact heat flow.
///
/// Everything lives in cell coordinates y = M x2 mod 1 on the unit torus, with
/// x1 wavenumber kappa = 2 pi m.  The small-scale field is carried by a single
/// complex profile: u^S(t,x1,x2) = Im[e^{i kappa x1} v(t, M x2)], with norm
/// bridges ||u^S||^2 = 1/2 int|v|^2, nu||d_x2 u^S||^2 = 1/2 int|d_y v|^2.
#pragma once

#include <complex>
#include <vector>

#include "edns/config.hpp"
#include "edns/profiles.hpp"

namespace edns {

/// tau(t) = (1 - e^{-c0 t}) / c0: the accumulated tilt of the frozen shear.
double tau_factor(double t, double c0 = kC0);

/// Amplitude law a'(t) = nu kappa^2 + tau(t)^2 kappa^2, a(0) = a0, in closed
/// form.  Drives the e^{-a(t)} decay of the ansatz.
struct AmplitudeLaw {
  double nu = 0.0;
  double kappa = 0.0;
  double c0 = kC0;
  double a0 = 0.0;

  double value(double t) const;  ///< a(t)
  double rate(double t) const;   ///< a'(t)
};

/// u^L in cell coordinates: U(t,y) = sum a_i sin(2(2i-1)pi y) e^{-4pi^2(2i-1)^2 t}.
/// nu-independent: the cell rescaling absorbs the viscosity exactly.
double large_scale(double t, double y, const MollifiedTriangle& tri);

/// Frozen shear: ubar^L(t,y) = T(y) e^{-c0 t}.
double large_scale_frozen(double t, double y, const MollifiedTriangle& tri);

/// a(t) for given case parameters (thin wrapper used by bindings/CLI).
double amplitude(double t, const AmplitudeLaw& law);

/// Complex ansatz profile vbar(t,y) = e^{-a(t)} e^{-i kappa tau(t) T(y)} phi(y).
std::complex<double> ansatz_profile(double t, double y, const CaseConfig& cfg,
                                    const MollifiedTriangle& tri, const BumpProfile& bump,
                                    const AmplitudeLaw& law);

/// The ansatz as a physical field: ubar^S(t,x1,x2-in-cell-y).
double ansatz_uS(double t, double x1, double y, const CaseConfig& cfg,
                 const MollifiedTriangle& tri, const BumpProfile& bump, const AmplitudeLaw& law);

/// Complex residual profile ghat with g = Im[e^{i kappa x1} ghat]:
/// ghat(t,y) = nu^{-1} e^{-a(t)} e^{-i kappa tau T(y)} (phi''(y) - 2 i kappa tau phi'(y)).
std::complex<double> residual_profile(double t, double y, const CaseConfig& cfg,
                                      const MollifiedTriangle& tri, const BumpProfile& bump,
                                      const AmplitudeLaw& law);

/// The residual as a physical field.
double residual_g(double t, double x1, double y, const CaseConfig& cfg,
                  const MollifiedTriangle& tri, const BumpProfile& bump, const AmplitudeLaw& law);

/// Exact heat flow of the full initial data, mode by mode.
///
/// L-part: triangle modes at frequencies k_i = 2(2i-1)pi decay as e^{-k_i^2 t}
/// in cell time.  S-part: bump modes (2 pi k) combined with the x1 rate
/// nu kappa^2, lambda_k = (2 pi k)^2 + nu kappa^2.  All norms and their time
/// integrals are closed-form mode sums; nothing is time-stepped.
class HeatFlow {
 public:
  HeatFlow(const CaseConfig& cfg, const MollifiedTriangle& tri, const BumpProfile& bump,
           int spectrum_grid = 8192);

  /// instantaneous gradient integrands (2D torus units)
  double grad_sq_L(double t) const;  ///< nu ||d_x2 u^{L,heat}||^2
  double grad_sq_S(double t) const;  ///< nu ||grad u^{S,heat}||^2

  /// energies 1/2||.||^2
  double energy_L(double t) const;
  double energy_S(double t) const;

  /// closed-form nu int_0^t ||grad .||^2 ds
  double dissipation_integral_L(double t) const;
  double dissipation_integral_S(double t) const;

  /// residual of the integrated energy balance |E(t) - E(0) + D(t)| / E(0),
  /// evaluated with the closed-form integrals (bookkeeping check)
  double energy_balance_residual(double t) const;

  const std::vector<double>& mode_mass() const { return mass_; }  ///< |phi_hat_k|^2, k=0..K
 private:
  double nu_kappa_sq_ = 0.0;
  std::vector<double> mass_;    ///< S-part: |phi_hat_k|^2 folded over +-k, k = 0..K
  std::vector<double> lam_;     ///< S-part decay rates
  std::vector<double> a_sq_;    ///< L-part: a_i^2
  std::vector<double> ksq_;     ///< L-part: k_i^2
};

/// heat_norms operation: (grad-L2 of L part, grad-L2 of S part) at time t.
std::pair<double, double> heat_norms(double t, const HeatFlow& heat);

}  // namespace edns
