/// @file config.hpp
/// @brief Per-case parameters: viscosity level, wavenumbers, horizon, grid.
#pragma once

#include <cstdint>
#include <optional>

#include "edns/profiles.hpp"

namespace edns {

inline constexpr double kC0 = 4.0 * 3.14159265358979323846 * 3.14159265358979323846;

/// Optional overrides for resolution-policy values.  Values violating the
/// policy are accepted; callers record a warning instead of failing.
struct CaseOverrides {
  std::optional<int> n_y;
  std::optional<double> dt;
  std::optional<std::size_t> i_max;
};

/// One experiment instance. All fields derived from (n, alpha):
///   nu = 2^-2n, M = 2^n (cells), m = round(nu^-alpha), kappa = 2 pi m,
///   t_star = nu^(2 alpha / 3).
struct CaseConfig {
  int n = 4;
  double alpha = 0.5;
  double nu = 0.0;
  std::int64_t M = 0;      ///< nu^-1/2, integer; nu*M^2 = 1 exactly
  std::int64_t m = 1;      ///< x1 mode index
  double kappa = 0.0;      ///< 2 pi m
  double c0 = kC0;
  double t_star = 0.0;
  int n_y = 0;             ///< cell grid size (power of two)
  double dt = 0.0;
  int n_steps = 0;
  std::size_t i_max = 1024;
  bool policy_violated = false;  ///< an override broke the resolution policy

  static CaseConfig make(int n, double alpha, const CaseOverrides& o = {});
};

/// Grid and step policy: N_y = smallest power of two >= max(512, 16(1 + kappa t*/2pi)),
/// dt = min(t*/1000, 0.1/kappa).  The 512 floor resolves the bump profile's
/// spectral tail below 1e-8; the kappa term tracks the tilt phase bandwidth.
std::pair<int, double> resolution_policy(int n, double alpha);

}  // namespace edns
