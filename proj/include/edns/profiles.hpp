/// @file profiles.hpp
/// @brief The two profile functions the construction is built from: a smoothed
/// triangular wave T (odd, antiperiodic, exactly linear on a plateau) and a
/// C-infinity bump phi (0/1 plateau with smoothstep transitions).
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace edns {

/// Configuration errors (bad profile parameters, bad case parameters).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// C-infinity unit smoothstep built from e(x) = exp(-1/x):
/// S(x) = e(x) / (e(x) + e(1-x)),  S = 0 for x <= 0, S = 1 for x >= 1.
/// S(x) + S(1-x) = 1, so transitions integrate to exactly half their width.
struct SmoothStep {
  static double value(double x);
  static double deriv1(double x);
  static double deriv2(double x);
};

/// Smooth bump: 0 outside (z0, z3), 1 on [z1, z2], smoothstep rise/fall.
/// Rise and fall widths may differ; no symmetry is assumed.
struct BumpProfile {
  double z0 = 1.0 / 16;
  double z1 = 1.0 / 8;
  double z2 = 3.0 / 16;
  double z3 = 7.0 / 32;

  /// Evaluate phi, phi' or phi'' at z (reduced mod 1). order in {0,1,2}.
  double eval(double z, int order = 0) const;
};

/// Triangular wave smoothed by convolution with a compactly supported
/// C-infinity mollifier of half-width delta.  Exactly linear (T(z) = z) on
/// [-1/4+delta, 1/4-delta]; odd; antiperiodic T(z+1/2) = -T(z), so the sine
/// series contains only frequencies 2(2i-1)pi.
struct MollifiedTriangle {
  double delta = 1.0 / 128;
  double plateau = 1.0 / 4 - 1.0 / 128;  ///< half-width of exact linearity
  std::vector<double> coeffs;            ///< a_i, i = 1..I_max

  std::size_t i_max() const { return coeffs.size(); }
  /// Frequency of term i (1-based): 2(2i-1)pi.
  static double freq(std::size_t i) { return 2.0 * (2.0 * double(i) - 1.0) * 3.14159265358979323846; }

  /// Evaluate T, T' or T'' at z via the truncated sine series.
  double eval(double z, int order = 0) const;

  /// Reference evaluation straight from the mollified construction
  /// (plateau shortcut + convolution quadrature near the corners).
  double eval_direct(double z) const;
};

/// Build the mollified triangle.  Coefficients come from trapezoidal
/// quadrature of 2 T(z) sin(2(2i-1)pi z) on a uniform grid of quad_points
/// (>= 2^14) points; T itself is evaluated from the convolution.
/// pre: 0 < delta <= 1/128, i_max >= 64.
MollifiedTriangle build_triangle(double delta = 1.0 / 128, std::size_t i_max = 1024,
                                 std::size_t quad_points = std::size_t(1) << 15);

/// One validated invariant with its measured margin.
struct ProfileCheck {
  std::string name;
  bool pass = false;
  double measured = 0.0;  ///< measured quantity (violation magnitude or margin)
  double bound = 0.0;     ///< the bound it was checked against
};

struct ProfileReport {
  std::vector<ProfileCheck> checks;
  bool all_pass() const;
  std::string summary() const;
};

/// Check every invariant of both profiles; returns pass/fail with margins.
ProfileReport validate_profiles(const MollifiedTriangle& tri, const BumpProfile& bump);

nlohmann::json to_json(const MollifiedTriangle& tri);
nlohmann::json to_json(const BumpProfile& bump);

}  // namespace edns
