#include "edns/config.hpp"

#include <cmath>

namespace edns {

namespace {
constexpr double kPi = 3.14159265358979323846;

int next_pow2(double x) {
  int p = 1;
  while (p < x) p *= 2;
  return p;
}
}  // namespace

std::pair<int, double> resolution_policy(int n, double alpha) {
  double nu = std::pow(2.0, -2.0 * n);
  double m = std::round(std::pow(nu, -alpha));
  double kappa = 2.0 * kPi * m;
  double t_star = std::pow(nu, 2.0 * alpha / 3.0);
  int n_y = next_pow2(std::max(512.0, 16.0 * (1.0 + kappa * t_star / (2.0 * kPi))));
  double dt = std::min(t_star / 1000.0, 0.1 / kappa);
  return {n_y, dt};
}

CaseConfig CaseConfig::make(int n, double alpha, const CaseOverrides& o) {
  if (n < 2) throw ConfigError("case: n must be an integer >= 2");
  if (!(alpha > 0.0) || !(alpha < 0.75)) throw ConfigError("case: alpha must lie in (0, 3/4)");

  CaseConfig c;
  c.n = n;
  c.alpha = alpha;
  c.nu = std::pow(2.0, -2.0 * n);
  c.M = std::int64_t(1) << n;
  c.m = std::llround(std::pow(c.nu, -alpha));
  if (c.m < 1) c.m = 1;
  c.kappa = 2.0 * kPi * double(c.m);
  c.t_star = std::pow(c.nu, 2.0 * alpha / 3.0);

  auto [ny, dt] = resolution_policy(n, alpha);
  c.n_y = o.n_y.value_or(ny);
  double dt_req = o.dt.value_or(dt);
  c.policy_violated = (c.n_y < ny) || (dt_req > dt * (1.0 + 1e-12));
  c.n_steps = std::max(1, int(std::ceil(c.t_star / dt_req - 1e-9)));
  c.dt = c.t_star / c.n_steps;  // land exactly on t_star
  if (o.i_max) c.i_max = *o.i_max;
  return c;
}

}  // namespace edns
