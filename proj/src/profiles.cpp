#include "edns/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace edns {
namespace {

constexpr double kPi = 3.14159265358979323846;

double e_of(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

// tanh-sinh nodes/weights on (-1,1); handles integrands that are smooth
// inside but merely C-infinity (non-analytic) at the endpoints.
struct TanhSinh {
  std::vector<double> x, w;
  explicit TanhSinh(double h = 1.0 / 12, int jmax = 80) {
    for (int j = -jmax; j <= jmax; ++j) {
      double t = h * j;
      double s = std::sinh(t);
      double xx = std::tanh(0.5 * kPi * s);
      double ch = std::cosh(0.5 * kPi * s);
      double ww = h * 0.5 * kPi * std::cosh(t) / (ch * ch);
      if (1.0 - std::abs(xx) < 1e-17) continue;
      x.push_back(xx);
      w.push_back(ww);
    }
  }
  template <class F>
  double integrate(const F& f, double a, double b) const {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += w[j] * f(mid + half * x[j]);
    return acc * half;
  }
};

const TanhSinh& ts_rule() {
  static const TanhSinh rule;
  return rule;
}

// mollifier rho(x) ~ exp(-1/(1-x^2)) on (-1,1), normalized to unit mass
double rho_raw(double x) { return std::abs(x) < 1.0 ? std::exp(-1.0 / (1.0 - x * x)) : 0.0; }

double rho_norm() {
  static const double z = ts_rule().integrate([](double x) { return rho_raw(x); }, -1.0, 1.0);
  return z;
}

// exact unmollified triangle: T0(z) = z on [-1/4,1/4], 1/2 - z on [1/4,3/4]
double tri0(double z) {
  z -= std::floor(z + 0.25);  // to [-1/4, 3/4)
  return z <= 0.25 ? z : 0.5 - z;
}

double reduce_unit(double z) { return z - std::floor(z); }

}  // namespace

double SmoothStep::value(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double u = e_of(x), v = e_of(1.0 - x);
  return u / (u + v);
}

double SmoothStep::deriv1(double x) {
  if (x <= 1e-9 || x >= 1.0 - 1e-9) return 0.0;
  double u = e_of(x), v = e_of(1.0 - x);
  double w1 = 1.0 / (x * x), w2 = 1.0 / ((1.0 - x) * (1.0 - x));
  double den = u + v;
  return u * v * (w1 + w2) / (den * den);
}

double SmoothStep::deriv2(double x) {
  if (x <= 1e-9 || x >= 1.0 - 1e-9) return 0.0;
  double u = e_of(x), v = e_of(1.0 - x);
  double w1 = 1.0 / (x * x), w2 = 1.0 / ((1.0 - x) * (1.0 - x));
  double den = u + v;
  double t1 = u * v * (w1 - w2) * (w1 + w2) / (den * den);
  double t2 = u * v * (-2.0 / (x * x * x) + 2.0 / std::pow(1.0 - x, 3)) / (den * den);
  double t3 = -2.0 * u * v * (w1 + w2) * (u * w1 - v * w2) / (den * den * den);
  return t1 + t2 + t3;
}

double BumpProfile::eval(double z, int order) const {
  if (order < 0 || order > 2) throw ConfigError("bump_eval: order must be 0, 1 or 2");
  double y = reduce_unit(z);
  if (y <= z0 || y >= z3) return 0.0;
  if (y >= z1 && y <= z2) return order == 0 ? 1.0 : 0.0;
  if (y < z1) {  // rise
    double w = z1 - z0, x = (y - z0) / w;
    switch (order) {
      case 0: return SmoothStep::value(x);
      case 1: return SmoothStep::deriv1(x) / w;
      default: return SmoothStep::deriv2(x) / (w * w);
    }
  }
  double w = z3 - z2, x = (z3 - y) / w;  // fall (mirrored)
  switch (order) {
    case 0: return SmoothStep::value(x);
    case 1: return -SmoothStep::deriv1(x) / w;
    default: return SmoothStep::deriv2(x) / (w * w);
  }
}

double MollifiedTriangle::eval(double z, int order) const {
  if (order < 0 || order > 2) throw ConfigError("triangle_eval: order must be 0, 1 or 2");
  double y = reduce_unit(z);
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    double k = freq(i + 1);
    switch (order) {
      case 0: acc += coeffs[i] * std::sin(k * y); break;
      case 1: acc += coeffs[i] * k * std::cos(k * y); break;
      default: acc -= coeffs[i] * k * k * std::sin(k * y); break;
    }
  }
  return acc;
}

double MollifiedTriangle::eval_direct(double z) const {
  double y = reduce_unit(z);
  // distance to the nearest corner (z = 1/4 or 3/4)
  double d1 = std::abs(y - 0.25), d2 = std::abs(y - 0.75);
  if (std::min(d1, d2) >= delta) return tri0(y);
  // convolution T(z) = int rho(x) T0(z - delta x) dx, split at the kink
  double corner = d1 < d2 ? 0.25 : 0.75;
  double xk = (y - corner) / delta;  // kink location in mollifier coordinates
  const auto f = [&](double x) { return rho_raw(x) * tri0(y - delta * x); };
  double acc = ts_rule().integrate(f, -1.0, xk) + ts_rule().integrate(f, xk, 1.0);
  return acc / rho_norm();
}

MollifiedTriangle build_triangle(double delta, std::size_t i_max, std::size_t quad_points) {
  if (!(delta > 0.0) || delta > 1.0 / 128)
    throw ConfigError("build_triangle: delta must lie in (0, 1/128]");
  if (i_max < 64) throw ConfigError("build_triangle: i_max must be >= 64");
  if (quad_points < (std::size_t(1) << 14))
    throw ConfigError("build_triangle: quadrature grid must have >= 2^14 points");

  MollifiedTriangle tri;
  tri.delta = delta;
  tri.plateau = 0.25 - delta;
  tri.coeffs.assign(i_max, 0.0);

  // pointwise values on the quadrature grid; off-corner points are exact
  const std::size_t N = quad_points;
  std::vector<double> tv(N);
  for (std::size_t j = 0; j < N; ++j) {
    double y = double(j) / double(N);
    double d = std::min(std::abs(y - 0.25), std::abs(y - 0.75));
    tv[j] = d >= delta ? tri0(y) : tri.eval_direct(y);
  }
  // a_i = 2 int_0^1 T(z) sin(2(2i-1)pi z) dz by the trapezoidal rule
  // (periodic integrand, so the plain mean is the trapezoidal rule)
  for (std::size_t i = 1; i <= i_max; ++i) {
    double k = MollifiedTriangle::freq(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < N; ++j) acc += tv[j] * std::sin(k * double(j) / double(N));
    tri.coeffs[i - 1] = 2.0 * acc / double(N);
  }
  return tri;
}

bool ProfileReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ProfileCheck& c) { return c.pass; });
}

std::string ProfileReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks)
    os << (c.pass ? "[pass] " : "[FAIL] ") << c.name << "  measured=" << c.measured
       << " bound=" << c.bound << "\n";
  return os.str();
}

ProfileReport validate_profiles(const MollifiedTriangle& tri, const BumpProfile& bump) {
  ProfileReport rep;
  auto add = [&](const std::string& name, double measured, double bound, bool pass) {
    rep.checks.push_back({name, pass, measured, bound});
  };

  const int NZ = 2048;
  // T(z) = z on the plateau
  double worst = 0.0;
  for (int j = 0; j <= NZ; ++j) {
    double z = -tri.plateau + 2.0 * tri.plateau * j / NZ;
    worst = std::max(worst, std::abs(tri.eval(z) - z));
  }
  add("triangle: T(z) = z on [-1/4+delta, 1/4-delta]", worst, 1e-12, worst <= 1e-12);

  // oddness and antiperiodicity (pointwise, series evaluation)
  double w_odd = 0.0, w_anti = 0.0;
  for (int j = 0; j < 257; ++j) {
    double z = double(j) / 257.0;
    w_odd = std::max(w_odd, std::abs(tri.eval(-z) + tri.eval(z)));
    w_anti = std::max(w_anti, std::abs(tri.eval(z + 0.5) + tri.eval(z)));
  }
  add("triangle: oddness T(-z) = -T(z)", w_odd, 1e-12, w_odd <= 1e-12);
  add("triangle: antiperiodicity T(z+1/2) = -T(z)", w_anti, 1e-12, w_anti <= 1e-12);

  // coefficient decay |a_i| i^8 bounded
  double dmax = 0.0;
  for (std::size_t i = 1; i <= tri.i_max(); ++i)
    dmax = std::max(dmax, std::abs(tri.coeffs[i - 1]) * std::pow(double(i), 8.0));
  add("triangle: |a_i| i^8 bounded", dmax, 1e10, dmax <= 1e10);

  // series reproduces the construction pointwise
  double w_series = 0.0;
  for (int j = 0; j < 4096; ++j) {
    double z = double(j) / 4096.0;
    w_series = std::max(w_series, std::abs(tri.eval(z) - tri.eval_direct(z)));
  }
  add("triangle: series vs construction sup error", w_series, 1e-12, w_series <= 1e-12);

  // bump support and plateau conditions
  bool geom = bump.z0 < bump.z1 && bump.z1 < bump.z2 && bump.z2 < bump.z3;
  add("bump: breakpoints ordered", geom ? 1.0 : 0.0, 1.0, geom);
  bool plateau_ok = bump.z1 <= 1.0 / 8 && bump.z2 >= 3.0 / 16;
  add("bump: [z1,z2] contains [1/8,3/16]", plateau_ok ? 1.0 : 0.0, 1.0, plateau_ok);
  bool support_ok = bump.z0 > 0.0 && bump.z3 < 0.25;
  add("bump: support inside (0, 1/4)", support_ok ? 1.0 : 0.0, 1.0, support_ok);
  bool inside_plateau = bump.z3 < tri.plateau && bump.z0 > 0.0;
  add("bump: support inside triangle plateau", tri.plateau - bump.z3, 0.0, inside_plateau);

  // range and vanishing outside support
  double lo = 0.0, hi = 0.0, outside = 0.0;
  for (int j = 0; j < 4096; ++j) {
    double z = double(j) / 4096.0;
    double v = bump.eval(z);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    if (z <= bump.z0 || z >= bump.z3) outside = std::max(outside, std::abs(v));
  }
  add("bump: 0 <= phi <= 1", std::max(-lo, hi - 1.0), 0.0, lo >= 0.0 && hi <= 1.0);
  add("bump: phi = 0 outside support", outside, 0.0, outside == 0.0);

  // derivatives vanish on plateau and outside support
  double dev = 0.0;
  for (double z : {0.5 * (bump.z1 + bump.z2), 5.0 / 32, 0.5, 0.01}) {
    dev = std::max(dev, std::abs(bump.eval(z, 1)));
    dev = std::max(dev, std::abs(bump.eval(z, 2)));
  }
  add("bump: phi' = phi'' = 0 on plateau and outside", dev, 0.0, dev == 0.0);

  return rep;
}

nlohmann::json to_json(const MollifiedTriangle& tri) {
  return nlohmann::json{{"delta", tri.delta},
                        {"plateau", tri.plateau},
                        {"i_max", tri.i_max()},
                        {"coeffs", tri.coeffs}};
}

nlohmann::json to_json(const BumpProfile& bump) {
  return nlohmann::json{{"z0", bump.z0}, {"z1", bump.z1}, {"z2", bump.z2}, {"z3", bump.z3}};
}

}  // namespace edns
