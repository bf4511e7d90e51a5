#include "soliton/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "soliton/error.hpp"
#include "soliton/quadrature.hpp"

namespace soliton {

namespace {

// Integrands below are dropped once they fall this far (in log) below their peak.
constexpr double kLogCutoff = 60.0;

QuadResult require(const QuadResult& r, const char* what) {
  if (!r.converged) {
    throw QuadratureNoConvergence(std::string(what) + ": error estimate " +
                                  std::to_string(r.error_estimate) + " above tolerance");
  }
  return r;
}

// Walks outward from `from` in steps of `step` until `log_f` drops kLogCutoff below `peak`.
template <typename F>
double find_cutoff(const F& log_f, double from, double step, double peak) {
  double s = from;
  for (int i = 0; i < 4000; ++i) {
    s += step;
    if (log_f(s) < peak - kLogCutoff) return s;
    step *= 1.25;
  }
  throw QuadratureNoConvergence("integrand does not decay");
}

void check_z(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw NonPositiveArgument("Bessel argument must be positive and finite");
}

}  // namespace

BesselOrder::BesselOrder(double nu) : nu_(nu) {
  if (!std::isfinite(nu) || nu < 0.0) throw DomainError("Bessel order must be finite and nonnegative");
}

GammaArgs::GammaArgs(double a, double x) : a_(a), x_(x) {
  if (!std::isfinite(a) || !std::isfinite(x)) throw DomainError("gamma arguments must be finite");
  if (x < 0.0) throw DomainError("gamma lower limit must be nonnegative");
}

double bessel_k_scaled(BesselOrder order, double z, double tol) {
  check_z(z);
  const double nu = order.nu();
  const double log_half_z = std::log(0.5 * z);
  // exponent of (1/2) e^z (z/2)^nu t^-nu exp(-z^2/(4t) - t) in s = log t (the dt/t is absorbed)
  const auto log_f = [&](double s) {
    return nu * log_half_z - nu * s - 0.25 * z * z * std::exp(-s) - std::exp(s) + z;
  };
  const double t_peak = 0.5 * (std::sqrt(nu * nu + z * z) - nu);
  const double s_peak = std::log(t_peak);
  const double peak = log_f(s_peak);
  const double lo = find_cutoff(log_f, s_peak, -0.5, peak);
  const double hi = find_cutoff(log_f, s_peak, 0.5, peak);
  const QuadResult r = require(
      integrate_1d([&](double s) { return std::exp(log_f(s)); }, lo, hi, 2.0 * tol), "bessel_k");
  return 0.5 * r.value;
}

double bessel_k_cosh_scaled(BesselOrder order, double z, double tol) {
  check_z(z);
  const double nu = order.nu();
  const auto log_f = [&](double u) {
    const double log_cosh = nu * u + std::log1p(std::exp(-2.0 * nu * u)) - std::numbers::ln2;
    const double sh = std::sinh(0.5 * u);
    return log_cosh - 2.0 * z * sh * sh;
  };
  // the exponent is concave in u; locate its maximum on [0, inf) by stepping, then cut the tail
  double u_peak = 0.0;
  double peak = log_f(0.0);
  for (double u = 0.25;; u += 0.25) {
    const double v = log_f(u);
    if (v < peak) break;
    peak = v;
    u_peak = u;
  }
  const double hi = find_cutoff(log_f, u_peak, 0.5, peak);
  const QuadResult r =
      require(integrate_1d([&](double u) { return std::exp(log_f(u)); }, 0.0, hi, tol), "bessel_k_cosh");
  return r.value;
}

double bessel_k(BesselOrder order, double z, double tol, bool cross_check) {
  const double scale = std::exp(-z);
  const double value = scale * bessel_k_scaled(order, z, tol);
  if (cross_check) {
    const double oracle = scale * bessel_k_cosh_scaled(order, z, tol);
    if (std::abs(value - oracle) > 10.0 * tol) {
      throw QuadratureNoConvergence("bessel_k: integral representations disagree beyond 10 * tol");
    }
  }
  return value;
}

double bessel_k_cosh(BesselOrder order, double z, double tol) {
  return std::exp(-z) * bessel_k_cosh_scaled(order, z, tol);
}

double upper_gamma_scaled(GammaArgs args, double tol) {
  const double a = args.a();
  const double x = args.x();
  if (!(x > 0.0)) throw DomainError("scaled incomplete gamma needs x > 0");
  // t = x (1 + w / x): x^(1-a) e^x Gamma(a, x) = int_0^inf (1 + w/x)^(a-1) e^-w dw
  const QuadResult r = require(
      integrate_ray([&](double w) { return std::exp((a - 1.0) * std::log1p(w / x) - w); }, 0.0, tol),
      "upper_gamma_scaled");
  return r.value;
}

double upper_gamma(GammaArgs args, double tol) {
  const double a = args.a();
  const double x = args.x();
  if (x == 0.0 && a <= 0.0) throw DomainError("Gamma(a, 0) diverges for a <= 0");

  if (x >= 1.0) {
    const double prefactor = std::exp((a - 1.0) * std::log(x) - x);
    return prefactor * upper_gamma_scaled(args, tol / std::max(1.0, prefactor));
  }

  // split at t = 1: finite part on [x, 1] plus Gamma(a, 1)
  const double tail = std::exp(-1.0) * upper_gamma_scaled(GammaArgs(a, 1.0), 0.5 * tol);
  double head = 0.0;
  if (a > 0.0) {
    // t = s^(1/a) turns t^(a-1) dt into ds / a
    const double s_lo = std::pow(x, a);
    head = require(integrate_1d([&](double s) { return std::exp(-std::pow(s, 1.0 / a)); }, s_lo, 1.0,
                                0.5 * tol * a),
                   "upper_gamma")
               .value /
           a;
  } else {
    // t = e^u
    head = require(integrate_1d([&](double u) { return std::exp(a * u - std::exp(u)); }, std::log(x), 0.0,
                                0.5 * tol),
                   "upper_gamma")
               .value;
  }
  return head + tail;
}

double bessel_ray_infimum(BesselOrder order, double z_min, int grid, double tol) {
  if (!(z_min > 0.0)) throw NonPositiveArgument("z_min must be positive");
  if (grid < 2) throw DomainError("grid needs at least two points");
  const double nu = order.nu();
  const double z_star = std::max(50.0, 10.0 * z_min);
  const double floor =
      std::sqrt(std::numbers::pi / 2.0) * (1.0 - 1.1 * std::abs(4.0 * nu * nu - 1.0) / (8.0 * z_star));
  if (!(floor > 0.0)) throw DomainError("asymptotic floor is not positive at Z*; order too large");

  double best = floor;
  const double ratio = std::log(z_star / z_min) / (grid - 1);
  for (int i = 0; i < grid; ++i) {
    const double z = z_min * std::exp(ratio * i);
    best = std::min(best, std::sqrt(z) * bessel_k_scaled(order, z, tol));
  }
  return best;
}

}  // namespace soliton
