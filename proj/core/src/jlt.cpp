#include "soliton/jlt.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "soliton/error.hpp"
#include "soliton/quadrature.hpp"

namespace soliton {

void SolitonParams::validate() const {
  if (n < 2) throw InvalidParams("n must be at least 2");
  if (n - 1 > kMaxChartX) throw DimensionUnsupported("n must be at most 4");
  if (!std::isfinite(alpha) || !(alpha > 0.0)) throw InvalidParams("alpha must be positive and finite");
  if (static_cast<int>(a.size()) != n - 1) throw LengthMismatch("expected n - 1 scale parameters");
  for (double aj : a) {
    if (!std::isfinite(aj) || !(aj > 0.0)) throw InvalidParams("scale parameters must be positive and finite");
  }
}

namespace jlt {

namespace {

struct Taylor2 {
  double f;
  double df;
  double d2f;
};

// l(w) = log(1 + w) / w
Taylor2 ell(double w) {
  if (w < 0.1) {
    double f = 0.0;
    double df = 0.0;
    double d2f = 0.0;
    double pw = 1.0;  // w^k
    for (int k = 0; k < 22; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      f += sign * pw / (k + 1);
      if (k + 1 < 22) {
        const double sign1 = -sign;
        df += sign1 * (k + 1) * pw / (k + 2);
      }
      if (k + 2 < 22) {
        d2f += sign * (k + 2) * (k + 1) * pw / (k + 3);
      }
      pw *= w;
    }
    return {f, df, d2f};
  }
  const double l = std::log1p(w);
  const double w2 = w * w;
  const double p1 = 1.0 + w;
  const double f = l / w;
  const double df = 1.0 / (w * p1) - l / w2;
  const double d2f = -(1.0 + 2.0 * w) / (w2 * p1 * p1) - 1.0 / (w2 * p1) + 2.0 * l / (w2 * w);
  return {f, df, d2f};
}

// G(s) = log(expm1(s) / s) for s >= 0
constexpr std::array<double, 7> kBernoulliOverFactorial = {
    1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0, 1.0 / 47900160.0,
    -5.2841901386874932e-10, 1.3382536530684679e-11};

Taylor2 log_expm1_over(double s) {
  if (std::abs(s) < 0.5) {
    double f = 0.5 * s;
    double df = 0.5;
    double d2f = 0.0;
    const double s2 = s * s;
    double pw = 1.0;  // s^(2k-2)
    for (std::size_t i = 0; i < kBernoulliOverFactorial.size(); ++i) {
      const double c = kBernoulliOverFactorial[i];
      const double k2 = 2.0 * static_cast<double>(i + 1);
      d2f += c * (k2 - 1.0) * pw;
      df += c * pw * s;
      f += c * pw * s2 / k2;
      pw *= s2;
    }
    return {f, df, d2f};
  }
  const double em = -std::expm1(-s);  // 1 - e^-s
  const double f = s + std::log(em) - std::log(s);
  const double df = 1.0 / em - 1.0 / s;
  const double d2f = -std::exp(-s) / (em * em) + 1.0 / (s * s);
  return {f, df, d2f};
}

double prod_a(const SolitonParams& params) {
  double p = 1.0;
  for (double aj : params.a) p *= aj;
  return p;
}

double prod_one_plus_a(const SolitonParams& params) {
  double p = 1.0;
  for (double aj : params.a) p *= 1.0 + aj;
  return p;
}

double log_p(const SolitonParams& params, double t) {
  const double u = t * t;
  double h = params.alpha;
  for (double aj : params.a) h += aj * ell(aj * u).f;
  return std::log(h) + log_expm1_over(exponent(params, t)).f;
}

struct XSums {
  double s = 0.0;       // sum x_j^2 / c_j
  double prod_c = 1.0;  // prod c_j
};

XSums x_sums(const SolitonParams& params, const ChartPoint& p) {
  if (p.nx() != params.nx()) throw LengthMismatch("chart point must have n - 1 x-coordinates");
  XSums out;
  const double y2 = p.y() * p.y();
  for (int j = 0; j < params.nx(); ++j) {
    const double c = 1.0 / params.a[static_cast<std::size_t>(j)] + y2;
    out.s += p.x(j) * p.x(j) / c;
    out.prod_c *= c;
  }
  return out;
}

void check_index(const SolitonParams& params, int j) {
  if (j < 0 || j >= params.nx()) throw DomainError("phi index out of range");
}

QuadResult require(const QuadResult& r, const char* what) {
  if (!r.converged) {
    throw QuadratureNoConvergence(std::string(what) + ": error estimate " + std::to_string(r.error_estimate) +
                                  " above tolerance");
  }
  return r;
}

}  // namespace

double exponent(const SolitonParams& params, double t) {
  const double u = t * t;
  double s = params.alpha * u;
  for (double aj : params.a) s += std::log1p(aj * u);
  return s;
}

double p_of_t(const SolitonParams& params, double t) { return std::exp(log_p(params, t)); }

double inv_sqrt_p(const SolitonParams& params, double t) { return std::exp(-0.5 * log_p(params, t)); }

Jet2 inv_sqrt_p_jet(const SolitonParams& params, const Jet2& t) {
  const Jet2 u = t * t;
  Jet2 s = params.alpha * u;
  Jet2 h = Jet2::constant(t.dim(), params.alpha);
  for (double aj : params.a) {
    const double w = aj * u.value();
    s += (aj * u).chain(std::log1p(w), 1.0 / (1.0 + w), -1.0 / ((1.0 + w) * (1.0 + w)));
    const Taylor2 l = ell(w);
    h += aj * (aj * u).chain(l.f, l.df, l.d2f);
  }
  const Taylor2 g = log_expm1_over(s.value());
  const Jet2 logp = log(h) + s.chain(g.f, g.df, g.d2f);
  return exp(-0.5 * logp);
}

double phi_integrand(const SolitonParams& params, int j, double t) {
  return inv_sqrt_p(params, t) / (1.0 / params.a[static_cast<std::size_t>(j)] + t * t);
}

double phi_j(const SolitonParams& params, int j, double y, double tol) {
  params.validate();
  check_index(params, j);
  if (y == 0.0) return 0.0;
  const QuadResult r =
      require(integrate_1d([&](double t) { return phi_integrand(params, j, t); }, 0.0, std::abs(y), tol), "phi_j");
  return std::copysign(r.value, y);
}

double phi_bar(const SolitonParams& params, int j, double tol) {
  params.validate();
  check_index(params, j);
  return require(integrate_ray([&](double t) { return phi_integrand(params, j, t); }, 0.0, tol), "phi_bar").value;
}

double gamma_of_y(const SolitonParams& params, double y) {
  if (y == 0.0) return std::numbers::pi / 2;
  const double r = std::expm1(exponent(params, y));
  const double base = std::atan(1.0 / std::sqrt(r));
  return y > 0.0 ? base : std::numbers::pi - base;
}

double theta_of_y(const SolitonParams& params, double y, double tol) {
  double sum = gamma_of_y(params, y);
  for (int j = 0; j < params.nx(); ++j) sum += phi_j(params, j, y, tol);
  return sum;
}

double theta_prime(const SolitonParams& params, double y) { return -params.alpha * inv_sqrt_p(params, y); }

double dphi_dy(const SolitonParams& params, int j, double y) {
  check_index(params, j);
  return phi_integrand(params, j, y);
}

double dgamma_dy(const SolitonParams& params, double y) {
  // |s'(y)| / (2 sqrt(Q - 1)) = (alpha + sum a_k / (1 + a_k y^2)) / sqrt(P)
  double rate = params.alpha;
  for (double aj : params.a) rate += aj / (1.0 + aj * y * y);
  return -rate * inv_sqrt_p(params, y);
}

AmbientPoint immerse(const SolitonParams& params, const ChartPoint& p, double tol) {
  params.validate();
  if (p.nx() != params.nx()) throw LengthMismatch("chart point must have n - 1 x-coordinates");
  const double y = p.y();
  AmbientPoint out{Eigen::VectorXd::Zero(2 * params.n)};
  double sum_x2 = 0.0;
  double theta = gamma_of_y(params, y);
  for (int j = 0; j < params.nx(); ++j) {
    const double phi = phi_j(params, j, y, tol);
    theta += phi;
    const double r = p.x(j) * std::sqrt(1.0 / params.a[static_cast<std::size_t>(j)] + y * y);
    out.coords[2 * j] = r * std::cos(phi);
    out.coords[2 * j + 1] = r * std::sin(phi);
    sum_x2 += p.x(j) * p.x(j);
  }
  out.coords[2 * params.n - 2] = 0.5 * (y * y - sum_x2);
  out.coords[2 * params.n - 1] = -theta / params.alpha;
  return out;
}

std::vector<Jet2> immerse_jet(const SolitonParams& params, const ChartPoint& p, const std::vector<double>& phi,
                              double theta) {
  if (p.nx() != params.nx()) throw LengthMismatch("chart point must have n - 1 x-coordinates");
  if (static_cast<int>(phi.size()) != params.nx()) throw LengthMismatch("expected n - 1 phase values");
  const int n = params.n;
  const double y = p.y();
  const Jet2 yj = Jet2::variable(n, n - 1, y);

  const Jet2 w1 = inv_sqrt_p_jet(params, Jet2::variable(1, 0, y));
  const double w = w1.value();
  const double dw = w1.grad(0);

  std::vector<Jet2> out(static_cast<std::size_t>(2 * n));
  Jet2 re_last = 0.5 * (yj * yj);
  for (int j = 0; j < n - 1; ++j) {
    const double inv_a = 1.0 / params.a[static_cast<std::size_t>(j)];
    const double c = inv_a + y * y;
    const double sc = std::sqrt(c);
    const Jet2 phase = yj.chain(phi[static_cast<std::size_t>(j)], w / c, dw / c - 2.0 * y * w / (c * c));
    const Jet2 radius = Jet2::variable(n, j, p.x(j)) * yj.chain(sc, y / sc, inv_a / (c * sc));
    out[static_cast<std::size_t>(2 * j)] = radius * cos(phase);
    out[static_cast<std::size_t>(2 * j + 1)] = radius * sin(phase);
    const Jet2 xj = Jet2::variable(n, j, p.x(j));
    re_last -= 0.5 * (xj * xj);
  }
  out[static_cast<std::size_t>(2 * n - 2)] = re_last;
  out[static_cast<std::size_t>(2 * n - 1)] =
      yj.chain(theta, -params.alpha * w, -params.alpha * dw) * (-1.0 / params.alpha);
  return out;
}

std::vector<Jet2> immerse_jet(const SolitonParams& params, const ChartPoint& p, double tol) {
  params.validate();
  std::vector<double> phi(static_cast<std::size_t>(params.nx()));
  double theta = gamma_of_y(params, p.y());
  for (int j = 0; j < params.nx(); ++j) {
    phi[static_cast<std::size_t>(j)] = phi_j(params, j, p.y(), tol);
    theta += phi[static_cast<std::size_t>(j)];
  }
  return immerse_jet(params, p, phi, theta);
}

Eigen::VectorXd translator(const SolitonParams& params) {
  Eigen::VectorXd t = Eigen::VectorXd::Zero(2 * params.n);
  t[2 * params.n - 2] = params.alpha;
  return t;
}

Eigen::MatrixXd g1_closed_form(const SolitonParams& params, const ChartPoint& p) {
  if (p.nx() != params.nx()) throw LengthMismatch("chart point must have n - 1 x-coordinates");
  const int m = params.nx();
  Eigen::MatrixXd g(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) g(i, j) = p.x(i) * p.x(j);
    g(i, i) += 1.0 / params.a[static_cast<std::size_t>(i)] + p.y() * p.y();
  }
  return g;
}

double det_g1_closed_form(const SolitonParams& params, const ChartPoint& p) {
  const XSums xs = x_sums(params, p);
  return (xs.s + 1.0) * xs.prod_c;
}

ClosedFormMetric metric_closed_form(const SolitonParams& params, const ChartPoint& p) {
  params.validate();
  const double y = p.y();
  if (y == 0.0) throw BranchPoint("closed-form metric is singular at y = 0");
  const XSums xs = x_sums(params, p);
  const double s = exponent(params, y);
  const double q = std::exp(s);
  const double r = std::expm1(s);
  const double y2 = y * y;

  ClosedFormMetric out;
  const int n = params.n;
  out.metric = Eigen::MatrixXd::Zero(n, n);
  out.metric.topLeftCorner(n - 1, n - 1) = g1_closed_form(params, p);
  out.metric(n - 1, n - 1) = (xs.s + 1.0) * q * y2 / r;
  const double e_alpha = std::exp(params.alpha * y2);
  out.det_g = (xs.s + 1.0) * (xs.s + 1.0) * xs.prod_c * xs.prod_c * prod_a(params) * e_alpha * y2 / r;
  out.area_density = (xs.s + 1.0) * xs.prod_c * std::sqrt(prod_a(params) * e_alpha) * std::abs(y) / std::sqrt(r);
  return out;
}

double area_density(const SolitonParams& params, const ChartPoint& p) {
  const XSums xs = x_sums(params, p);
  const double y = p.y();
  return (xs.s + 1.0) * xs.prod_c * std::sqrt(prod_a(params)) *
         std::exp(0.5 * params.alpha * y * y - 0.5 * log_p(params, y));
}

double mean_curvature_sq(const SolitonParams& params, const ChartPoint& p) {
  const XSums xs = x_sums(params, p);
  return params.alpha * params.alpha / ((xs.s + 1.0) * std::exp(exponent(params, p.y())));
}

double weighted_curvature(const SolitonParams& params, double y) {
  return params.alpha * params.alpha * std::exp(-0.5 * params.alpha * y * y - 0.5 * log_p(params, y)) /
         std::sqrt(prod_a(params));
}

double ambient_norm_sq(const SolitonParams& params, const ChartPoint& p, double theta) {
  double sum_x2 = 0.0;
  double weighted = 0.0;
  for (int j = 0; j < params.nx(); ++j) {
    sum_x2 += p.x(j) * p.x(j);
    weighted += p.x(j) * p.x(j) / params.a[static_cast<std::size_t>(j)];
  }
  const double half = 0.5 * (sum_x2 + p.y() * p.y());
  const double th = theta / params.alpha;
  return half * half + weighted + th * th;
}

double v_of_y(const SolitonParams& params, double y, double tol) {
  params.validate();
  if (!(y > 0.0)) throw DomainError("v_of_y needs y > 0");
  const double alpha = params.alpha;
  const double base_y2 = y * y;
  // v = e^{-s(y)/2} int_0^inf alpha (y + r) e^{-(s(y+r) - s(y))/2} / sqrt(1 - e^{-s(y+r)}) dr
  const auto scaled = [&](double r) {
    const double t = y + r;
    const double grow = r * (2.0 * y + r);
    double ds = alpha * grow;
    for (double aj : params.a) ds += std::log1p(aj * grow / (1.0 + aj * base_y2));
    const double s_t = exponent(params, t);
    return alpha * t * std::exp(-0.5 * ds) / std::sqrt(-std::expm1(-s_t));
  };
  QuadOptions options;
  options.ray_scale = 1.0 / std::max(1.0, alpha * y);
  const QuadResult r = require(integrate_ray(scaled, 0.0, tol, options), "v_of_y");
  return std::exp(-0.5 * exponent(params, y)) * r.value;
}

VBounds v_bounds(const SolitonParams& params, double y) {
  params.validate();
  if (params.alpha != 1.0) throw AlphaNotOne("v bounds are stated for alpha = 1");
  if (!(y >= 1.0)) throw DomainError("v bounds need y >= 1");
  const double core = std::pow(y, 1 - params.n) * std::exp(-0.5 * y * y);
  return VBounds{core / (params.n * std::sqrt(prod_one_plus_a(params))), core / std::sqrt(prod_a(params))};
}

double v_upper_strong(const SolitonParams& params, double y) {
  return std::pow(y, 1 - params.n) * std::exp(-0.5 * y * y) / std::sqrt(prod_one_plus_a(params));
}

SolitonScalars scalars(const SolitonParams& params, double tol) {
  params.validate();
  SolitonScalars out;
  for (int j = 0; j < params.nx(); ++j) {
    out.phi_bar.push_back(phi_bar(params, j, tol));
    out.theta_inf += out.phi_bar.back();
  }
  out.theta_sup = std::numbers::pi - out.theta_inf;
  out.oscillation = std::numbers::pi - 2.0 * out.theta_inf;
  out.s0 = std::exp(-0.5) / (params.n * std::sqrt(prod_one_plus_a(params)));
  return out;
}

}  // namespace jlt
}  // namespace soliton
