#include "lab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "soliton/error.hpp"
#include "soliton/geometry.hpp"
#include "soliton/jlt.hpp"
#include "soliton/monotone.hpp"
#include "soliton/specfun.hpp"

namespace lab {

namespace {

using namespace soliton;

std::string label(const SolitonParams& p) {
  std::string out = "n=" + std::to_string(p.n) + " a=(";
  for (std::size_t j = 0; j < p.a.size(); ++j) out += (j ? "," : "") + format_double(p.a[j]);
  return out + ") alpha=" + format_double(p.alpha);
}

double rel(double measured, double reference) {
  return std::abs(measured - reference) / std::max(std::abs(reference), 1e-300);
}

class Rows {
 public:
  explicit Rows(std::string suite) : suite_(std::move(suite)) {}

  void add(std::string group, std::string name, double measured, double gate, Compare compare = Compare::AtMost) {
    rows_.push_back(CheckRow{suite_, std::move(group), std::move(name), measured, gate, compare});
  }
  std::vector<CheckRow> take() { return std::move(rows_); }

 private:
  std::string suite_;
  std::vector<CheckRow> rows_;
};

bool same_params(const SolitonParams& l, const SolitonParams& r) {
  return l.n == r.n && l.alpha == r.alpha && l.a == r.a;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"geometry", "bounds", "specfun", "monotonicity"};
  return names;
}

std::vector<SolitonParams> reference_parameter_sets() {
  SolitonParams two;
  SolitonParams three;
  three.n = 3;
  three.a = {1.0, 2.0};
  return {two, three};
}

std::vector<CheckRow> geometry_checks(const Soliton& s, const Grids& grids) {
  const SolitonParams& params = s.params();
  const std::string tag = " [" + label(params) + "]";
  const Eigen::VectorXd t_vec = s.translator();
  const JetImmersion immersion = s.jet_immersion();

  double translator = 0.0;
  double metric_rel = 0.0;
  double det_rel = 0.0;
  double density_rel = 0.0;
  double h2_rel = 0.0;
  double defect = 0.0;
  double angle = 0.0;
  double h_grad = 0.0;
  for (const ChartPoint& p : chart_grid(grids, params.nx())) {
    const GeometryFrame f = s.frame(p);
    translator = std::max(translator, translator_residual(f, t_vec));
    const ClosedFormMetric c = jlt::metric_closed_form(params, p);
    metric_rel = std::max(metric_rel, (f.metric - c.metric).cwiseAbs().maxCoeff() / c.metric.cwiseAbs().maxCoeff());
    det_rel = std::max(det_rel, rel(f.metric.determinant(), c.det_g));
    density_rel = std::max({density_rel, rel(f.area_density, c.area_density),
                            rel(jlt::area_density(params, p), c.area_density)});
    h2_rel = std::max(h2_rel, rel(f.mean_curvature.squaredNorm(), jlt::mean_curvature_sq(params, p)));
    defect = std::max(defect, lagrangian_defect(f));
    const double theta = s.theta(p.y());
    angle = std::max({angle, std::abs(f.cos_theta - std::cos(theta)), std::abs(f.sin_theta - std::sin(theta))});
    h_grad = std::max(h_grad, h_equals_j_grad_theta_residual(immersion, p, 1e-5));
  }

  Rows rows("geometry");
  rows.add("translator", "translator: max |T^perp - H|" + tag, translator, 1e-6);
  rows.add("closed_form", "metric entries: closed form vs AD (relative)" + tag, metric_rel, 1e-8);
  rows.add("closed_form", "det g: closed form vs AD (relative)" + tag, det_rel, 1e-8);
  rows.add("closed_form", "area density: closed form vs AD (relative)" + tag, density_rel, 1e-8);
  rows.add("closed_form", "|H|^2: closed form vs AD (relative)" + tag, h2_rel, 1e-8);
  rows.add("lagrangian", "symplectic defect max |<J F_i, F_j>|" + tag, defect, 1e-10);
  rows.add("lagrangian", "angle: det phase vs sum phi_j + gamma" + tag, angle, 1e-8);
  rows.add("lagrangian", "H = J grad theta, step 1e-5" + tag, h_grad, 1e-5);

  // angle endpoints and strict decrease
  const SolitonScalars& sc = s.scalars();
  rows.add("angle", "theta(0) = pi/2" + tag, std::abs(s.theta(0.0) - std::numbers::pi / 2), 0.0);
  const double above = s.theta(6.0) - sc.theta_inf;
  const double below = sc.theta_sup - s.theta(-6.0);
  if (params.alpha == 1.0) {
    const VBounds b = jlt::v_bounds(params, 6.0);
    rows.add("angle", "theta(6) - theta_inf inside the v envelope (relative margin)" + tag,
             std::min(above - b.lower, b.upper - above) / b.upper, 0.0, Compare::Above);
    rows.add("angle", "theta_sup - theta(-6) inside the v envelope (relative margin)" + tag,
             std::min(below - b.lower, b.upper - below) / b.upper, 0.0, Compare::Above);
  } else {
    rows.add("angle", "theta(6) above theta_inf" + tag, above, 0.0, Compare::Above);
    rows.add("angle", "theta(-6) below theta_sup" + tag, below, 0.0, Compare::Above);
  }
  double min_drop = INFINITY;
  double previous = s.theta(-6.0);
  for (int i = 1; i <= 240; ++i) {
    const double th = s.theta(-6.0 + 0.05 * i);
    min_drop = std::min(min_drop, previous - th);
    previous = th;
  }
  rows.add("angle", "theta strictly decreasing on [-6, 6] (min step drop)" + tag, min_drop, 0.0, Compare::Above);

  // derivative displays, their signs, the telescoping identity and finite differences
  double min_dphi = INFINITY;
  double max_dgamma = -INFINITY;
  double telescoping = 0.0;
  double fd = 0.0;
  const double h = 1e-4;
  for (double y : y_grid(grids)) {
    double sum = jlt::dgamma_dy(params, y);
    max_dgamma = std::max(max_dgamma, jlt::dgamma_dy(params, y));
    for (int j = 0; j < params.nx(); ++j) {
      const double d = jlt::dphi_dy(params, j, y);
      min_dphi = std::min(min_dphi, d);
      sum += d;
      fd = std::max(fd, std::abs((s.phi(j, y + h) - s.phi(j, y - h)) / (2 * h) - d));
    }
    telescoping = std::max(telescoping, std::abs(sum - jlt::theta_prime(params, y)));
    fd = std::max(fd, std::abs((s.theta(y + h) - s.theta(y - h)) / (2 * h) - jlt::theta_prime(params, y)));
    fd = std::max(fd, std::abs((jlt::gamma_of_y(params, y + h) - jlt::gamma_of_y(params, y - h)) / (2 * h) -
                               jlt::dgamma_dy(params, y)));
  }
  rows.add("angle", "min d phi_j / dy" + tag, min_dphi, 0.0, Compare::Above);
  rows.add("angle", "-max d gamma / dy" + tag, -max_dgamma, 0.0, Compare::Above);
  rows.add("angle", "sum d phi_j + d gamma = d theta" + tag, telescoping, 1e-12);
  rows.add("angle", "derivative displays vs finite differences" + tag, fd, 1e-7);
  return rows.take();
}

std::vector<CheckRow> bounds_checks(const std::vector<SolitonParams>& sets, double check_tol) {
  Rows rows("bounds");
  for (const SolitonParams& params : sets) {
    const std::string tag = " [" + label(params) + "]";
    if (params.alpha != 1.0) continue;
    const SolitonScalars sc = jlt::scalars(params, 1e-13);
    double margin = INFINITY;
    double identity = 0.0;
    for (int i = 0; i <= 10; ++i) {
      const double y = 1.0 + 0.5 * i;
      const double v = jlt::v_of_y(params, y, check_tol);
      const VBounds b = jlt::v_bounds(params, y);
      margin = std::min(margin, std::min(v - b.lower, b.upper - v) / v);
      identity = std::max(identity, std::abs(v - (jlt::theta_of_y(params, y, 1e-13) - sc.theta_inf)));
    }
    rows.add("v_bounds", "lower < v(y) < upper on y = 1..6 (relative margin)" + tag, margin, 0.0, Compare::Above);
    rows.add("v_bounds", "v(y) = theta(y) - theta_inf" + tag, identity, 1e-9);
    rows.add("v_bounds", "v(1) - s0 ({v <= s0} lies in {y >= 1})" + tag, jlt::v_of_y(params, 1.0, check_tol) - sc.s0,
             0.0, Compare::AtLeast);
  }
  return rows.take();
}

std::vector<CheckRow> specfun_checks(const SuiteOptions& options) {
  const double scale = options.bessel_scale;
  const auto k_under_test = [scale](double nu, double z, double tol) {
    return scale * bessel_k(BesselOrder(nu), z, tol, false);
  };
  const std::vector<double> z_grid{0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  Rows rows("specfun");

  double half = 0.0;
  for (double z : z_grid) {
    const double exact = std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z);
    half = std::max(half, std::abs(k_under_test(0.5, z, 1e-12) - exact));
  }
  rows.add("special_functions", "K_{1/2} vs closed form", half, 1e-10);

  double agreement = 0.0;
  for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    for (double z : z_grid) {
      agreement = std::max(agreement, rel(k_under_test(nu, z, 1e-12), bessel_k_cosh(BesselOrder(nu), z, 1e-12)));
    }
  }
  rows.add("special_functions", "K_nu: log-t vs cosh representation (relative)", agreement, 1e-9);

  double recurrence = 0.0;
  for (double nu : {1.0, 1.5, 2.5}) {
    for (double z : {0.5, 1.0, 3.0}) {
      const double r = k_under_test(nu + 1.0, z, 1e-12) - k_under_test(nu - 1.0, z, 1e-12) -
                       (2.0 * nu / z) * k_under_test(nu, z, 1e-12);
      recurrence = std::max(recurrence, std::abs(r));
    }
  }
  rows.add("special_functions", "K recurrence K_{nu+1} - K_{nu-1} - (2 nu / z) K_nu", recurrence, 1e-8);

  double gamma_margin = INFINITY;
  for (double a : {-1.0, -0.5, 0.0, 0.25, 0.5, 0.75}) {
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
      const double scaled = upper_gamma_scaled(GammaArgs(a, x), 1e-13);
      gamma_margin = std::min({gamma_margin, scaled - x / (x + 1.0 - a), (x + 1.0) / (x + 2.0 - a) - scaled});
    }
  }
  rows.add("special_functions", "x/(x+1-a) < x^(1-a) e^x Gamma(a,x) < (x+1)/(x+2-a) (margin)", gamma_margin, 0.0,
           Compare::Above);
  const double e_gamma = std::exp(1.0) * upper_gamma(GammaArgs(0.5, 1.0), 1e-13);
  rows.add("special_functions", "2/3 < e Gamma(1/2, 1) < 4/5 (margin)",
           std::min(e_gamma - 2.0 / 3.0, 4.0 / 5.0 - e_gamma), 0.0, Compare::Above);

  double heat = 0.0;
  for (double q : {1.0, 2.0}) {
    for (double m : {1.0, 2.0}) {
      for (int n : {2, 3, 4}) {
        const HeatKernelCheck c = heat_kernel_bessel_identity(q, m, n, 1e-11);
        heat = std::max(heat, std::abs(c.lhs - scale * c.rhs));
      }
    }
  }
  rows.add("special_functions", "heat kernel tau integral = 2 (m/q)^nu K_nu(mq/2)", heat, 1e-8);

  double infimum = INFINITY;
  for (double nu : {0.0, 0.5, 1.0}) {
    for (double z_min : {0.1, 1.0, 10.0}) infimum = std::min(infimum, bessel_ray_infimum(BesselOrder(nu), z_min, 64));
  }
  rows.add("special_functions", "inf of sqrt(z) e^z K_nu(z) on [z_min, inf)", infimum, 0.0, Compare::Above);
  return rows.take();
}

std::vector<CheckRow> monotonicity_checks(const Soliton& s, const ExperimentConfig& cfg) {
  const SolitonParams& params = s.params();
  const int n = params.n;
  const std::string tag = " [" + label(params) + "]";
  const double tol = n == 2 ? std::max(cfg.tolerances.check_tol, 1e-9) : std::max(cfg.tolerances.check_tol, 1e-6);
  const TranslatingSoliton surface(s);
  const RealFunction square = [](double th) { return th * th; };
  const RealFunction two = [](double) { return 2.0; };
  const AmbientPoint x0 = s.immerse(ChartPoint(std::vector<double>(static_cast<std::size_t>(n - 1), 0.0), 0.0));
  Rows rows("monotonicity");

  double identity = 0.0;
  double increase = -INFINITY;
  for (double t : {-1.0, -0.5, -0.25}) {
    KernelArgs k;
    k.x0 = x0;
    k.t = t;
    const MonotonicityCheck c = monotonicity_residual(surface, square, two, k, default_time_step(k), tol);
    identity = std::max(identity, c.residual / (1.0 + std::abs(c.rhs)));
    increase = std::max(increase, c.lhs - c.error_budget);
  }
  rows.add("monotonicity", "d/dt Phi_f = RHS for f = theta^2 at t = -1, -0.5, -0.25 (relative)" + tag, identity,
           1e-3);
  rows.add("monotonicity", "Phi_f non-increasing for f = theta^2 (d/dt minus budget)" + tag, increase, 0.0);

  {
    const FDeltaParams p = FDeltaParams::for_oscillation(1e-2, s.scalars().oscillation);
    const double theta_inf = s.scalars().theta_inf;
    KernelArgs k;
    k.x0 = x0;
    k.t = -0.5;
    const MonotonicityCheck c = monotonicity_residual(
        surface, [&](double th) { return f_delta(std::max(0.0, th - theta_inf), p); },
        [&](double th) { return f_delta_second(std::max(0.0, th - theta_inf), p); }, k, default_time_step(k), tol);
    rows.add("monotonicity", "Phi_f non-increasing for f = f_delta, delta = 1e-2 (d/dt minus budget)" + tag,
             c.lhs - c.error_budget, 0.0);
  }

  {
    const LagrangianPlane plane(n, 0.3);
    KernelArgs k;
    k.x0 = plane.position(ChartPoint(std::vector<double>(static_cast<std::size_t>(n - 1), 0.2), -0.4));
    k.t = -0.7;
    const MonotonicityCheck c = monotonicity_residual(
        plane, [](double) { return 1.0; }, [](double) { return 0.0; }, k, default_time_step(k), 1e-11);
    rows.add("monotonicity", "plane through X0: d/dt Phi = RHS = 0", c.residual, 1e-9);
  }

  double eps_min = INFINITY;
  for (double delta = 1e-1; delta >= 1e-10 * 0.999; delta /= 10.0) {
    eps_min = std::min(eps_min, epsilon_for_f(FDeltaParams::for_oscillation(delta, s.scalars().oscillation), 1000));
  }
  rows.add("divergence", "min epsilon certificate over delta = 1e-1..1e-10" + tag, eps_min, 0.0, Compare::Above);

  double x_margin = INFINITY;
  for (const ChartPoint& p : chart_grid(cfg.grids, params.nx())) {
    x_margin = std::min(x_margin, s.immerse(p).coords.norm() - s.scalars().theta_inf);
  }
  rows.add("divergence", "|X| - theta_inf on the grid" + tag, x_margin, 0.0, Compare::AtLeast);

  rows.add("divergence", "necessary-condition integral for f = 1" + tag,
           std::abs(necessary_lhs(s, {}, AngleWeight::constant(1.0), cfg.tolerances.quad_tol).value), 0.0);
  const std::size_t count = std::min<std::size_t>(3, cfg.sweep.size());
  double step = INFINITY;
  double previous = -INFINITY;
  for (std::size_t i = 0; i < count; ++i) {
    const FDeltaParams p = FDeltaParams::for_oscillation(cfg.sweep[i], s.scalars().oscillation);
    const double value = necessary_lhs(s, {}, p, cfg.tolerances.quad_tol).value;
    if (i > 0) step = std::min(step, value - previous);
    previous = value;
  }
  if (count > 1) {
    rows.add("divergence", "necessary-condition integral increasing over the first sweep deltas" + tag, step, 0.0,
             Compare::Above);
  }
  return rows.take();
}

std::vector<CheckRow> run_suite(const std::string& name, const ExperimentConfig& cfg, const SuiteOptions& options) {
  if (name == "specfun") return specfun_checks(options);
  if (name == "bounds") {
    std::vector<SolitonParams> sets = reference_parameter_sets();
    if (std::none_of(sets.begin(), sets.end(), [&](const SolitonParams& p) { return same_params(p, cfg.soliton); })) {
      sets.push_back(cfg.soliton);
    }
    return bounds_checks(sets, cfg.tolerances.check_tol);
  }
  if (name == "geometry") return geometry_checks(Soliton(cfg.soliton), cfg.grids);
  if (name == "monotonicity") return monotonicity_checks(Soliton(cfg.soliton), cfg);
  throw ConfigError("unknown suite '" + name + "' (expected geometry, bounds, specfun or monotonicity)");
}

}  // namespace lab
