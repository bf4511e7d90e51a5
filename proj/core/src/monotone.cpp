#include "soliton/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <thread>

#include "soliton/error.hpp"
#include "soliton/specfun.hpp"

namespace soliton {

namespace {

double sup_on_range(const RealFunction& f, double lo, double hi) {
  double worst = 0.0;
  constexpr int kSamples = 65;
  for (int i = 0; i < kSamples; ++i) {
    const double x = lo + (hi - lo) * i / (kSamples - 1);
    worst = std::max(worst, std::abs(f(x)));
  }
  return worst;
}

double kernel_normalization(int n, double tau) { return std::pow(4.0 * std::numbers::pi * tau, -0.5 * n); }

}  // namespace

void KernelArgs::validate() const {
  if (!(t < t0)) throw TimeOrder("kernel needs t < t0");
}

double backward_kernel(const KernelArgs& k, const AmbientPoint& x) {
  k.validate();
  if (x.coords.size() != k.x0.coords.size()) throw LengthMismatch("kernel center and point differ in dimension");
  const double tau = k.tau();
  const double d2 = (x.coords - k.x0.coords).squaredNorm();
  return kernel_normalization(x.complex_dim(), tau) * std::exp(-d2 / (4.0 * tau));
}

double default_time_step(const KernelArgs& k) { return 1e-4 * k.tau(); }

double TranslatingSoliton::area_density(const ChartPoint& p) const {
  return jlt::area_density(soliton_.params(), p);
}

double TranslatingSoliton::mean_curvature_sq(const ChartPoint& p) const {
  return jlt::mean_curvature_sq(soliton_.params(), p);
}

std::pair<double, double> TranslatingSoliton::angle_range() const {
  return {soliton_.scalars().theta_inf, soliton_.scalars().theta_sup};
}

TruncationPolicy TranslatingSoliton::policy(const KernelArgs& k, double weight_sup) const {
  // Outside the box sum x^2 + y^2 >= R^2, so |X| >= R^2 / 2 and the kernel is at most
  // its value at distance g = R^2/2 - |x0| - |t| |T|. The polynomial factor covers the
  // growth of the area density.
  const double tau = k.tau();
  const double drift = k.x0.coords.norm() + std::abs(k.t) * soliton_.params().alpha;
  const double radius = std::max(10.0, std::sqrt(2.0 * (drift + 40.0 * std::sqrt(tau))));
  const double gap = 0.5 * radius * radius - drift;
  const int n = soliton_.n();
  const double poly = std::pow(1.0 + radius, 4.0 * n);
  TruncationPolicy policy;
  policy.x_radius = radius;
  policy.y_radius = radius;
  policy.tail_bound = weight_sup * kernel_normalization(n, tau) * std::exp(-gap * gap / (4.0 * tau)) * poly;
  return policy;
}

LagrangianPlane::LagrangianPlane(int n, double angle, Eigen::VectorXd offset)
    : n_(n), angle_(angle), offset_(std::move(offset)) {
  if (n < 2 || n - 1 > kMaxChartX) throw DimensionUnsupported("plane dimension must be 2..4");
  if (offset_.size() == 0) offset_ = Eigen::VectorXd::Zero(2 * n);
  if (offset_.size() != 2 * n) throw LengthMismatch("plane offset must have length 2n");
}

AmbientPoint LagrangianPlane::position(const ChartPoint& p) const {
  const double beta = angle_ / n_;
  AmbientPoint out{offset_};
  for (int k = 0; k < n_; ++k) {
    out.coords[2 * k] += p.coord(k) * std::cos(beta);
    out.coords[2 * k + 1] += p.coord(k) * std::sin(beta);
  }
  return out;
}

JetImmersion LagrangianPlane::jet_immersion() const {
  return [this](const ChartPoint& p) {
    const double beta = angle_ / n_;
    std::vector<Jet2> out;
    out.reserve(static_cast<std::size_t>(2 * n_));
    for (int k = 0; k < n_; ++k) {
      const Jet2 u = Jet2::variable(n_, k, p.coord(k));
      out.push_back(u * std::cos(beta) + offset_[2 * k]);
      out.push_back(u * std::sin(beta) + offset_[2 * k + 1]);
    }
    return out;
  };
}

GeometryFrame LagrangianPlane::frame(const ChartPoint& p) const { return frame_at(jet_immersion(), p); }

TruncationPolicy LagrangianPlane::policy(const KernelArgs& k, double weight_sup) const {
  const double beta = angle_ / n_;
  const Eigen::VectorXd d = k.x0.coords - offset_;
  double reach = 0.0;
  for (int j = 0; j < n_; ++j) {
    reach = std::max(reach, std::abs(std::cos(beta) * d[2 * j] + std::sin(beta) * d[2 * j + 1]));
  }
  const double margin = 14.0 * std::sqrt(k.tau());
  TruncationPolicy policy;
  policy.x_radius = reach + margin;
  policy.y_radius = reach + margin;
  policy.tail_bound = weight_sup * n_ * std::erfc(margin / (2.0 * std::sqrt(k.tau())));
  return policy;
}

QuadResult phi_f(const FlowSurface& surface, const RealFunction& f, const KernelArgs& k, double tol) {
  k.validate();
  const auto [lo, hi] = surface.angle_range();
  const TruncationPolicy policy = surface.policy(k, sup_on_range(f, lo, hi));
  const Eigen::VectorXd shift = k.t * surface.velocity();
  const ChartIntegrand g = [&](const ChartPoint& p) {
    AmbientPoint x = surface.position(p);
    x.coords += shift;
    return f(surface.theta(p)) * backward_kernel(k, x) * surface.area_density(p);
  };
  return integrate_chart(g, surface.n(), policy, tol);
}

QuadResult phi_f(const Soliton& soliton, const RealFunction& f, const KernelArgs& k, double tol) {
  return phi_f(TranslatingSoliton(soliton), f, k, tol);
}

MonotonicityCheck monotonicity_residual(const FlowSurface& surface, const RealFunction& f,
                                        const RealFunction& f_second, const KernelArgs& k, double dt, double tol) {
  k.validate();
  if (!(dt > 0.0)) throw DomainError("time step must be positive");
  KernelArgs later = k;
  later.t = k.t + dt;
  KernelArgs earlier = k;
  earlier.t = k.t - dt;
  later.validate();

  const QuadResult plus = phi_f(surface, f, later, tol);
  const QuadResult minus = phi_f(surface, f, earlier, tol);

  const double tau = k.tau();
  const auto [lo, hi] = surface.angle_range();
  const double weight_sup =
      sup_on_range(f, lo, hi) * (1.0 + 1.0 / tau) + sup_on_range(f_second, lo, hi);
  TruncationPolicy policy = surface.policy(k, weight_sup);
  const Eigen::VectorXd shift = k.t * surface.velocity();
  const ChartIntegrand g = [&](const ChartPoint& p) {
    const GeometryFrame frame = surface.frame(p);
    AmbientPoint x = surface.position(p);
    x.coords += shift;
    const double rho = backward_kernel(k, x);
    const double theta = surface.theta(p);
    const Eigen::VectorXd v = frame.mean_curvature + frame.normal_part(x.coords - k.x0.coords) / (2.0 * tau);
    return (f(theta) * v.squaredNorm() + f_second(theta) * surface.mean_curvature_sq(p)) * rho *
           surface.area_density(p);
  };
  const QuadResult rhs = integrate_chart(g, surface.n(), policy, tol);

  MonotonicityCheck out;
  out.lhs = (plus.value - minus.value) / (2.0 * dt);
  out.rhs = -rhs.value;
  out.residual = std::abs(out.lhs - out.rhs);
  out.error_budget = (plus.error_estimate + minus.error_estimate) / (2.0 * dt) + rhs.error_estimate;
  if (!plus.converged || !minus.converged || !rhs.converged) {
    throw QuadratureNoConvergence("monotonicity integrals did not converge");
  }
  return out;
}

FDeltaParams::FDeltaParams(double delta, double cap_a, double oscillation)
    : delta_(delta), cap_a_(cap_a), oscillation_(oscillation) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  if (!(oscillation > 0.0) || !std::isfinite(oscillation)) throw DomainError("oscillation must be positive");
  if (!std::isfinite(cap_a) || !(cap_a - std::log(oscillation + delta) > 0.0)) {
    throw DomainError("A - log(v + delta) must stay positive on [0, D]");
  }
}

FDeltaParams FDeltaParams::for_oscillation(double delta, double oscillation) {
  return FDeltaParams(delta, std::log(oscillation + 1.0) + 2.0, oscillation);
}

namespace {

double inner_gap(double v, const FDeltaParams& p) {
  const double shifted = v + p.delta();
  if (!(shifted > 0.0)) throw DomainError("f_delta needs v + delta > 0");
  const double gap = p.cap_a() - std::log(shifted);
  if (!(gap > 0.0)) throw DomainError("f_delta needs v + delta < e^A");
  return gap;
}

}  // namespace

double f_delta(double v, const FDeltaParams& p) { return std::log(inner_gap(v, p)); }

double f_delta_second(double v, const FDeltaParams& p) {
  const double gap = inner_gap(v, p);
  const double s2 = (v + p.delta()) * (v + p.delta());
  return 1.0 / (gap * s2) - 1.0 / (gap * gap * s2);
}

AngleWeight AngleWeight::from_f_delta(const FDeltaParams& p) {
  return AngleWeight{[p](double v) { return f_delta(v, p); }, [p](double v) { return f_delta_second(v, p); }};
}

AngleWeight AngleWeight::constant(double c) {
  return AngleWeight{[c](double) { return c; }, [](double) { return 0.0; }};
}

double epsilon_certificate(const AngleWeight& w, double lo, double hi, int grid) {
  if (grid < 2) throw DomainError("grid needs at least two points");
  double lowest = INFINITY;
  for (int i = 0; i < grid; ++i) {
    const double v = lo + (hi - lo) * i / (grid - 1);
    lowest = std::min(lowest, w.f_second(v) / w.f(v));
  }
  return lowest > 0.0 ? std::sqrt(lowest) : 0.0;
}

double epsilon_for_f(const FDeltaParams& p, int grid) {
  if (grid < 10) throw DomainError("epsilon grid needs at least 10 points");
  const double eps = epsilon_certificate(AngleWeight::from_f_delta(p), 0.0, p.oscillation(), grid);
  if (!(eps > 0.0)) throw NonPositive("min f''/f over [0, D] is not positive");
  return eps;
}

QuadResult necessary_lhs(const Soliton& soliton, const NecessaryConditionSpec& spec, const AngleWeight& weight,
                         double tol) {
  const SolitonParams& params = soliton.params();
  const int n = params.n;
  const BesselOrder order(0.5 * n - 1.0);
  const Eigen::VectorXd t_vec = spec.t_vec.size() ? spec.t_vec : soliton.translator();
  const Eigen::VectorXd offset = spec.offset_a.size() ? spec.offset_a : Eigen::VectorXd::Zero(2 * n);
  if (t_vec.size() != 2 * n || offset.size() != 2 * n) throw LengthMismatch("T and a must have length 2n");
  double eps2 = 0.0;
  if (spec.use_epsilon_term) {
    if (!spec.epsilon) throw DomainError("epsilon term requested without an epsilon");
    eps2 = *spec.epsilon * *spec.epsilon;
  }
  const double t_norm = t_vec.norm();
  const double bessel_tol = std::min(1e-12, 1e-2 * tol);
  const double v_tol = 1e-12;

  const auto slice_weight = [&](double y) {
    const double v = soliton.v(y, v_tol);
    return (weight.f_second(v) - eps2 * weight.f(v)) * jlt::weighted_curvature(params, y);
  };

  const SliceFactory factory = [&](double y) -> SliceIntegrand {
    const double w = slice_weight(y);
    if (w == 0.0) return [](std::span<const double>) { return 0.0; };
    std::vector<double> cos_phi;
    std::vector<double> sin_phi;
    std::vector<double> radius;
    for (int j = 0; j < params.nx(); ++j) {
      const double ph = soliton.phi(j, y);
      cos_phi.push_back(std::cos(ph));
      sin_phi.push_back(std::sin(ph));
      radius.push_back(std::sqrt(1.0 / params.a[static_cast<std::size_t>(j)] + y * y));
    }
    const double im_last = -soliton.theta(y) / params.alpha;
    return [=, &order, &t_vec, &offset](std::span<const double> x) {
      Eigen::VectorXd d(2 * n);
      double sum_x2 = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        const double r = x[j] * radius[j];
        d[2 * j] = r * cos_phi[j];
        d[2 * j + 1] = r * sin_phi[j];
        sum_x2 += x[j] * x[j];
      }
      d[2 * n - 2] = 0.5 * (y * y - sum_x2);
      d[2 * n - 1] = im_last;
      d -= offset;
      const double r = d.norm();
      if (r == 0.0) throw BesselDomain("|X - a| vanished on the chart");
      const double z = 0.5 * t_norm * r;
      return w * std::pow(r, 1.0 - 0.5 * n) * std::exp(0.5 * d.dot(t_vec) - z) *
             bessel_k_scaled(order, z, bessel_tol);
    };
  };

  // Tail: at |x_j| >= R the factor e^{<X,T>/2 - |T||X|/2} is below e^{-alpha R^2 / 2}; at |y| >= R the
  // slice weight is evaluated at R. |X| >= theta_inf bounds the Bessel factor from above.
  TruncationPolicy policy;
  const double radius = policy.y_radius;
  const double theta_inf = soliton.scalars().theta_inf;
  const double z_min = 0.5 * t_norm * std::max(1e-300, theta_inf - offset.norm());
  const double bessel_cap = std::pow(2.0 * z_min / t_norm, 1.0 - 0.5 * n) * bessel_k_scaled(order, z_min, 1e-6);
  double slice_sup = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double y = -radius + 2.0 * radius * i / 40.0;
    slice_sup = std::max(slice_sup, std::abs(slice_weight(y)));
  }
  const double box = std::pow(2.0 * radius, n);
  const double x_tail = slice_sup * bessel_cap * box * std::exp(-0.5 * params.alpha * radius * radius);
  const double y_tail = (std::abs(slice_weight(radius)) + std::abs(slice_weight(-radius))) * bessel_cap * box;
  policy.tail_bound = x_tail + y_tail;

  return integrate_chart_sliced(factory, n, policy, tol);
}

QuadResult necessary_lhs(const Soliton& soliton, const NecessaryConditionSpec& spec, const FDeltaParams& p,
                         double tol) {
  NecessaryConditionSpec resolved = spec;
  if (resolved.use_epsilon_term && !resolved.epsilon) resolved.epsilon = epsilon_for_f(p, 1000);
  return necessary_lhs(soliton, resolved, AngleWeight::from_f_delta(p), tol);
}

std::string verdict_name(SweepVerdict v) {
  switch (v) {
    case SweepVerdict::Divergent:
      return "DIVERGENT";
    case SweepVerdict::Null:
      return "NULL";
    case SweepVerdict::Inconclusive:
      return "INCONCLUSIVE";
    case SweepVerdict::None:
      break;
  }
  return "";
}

SweepTable delta_sweep(const Soliton& soliton, const NecessaryConditionSpec& spec, const std::vector<double>& deltas,
                       double tol, const SweepOptions& options) {
  if (deltas.empty()) throw DomainError("sweep needs at least one delta");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0 && deltas[i] < 1.0)) throw DomainError("sweep deltas must lie in (0, 1)");
    if (i > 0 && !(deltas[i] < deltas[i - 1])) throw DomainError("sweep deltas must be strictly decreasing");
  }
  const double oscillation = soliton.scalars().oscillation;

  const auto run_row = [&](double delta) {
    const FDeltaParams p = FDeltaParams::for_oscillation(delta, oscillation);
    SweepRow row;
    row.delta = delta;
    row.epsilon = epsilon_for_f(p, 1000);
    NecessaryConditionSpec resolved = spec;
    if (resolved.use_epsilon_term && !resolved.epsilon) resolved.epsilon = row.epsilon;
    const AngleWeight weight = options.null_family ? AngleWeight::constant(1.0) : AngleWeight::from_f_delta(p);
    const QuadResult r = necessary_lhs(soliton, resolved, weight, tol);
    row.lhs = r.value;
    row.lhs_error = r.error_estimate;
    row.converged = r.converged;
    row.log_log_weight = std::log(p.cap_a() - std::log(delta));
    row.ratio = row.lhs / row.log_log_weight;
    return row;
  };

  SweepTable table;
  if (std::thread::hardware_concurrency() > 1 && deltas.size() > 1) {
    std::vector<std::future<SweepRow>> jobs;
    for (double delta : deltas) jobs.push_back(std::async(std::launch::async, run_row, delta));
    for (auto& job : jobs) table.rows.push_back(job.get());
  } else {
    for (double delta : deltas) table.rows.push_back(run_row(delta));
  }

  const auto& rows = table.rows;
  table.increasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i) table.increasing = table.increasing && rows[i].lhs > rows[i - 1].lhs;
  if (rows.size() >= 3) {
    for (std::size_t i = rows.size() - 3; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        const double big = std::max(std::abs(rows[i].ratio), std::abs(rows[j].ratio));
        const double spread = big > 0.0 ? std::abs(rows[i].ratio - rows[j].ratio) / big : 0.0;
        table.ratio_spread = std::max(table.ratio_spread, spread);
      }
    }
  }

  const bool all_converged = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.converged; });
  if (rows.size() < 2) {
    table.verdict = SweepVerdict::None;
  } else if (options.null_family) {
    const bool all_zero = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.lhs == 0.0; });
    table.verdict = all_zero ? SweepVerdict::Null : SweepVerdict::Inconclusive;
  } else {
    const bool positive_tail = rows.size() >= 3 && std::all_of(rows.end() - 3, rows.end(),
                                                                [](const SweepRow& r) { return r.ratio > 0.0; });
    const bool stable = rows.size() >= 3 && table.ratio_spread <= options.ratio_window;
    table.verdict = (all_converged && table.increasing && positive_tail && stable) ? SweepVerdict::Divergent
                                                                                   : SweepVerdict::Inconclusive;
  }
  return table;
}

HeatKernelCheck heat_kernel_bessel_identity(double q, double m, int n, double tol) {
  if (!(q > 0.0) || !(m > 0.0)) throw NonPositiveArgument("q and m must be positive");
  if (n < 2) throw DomainError("n must be at least 2");
  const auto g = [&](double tau) {
    if (tau <= 0.0) return 0.0;
    return std::exp(-0.5 * n * std::log(tau) - q * q / (4.0 * tau) - m * m * tau / 4.0);
  };
  const double peak = (std::sqrt(static_cast<double>(n) * n + m * m * q * q) - n) / (m * m);
  const QuadResult head = integrate_1d(g, 0.0, peak, 0.25 * tol);
  QuadOptions options;
  options.ray_scale = peak;
  const QuadResult tail = integrate_ray(g, peak, 0.25 * tol, options);
  if (!head.converged || !tail.converged) throw QuadratureNoConvergence("heat kernel integral did not converge");

  HeatKernelCheck out;
  out.lhs = head.value + tail.value;
  const double nu = 0.5 * n - 1.0;
  out.rhs = 2.0 * std::pow(m / q, nu) * bessel_k(BesselOrder(nu), 0.5 * m * q, 0.25 * tol);
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace soliton
