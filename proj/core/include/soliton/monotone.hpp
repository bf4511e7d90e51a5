#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "soliton/geometry.hpp"
#include "soliton/quadrature.hpp"
#include "soliton/soliton.hpp"

namespace soliton {

struct KernelArgs {
  AmbientPoint x0;
  double t0 = 0.0;
  double t = -1.0;

  double tau() const { return t0 - t; }
  void validate() const;
};

// (4 pi tau)^{-n/2} exp(-|x - x0|^2 / (4 tau)) with n the complex dimension.
double backward_kernel(const KernelArgs& k, const AmbientPoint& x);

// A surface moving by x(p, t) = position(p) + t * velocity().
class FlowSurface {
 public:
  virtual ~FlowSurface() = default;

  virtual int n() const = 0;
  virtual AmbientPoint position(const ChartPoint& p) const = 0;
  virtual double area_density(const ChartPoint& p) const = 0;
  virtual double theta(const ChartPoint& p) const = 0;
  virtual double mean_curvature_sq(const ChartPoint& p) const = 0;
  virtual GeometryFrame frame(const ChartPoint& p) const = 0;
  virtual Eigen::VectorXd velocity() const = 0;
  // Range of the Lagrangian angle over the surface.
  virtual std::pair<double, double> angle_range() const = 0;
  // Chart truncation for kernel integrals; tail_bound covers the kernel mass outside the box
  // multiplied by sup |weight| = weight_sup.
  virtual TruncationPolicy policy(const KernelArgs& k, double weight_sup) const = 0;
};

// The soliton translating with velocity T = (0, ..., alpha, 0).
class TranslatingSoliton final : public FlowSurface {
 public:
  explicit TranslatingSoliton(const Soliton& soliton) : soliton_(soliton) {}

  int n() const override { return soliton_.n(); }
  AmbientPoint position(const ChartPoint& p) const override { return soliton_.immerse(p); }
  double area_density(const ChartPoint& p) const override;
  double theta(const ChartPoint& p) const override { return soliton_.theta(p.y()); }
  double mean_curvature_sq(const ChartPoint& p) const override;
  GeometryFrame frame(const ChartPoint& p) const override { return soliton_.frame(p); }
  Eigen::VectorXd velocity() const override { return soliton_.translator(); }
  std::pair<double, double> angle_range() const override;
  TruncationPolicy policy(const KernelArgs& k, double weight_sup) const override;

 private:
  const Soliton& soliton_;
};

// Static special Lagrangian plane e^{i angle / n} R^n, shifted by `offset`.
class LagrangianPlane final : public FlowSurface {
 public:
  LagrangianPlane(int n, double angle = 0.0, Eigen::VectorXd offset = {});

  int n() const override { return n_; }
  AmbientPoint position(const ChartPoint& p) const override;
  double area_density(const ChartPoint&) const override { return 1.0; }
  double theta(const ChartPoint&) const override { return angle_; }
  double mean_curvature_sq(const ChartPoint&) const override { return 0.0; }
  GeometryFrame frame(const ChartPoint& p) const override;
  Eigen::VectorXd velocity() const override { return Eigen::VectorXd::Zero(2 * n_); }
  std::pair<double, double> angle_range() const override { return {angle_, angle_}; }
  TruncationPolicy policy(const KernelArgs& k, double weight_sup) const override;

  JetImmersion jet_immersion() const;

 private:
  int n_;
  double angle_;
  Eigen::VectorXd offset_;
};

using RealFunction = std::function<double(double)>;

// Phi_f(t) = int f(theta) rho(x(p, t); x0, t0, t) dmu.
QuadResult phi_f(const FlowSurface& surface, const RealFunction& f, const KernelArgs& k, double tol = kDefaultTol);
QuadResult phi_f(const Soliton& soliton, const RealFunction& f, const KernelArgs& k, double tol = kDefaultTol);

struct MonotonicityCheck {
  double residual = 0.0;  // |d/dt Phi_f - rhs|
  double lhs = 0.0;       // central difference of Phi_f
  double rhs = 0.0;       // -int f rho |H + (X - x0)^perp / (2 tau)|^2 - int f'' |H|^2 rho
  double error_budget = 0.0;
};

MonotonicityCheck monotonicity_residual(const FlowSurface& surface, const RealFunction& f,
                                        const RealFunction& f_second, const KernelArgs& k, double dt,
                                        double tol = kDefaultTol);

// Default time step 1e-4 (t0 - t).
double default_time_step(const KernelArgs& k);

class FDeltaParams {
 public:
  FDeltaParams(double delta, double cap_a, double oscillation);
  // A = log(D + 1) + 2
  static FDeltaParams for_oscillation(double delta, double oscillation);

  double delta() const { return delta_; }
  double cap_a() const { return cap_a_; }
  double oscillation() const { return oscillation_; }

 private:
  double delta_;
  double cap_a_;
  double oscillation_;
};

// f(v) = log(A - log(v + delta))
double f_delta(double v, const FDeltaParams& p);
double f_delta_second(double v, const FDeltaParams& p);

// A weight written in terms of v = theta - theta_inf, with its second derivative.
struct AngleWeight {
  RealFunction f;
  RealFunction f_second;

  static AngleWeight from_f_delta(const FDeltaParams& p);
  static AngleWeight constant(double c);
};

// sqrt(min over an equispaced grid on [lo, hi] of f''/f), clamped at 0.
double epsilon_certificate(const AngleWeight& w, double lo, double hi, int grid);
// The same for f_delta on [0, D]; throws NonPositive when the minimum is not positive.
double epsilon_for_f(const FDeltaParams& p, int grid);

struct NecessaryConditionSpec {
  Eigen::VectorXd offset_a;  // empty means 0
  Eigen::VectorXd t_vec;     // empty means the soliton's translator
  bool use_epsilon_term = false;
  std::optional<double> epsilon;  // defaults to epsilon_for_f when the term is used
};

// int (f'' - eps^2 f) |H|^2 |X - a|^{1 - n/2} e^{<X - a, T>/2} K_{n/2-1}(|T| |X - a| / 2) dmu
QuadResult necessary_lhs(const Soliton& soliton, const NecessaryConditionSpec& spec, const AngleWeight& weight,
                         double tol = kDefaultTol);
QuadResult necessary_lhs(const Soliton& soliton, const NecessaryConditionSpec& spec, const FDeltaParams& p,
                         double tol = kDefaultTol);

struct SweepRow {
  double delta = 0.0;
  double lhs = 0.0;
  double lhs_error = 0.0;
  double log_log_weight = 0.0;  // log(A - log delta)
  double ratio = 0.0;
  double epsilon = 0.0;
  bool converged = false;
};

enum class SweepVerdict { None, Divergent, Null, Inconclusive };

struct SweepTable {
  std::vector<SweepRow> rows;
  SweepVerdict verdict = SweepVerdict::None;
  bool increasing = false;
  double ratio_spread = 0.0;  // max pairwise relative spread among the last three ratios
};

struct SweepOptions {
  bool null_family = false;  // use f = 1 instead of f_delta
  double ratio_window = 0.15;
};

SweepTable delta_sweep(const Soliton& soliton, const NecessaryConditionSpec& spec, const std::vector<double>& deltas,
                       double tol = kDefaultTol, const SweepOptions& options = {});

std::string verdict_name(SweepVerdict v);

struct HeatKernelCheck {
  double lhs = 0.0;  // direct quadrature over tau
  double rhs = 0.0;  // 2 (m/q)^{n/2-1} K_{n/2-1}(m q / 2)
  double residual = 0.0;
};

HeatKernelCheck heat_kernel_bessel_identity(double q, double m, int n, double tol = kDefaultTol);

}  // namespace soliton
