#pragma once

#include <vector>

#include <Eigen/Dense>

#include "soliton/chart.hpp"
#include "soliton/geometry.hpp"
#include "soliton/jet.hpp"
#include "soliton/specfun.hpp"

namespace soliton {

// Translating soliton in C^n with speed alpha along Re z_n and scale parameters a_1..a_{n-1}.
struct SolitonParams {
  int n = 2;
  double alpha = 1.0;
  std::vector<double> a{1.0};

  void validate() const;
  int nx() const { return n - 1; }
};

struct SolitonScalars {
  std::vector<double> phi_bar;
  double theta_inf = 0.0;    // sum of phi_bar
  double theta_sup = 0.0;    // pi - theta_inf
  double oscillation = 0.0;  // D = pi - 2 theta_inf
  double s0 = 0.0;           // e^{-1/2} / (n sqrt(prod(1 + a_j)))
};

struct ClosedFormMetric {
  Eigen::MatrixXd metric;
  double det_g = 0.0;
  double area_density = 0.0;
};

struct VBounds {
  double lower = 0.0;
  double upper = 0.0;
};

namespace jlt {

// Exponent s(t) = alpha t^2 + sum log(1 + a_k t^2), so that Q(t) = e^{s(t)}.
double exponent(const SolitonParams& params, double t);

// P(t) = (Q(t) - 1) / t^2, with P(0) = alpha + sum a_k.
double p_of_t(const SolitonParams& params, double t);

// 1 / sqrt(P(t)), evaluated without overflow for large |t|.
double inv_sqrt_p(const SolitonParams& params, double t);

// Second-order jet of 1 / sqrt(P(t)) in the variables carried by t.
Jet2 inv_sqrt_p_jet(const SolitonParams& params, const Jet2& t);

// Integrand 1 / ((1/a_j + t^2) sqrt(P(t))). Indices j are zero-based here and below.
double phi_integrand(const SolitonParams& params, int j, double t);

double phi_j(const SolitonParams& params, int j, double y, double tol = kDefaultTol);
double phi_bar(const SolitonParams& params, int j, double tol = kDefaultTol);

// arg(y + i P(y)^{-1/2}) in (0, pi).
double gamma_of_y(const SolitonParams& params, double y);

double theta_of_y(const SolitonParams& params, double y, double tol = kDefaultTol);

// d theta / dy = -alpha / sqrt(P(y)); equals -alpha / sqrt(alpha + sum a_k) at y = 0.
double theta_prime(const SolitonParams& params, double y);

// Derivative displays |y| / (c_j sqrt(Q - 1)) and the matching one for gamma, in regular form.
double dphi_dy(const SolitonParams& params, int j, double y);
double dgamma_dy(const SolitonParams& params, double y);

AmbientPoint immerse(const SolitonParams& params, const ChartPoint& p, double tol = kDefaultTol);

// Coordinate jets given phi_j(y) and theta(y) at p.y(); derivatives come from the analytic formulas.
std::vector<Jet2> immerse_jet(const SolitonParams& params, const ChartPoint& p, const std::vector<double>& phi,
                              double theta);
std::vector<Jet2> immerse_jet(const SolitonParams& params, const ChartPoint& p, double tol = kDefaultTol);

// (0, ..., 0, alpha, 0)
Eigen::VectorXd translator(const SolitonParams& params);

// Closed forms valid for y != 0 (BranchPoint otherwise): metric, det g and sqrt(det g).
ClosedFormMetric metric_closed_form(const SolitonParams& params, const ChartPoint& p);

// The (n-1) x (n-1) block g_{x_i x_j} and its closed-form determinant (S + 1) prod c_k.
Eigen::MatrixXd g1_closed_form(const SolitonParams& params, const ChartPoint& p);
double det_g1_closed_form(const SolitonParams& params, const ChartPoint& p);

// sqrt(det g) in a form that stays finite through y = 0.
double area_density(const SolitonParams& params, const ChartPoint& p);

// |H|^2 = alpha^2 / ((S + 1) prod(1 + a_k y^2) e^{alpha y^2}).
double mean_curvature_sq(const SolitonParams& params, const ChartPoint& p);

// |H|^2 times the area density; depends on y only.
double weighted_curvature(const SolitonParams& params, double y);

// |X|^2 = ((sum x^2 + y^2)/2)^2 + sum x_j^2 / a_j + theta^2 / alpha^2.
double ambient_norm_sq(const SolitonParams& params, const ChartPoint& p, double theta);

// v(y) = int_y^inf alpha / sqrt(P(t)) dt for y > 0, i.e. theta(y) - theta_inf.
double v_of_y(const SolitonParams& params, double y, double tol = kDefaultTol);

// Bounds on v for y >= 1 and alpha = 1.
VBounds v_bounds(const SolitonParams& params, double y);

// Upper bound with sqrt(prod(1 + a_j)) in place of sqrt(prod a_j); does not hold in general.
double v_upper_strong(const SolitonParams& params, double y);

SolitonScalars scalars(const SolitonParams& params, double tol = kDefaultTol);

}  // namespace jlt
}  // namespace soliton
