#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "soliton/chart.hpp"

namespace soliton {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t subdivisions = 0;
  bool converged = false;
};

struct QuadOptions {
  // Panel cap for one adaptive 1-D integration.
  std::size_t max_subdivisions = 1'000'000;
  // Length scale of the map t = a + scale * u / (1 - u) used by integrate_ray.
  double ray_scale = 1.0;
};

// Chart truncation: y in [-y_radius, -y_inner_cut] U [y_inner_cut, y_radius], x in [-x_radius, x_radius]^(n-1).
// tail_bound is the caller's bound on the discarded mass and is added to the error estimate.
struct TruncationPolicy {
  double x_radius = 10.0;
  double y_radius = 10.0;
  double y_inner_cut = 0.0;
  double tail_bound = 0.0;

  void validate() const;
};

using Integrand = std::function<double(double)>;
using ChartIntegrand = std::function<double(const ChartPoint&)>;
using SliceIntegrand = std::function<double(std::span<const double> x)>;
// Called once per y node; the returned integrand is then evaluated over x.
using SliceFactory = std::function<SliceIntegrand(double y)>;

// Adaptive Gauss-Kronrod (7/15) with a global worst-panel-first strategy.
// Error per panel is |K15 - G7|, floored at the rounding level of the panel.
QuadResult integrate_1d(const Integrand& f, double a, double b, double tol,
                        const QuadOptions& options = {});

// Integral over [a, inf) via t = a + s * u / (1 - u).
QuadResult integrate_ray(const Integrand& f, double a, double tol, const QuadOptions& options = {});

// Iterated integral over the truncated soliton chart of dimension n (n - 1 x-variables plus y).
QuadResult integrate_chart(const ChartIntegrand& g, int n, const TruncationPolicy& policy, double tol,
                           const QuadOptions& options = {});

QuadResult integrate_chart_sliced(const SliceFactory& factory, int n, const TruncationPolicy& policy,
                                  double tol, const QuadOptions& options = {});

}  // namespace soliton
