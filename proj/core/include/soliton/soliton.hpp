#pragma once

#include <vector>

#include "soliton/chebyshev.hpp"
#include "soliton/geometry.hpp"
#include "soliton/jlt.hpp"

namespace soliton {

struct SolitonOptions {
  // Interpolants cover |y| <= interp_radius; beyond it phi_j is evaluated by quadrature.
  double interp_radius = 12.0;
  double build_tol = 1e-14;
  double scalar_tol = 1e-13;
};

// One soliton with cached phase interpolants. Immutable after construction.
class Soliton {
 public:
  explicit Soliton(SolitonParams params, SolitonOptions options = {});

  const SolitonParams& params() const { return params_; }
  const SolitonScalars& scalars() const { return scalars_; }
  int n() const { return params_.n; }

  double phi(int j, double y) const;
  double theta(double y) const;
  // theta(y) - theta_inf, with relative accuracy for large y.
  double v(double y, double tol = kDefaultTol) const;

  AmbientPoint immerse(const ChartPoint& p) const;
  std::vector<Jet2> immerse_jet(const ChartPoint& p) const;
  GeometryFrame frame(const ChartPoint& p) const;
  JetImmersion jet_immersion() const;
  Eigen::VectorXd translator() const { return jlt::translator(params_); }

  const ChebyshevSeries& phi_series(int j) const { return series_[static_cast<std::size_t>(j)]; }

 private:
  SolitonParams params_;
  SolitonOptions options_;
  SolitonScalars scalars_;
  std::vector<ChebyshevSeries> series_;
};

}  // namespace soliton
