#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "soliton/chart.hpp"
#include "soliton/jet.hpp"

namespace soliton {

// Point of R^{2n} = C^n with coordinates ordered (Re z_1, Im z_1, ..., Re z_n, Im z_n).
struct AmbientPoint {
  Eigen::VectorXd coords;

  int complex_dim() const { return static_cast<int>(coords.size() / 2); }
};

struct GeometryFrame {
  Eigen::MatrixXd tangent;  // 2n x n, column i is dF/du_i
  Eigen::MatrixXd metric;
  Eigen::MatrixXd metric_inv;
  double area_density = 0.0;
  Eigen::VectorXd mean_curvature;
  double cos_theta = 1.0;
  double sin_theta = 0.0;

  // v - g^{ij} <v, F_i> F_j
  Eigen::VectorXd normal_part(const Eigen::VectorXd& v) const;
  double theta() const;
};

// Maps a chart point to the 2n ambient coordinate jets.
using JetImmersion = std::function<std::vector<Jet2>(const ChartPoint&)>;

// (a, b) -> (-b, a) on every (Re, Im) pair.
Eigen::VectorXd apply_j0(const Eigen::VectorXd& v);

GeometryFrame frame_from_jets(const std::vector<Jet2>& coords);
GeometryFrame frame_at(const JetImmersion& immersion, const ChartPoint& p);

// max_{i<j} |<J0 F_i, F_j>|
double lagrangian_defect(const GeometryFrame& frame);

// |t_vec^perp - H|
double translator_residual(const GeometryFrame& frame, const Eigen::VectorXd& t_vec);

// |H - J0 grad theta| with grad theta from central differences of the unwrapped angle.
double h_equals_j_grad_theta_residual(const JetImmersion& immersion, const ChartPoint& p, double step);

}  // namespace soliton
