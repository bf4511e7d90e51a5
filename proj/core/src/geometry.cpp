#include "soliton/geometry.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "soliton/error.hpp"

namespace soliton {

Eigen::VectorXd apply_j0(const Eigen::VectorXd& v) {
  if (v.size() % 2 != 0) throw LengthMismatch("ambient vector must have even length");
  Eigen::VectorXd out(v.size());
  for (Eigen::Index k = 0; k < v.size(); k += 2) {
    out[k] = -v[k + 1];
    out[k + 1] = v[k];
  }
  return out;
}

Eigen::VectorXd GeometryFrame::normal_part(const Eigen::VectorXd& v) const {
  if (v.size() != tangent.rows()) throw LengthMismatch("vector length does not match ambient dimension");
  const Eigen::VectorXd inner = tangent.transpose() * v;
  return v - tangent * (metric_inv * inner);
}

double GeometryFrame::theta() const { return std::atan2(sin_theta, cos_theta); }

GeometryFrame frame_from_jets(const std::vector<Jet2>& coords) {
  if (coords.empty() || coords.size() % 2 != 0) throw LengthMismatch("immersion must return 2n coordinates");
  const int ambient = static_cast<int>(coords.size());
  const int n = ambient / 2;
  if (coords.front().dim() != n) throw LengthMismatch("jet dimension must equal n");

  GeometryFrame frame;
  frame.tangent.resize(ambient, n);
  for (int a = 0; a < ambient; ++a) {
    for (int i = 0; i < n; ++i) frame.tangent(a, i) = coords[static_cast<std::size_t>(a)].grad(i);
  }
  frame.metric = frame.tangent.transpose() * frame.tangent;

  const double scale = frame.metric.trace() / n;
  const double det = frame.metric.determinant();
  if (!(det > 1e-14 * std::pow(scale, n))) throw DegenerateMetric("induced metric is degenerate");
  frame.metric_inv = frame.metric.inverse();
  frame.area_density = std::sqrt(det);

  frame.mean_curvature = Eigen::VectorXd::Zero(ambient);
  Eigen::VectorXd second(ambient);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < ambient; ++a) second[a] = coords[static_cast<std::size_t>(a)].hess(i, j);
      frame.mean_curvature += frame.metric_inv(i, j) * second;
    }
  }
  frame.mean_curvature = frame.normal_part(frame.mean_curvature);

  Eigen::MatrixXcd m(n, n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) m(k, i) = {frame.tangent(2 * k, i), frame.tangent(2 * k + 1, i)};
  }
  const std::complex<double> d = Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
  const double mod = std::abs(d);
  frame.cos_theta = d.real() / mod;
  frame.sin_theta = d.imag() / mod;
  return frame;
}

GeometryFrame frame_at(const JetImmersion& immersion, const ChartPoint& p) {
  return frame_from_jets(immersion(p));
}

double lagrangian_defect(const GeometryFrame& frame) {
  const Eigen::Index n = frame.tangent.cols();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::VectorXd jf = apply_j0(frame.tangent.col(i));
    for (Eigen::Index j = i + 1; j < n; ++j) worst = std::max(worst, std::abs(jf.dot(frame.tangent.col(j))));
  }
  return worst;
}

double translator_residual(const GeometryFrame& frame, const Eigen::VectorXd& t_vec) {
  return (frame.normal_part(t_vec) - frame.mean_curvature).norm();
}

double h_equals_j_grad_theta_residual(const JetImmersion& immersion, const ChartPoint& p, double step) {
  if (!(step > 0.0)) throw DomainError("step must be positive");
  const GeometryFrame center = frame_at(immersion, p);
  const double theta0 = center.theta();
  const int n = p.dim();

  const auto offset = [&](const ChartPoint& q) {
    const double d = std::remainder(frame_at(immersion, q).theta() - theta0, 2.0 * std::numbers::pi);
    if (std::abs(d) > std::numbers::pi / 2) throw BranchJump("angle jumps across the difference stencil");
    return d;
  };

  Eigen::VectorXd dtheta(n);
  for (int i = 0; i < n; ++i) {
    dtheta[i] = (offset(p.shifted(i, step)) - offset(p.shifted(i, -step))) / (2.0 * step);
  }
  const Eigen::VectorXd grad_theta = center.tangent * (center.metric_inv * dtheta);
  return (center.mean_curvature - apply_j0(grad_theta)).norm();
}

}  // namespace soliton
