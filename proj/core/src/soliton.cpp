#include "soliton/soliton.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "soliton/error.hpp"
#include "soliton/quadrature.hpp"

namespace soliton {

namespace {

// Fits phi_j on [0, radius], doubling the node count until the trailing coefficients vanish.
ChebyshevSeries fit_phase(const SolitonParams& params, int j, double radius, double tol) {
  const auto integrand = [&](double t) { return jlt::phi_integrand(params, j, t); };
  ChebyshevSeries best;
  for (int count = 65; count <= 1025; count = 2 * count - 1) {
    std::vector<double> nodes = ChebyshevSeries::lobatto_nodes(0.0, radius, count);
    // nodes run from radius down to 0; accumulate from 0 upwards
    std::vector<double> values(nodes.size(), 0.0);
    double acc = 0.0;
    for (std::size_t k = nodes.size() - 1; k-- > 0;) {
      const QuadResult r = integrate_1d(integrand, nodes[k + 1], nodes[k], tol);
      if (!r.converged) throw QuadratureNoConvergence("phase interpolant construction did not converge");
      acc += r.value;
      values[k] = acc;
    }
    best = ChebyshevSeries::from_lobatto_values(0.0, radius, values);
    if (best.tail_magnitude(8) < 1e-14) return best;
  }
  return best;
}

}  // namespace

Soliton::Soliton(SolitonParams params, SolitonOptions options)
    : params_(std::move(params)), options_(options) {
  params_.validate();
  scalars_ = jlt::scalars(params_, options_.scalar_tol);
  for (int j = 0; j < params_.nx(); ++j) {
    series_.push_back(fit_phase(params_, j, options_.interp_radius, options_.build_tol));
  }
}

double Soliton::phi(int j, double y) const {
  if (j < 0 || j >= params_.nx()) throw DomainError("phi index out of range");
  if (y == 0.0) return 0.0;
  const double ay = std::abs(y);
  double value = 0.0;
  if (ay <= options_.interp_radius) {
    value = series_[static_cast<std::size_t>(j)](ay);
  } else {
    const QuadResult tail =
        integrate_ray([&](double t) { return jlt::phi_integrand(params_, j, t); }, ay, options_.build_tol);
    value = scalars_.phi_bar[static_cast<std::size_t>(j)] - tail.value;
  }
  return std::copysign(value, y);
}

double Soliton::theta(double y) const {
  double sum = jlt::gamma_of_y(params_, y);
  for (int j = 0; j < params_.nx(); ++j) sum += phi(j, y);
  return sum;
}

double Soliton::v(double y, double tol) const {
  if (y > 0.0) return jlt::v_of_y(params_, y, tol);
  if (y == 0.0) return 0.5 * scalars_.oscillation;
  return scalars_.oscillation - jlt::v_of_y(params_, -y, tol);
}

AmbientPoint Soliton::immerse(const ChartPoint& p) const {
  if (p.nx() != params_.nx()) throw LengthMismatch("chart point must have n - 1 x-coordinates");
  const double y = p.y();
  AmbientPoint out{Eigen::VectorXd::Zero(2 * params_.n)};
  double sum_x2 = 0.0;
  double theta = jlt::gamma_of_y(params_, y);
  for (int j = 0; j < params_.nx(); ++j) {
    const double ph = phi(j, y);
    theta += ph;
    const double r = p.x(j) * std::sqrt(1.0 / params_.a[static_cast<std::size_t>(j)] + y * y);
    out.coords[2 * j] = r * std::cos(ph);
    out.coords[2 * j + 1] = r * std::sin(ph);
    sum_x2 += p.x(j) * p.x(j);
  }
  out.coords[2 * params_.n - 2] = 0.5 * (y * y - sum_x2);
  out.coords[2 * params_.n - 1] = -theta / params_.alpha;
  return out;
}

std::vector<Jet2> Soliton::immerse_jet(const ChartPoint& p) const {
  std::vector<double> phases(static_cast<std::size_t>(params_.nx()));
  double theta = jlt::gamma_of_y(params_, p.y());
  for (int j = 0; j < params_.nx(); ++j) {
    phases[static_cast<std::size_t>(j)] = phi(j, p.y());
    theta += phases[static_cast<std::size_t>(j)];
  }
  return jlt::immerse_jet(params_, p, phases, theta);
}

GeometryFrame Soliton::frame(const ChartPoint& p) const { return frame_from_jets(immerse_jet(p)); }

JetImmersion Soliton::jet_immersion() const {
  return [this](const ChartPoint& p) { return immerse_jet(p); };
}

}  // namespace soliton
