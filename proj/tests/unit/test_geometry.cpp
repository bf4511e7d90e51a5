#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "soliton/error.hpp"
#include "soliton/geometry.hpp"
#include "soliton/jlt.hpp"
#include "soliton/monotone.hpp"
#include "soliton/soliton.hpp"

using namespace soliton;

namespace {

const Soliton& standard() {
  static const Soliton s{SolitonParams{}};
  return s;
}

// (u1, u2) -> (u1, u2, 0, 0): a complex line, not Lagrangian.
std::vector<Jet2> complex_line(const ChartPoint& p) {
  return {Jet2::variable(2, 0, p.coord(0)), Jet2::variable(2, 1, p.coord(1)), Jet2::constant(2, 0.0),
          Jet2::constant(2, 0.0)};
}

// A curved surface that is not Lagrangian.
std::vector<Jet2> curved(const ChartPoint& p) {
  const Jet2 u = Jet2::variable(2, 0, p.coord(0));
  const Jet2 v = Jet2::variable(2, 1, p.coord(1));
  return {u, 0.5 * u * u, v, sin(v) * exp(u)};
}

}  // namespace

TEST(Jet2, ProductAndChainRules) {
  const Jet2 x = Jet2::variable(2, 0, 0.7);
  const Jet2 y = Jet2::variable(2, 1, -1.3);
  const Jet2 f = sin(x * y) + exp(x) / (1.0 + y * y) + sqrt(x + 2.0) * log(x + 3.0);
  // analytic derivatives
  const double xv = 0.7;
  const double yv = -1.3;
  const double d = 1.0 + yv * yv;
  const double fx = yv * std::cos(xv * yv) + std::exp(xv) / d + 0.5 / std::sqrt(xv + 2.0) * std::log(xv + 3.0) +
                    std::sqrt(xv + 2.0) / (xv + 3.0);
  const double fy = xv * std::cos(xv * yv) - std::exp(xv) * 2.0 * yv / (d * d);
  const double fxy = std::cos(xv * yv) - xv * yv * std::sin(xv * yv) - std::exp(xv) * 2.0 * yv / (d * d);
  EXPECT_NEAR(f.grad(0), fx, 1e-14);
  EXPECT_NEAR(f.grad(1), fy, 1e-14);
  EXPECT_NEAR(f.hess(0, 1), fxy, 1e-14);
  EXPECT_EQ(f.hess(0, 1), f.hess(1, 0));
}

TEST(Jet2, RejectsTooManyVariables) { EXPECT_THROW(Jet2::constant(5, 1.0), DimensionUnsupported); }

TEST(ApplyJ0, RotatesPairs) {
  Eigen::VectorXd e(4);
  e << 1, 0, 0, 0;
  Eigen::VectorXd expected(4);
  expected << 0, 1, 0, 0;
  EXPECT_EQ(apply_j0(e), expected);
}

TEST(ApplyJ0, SquaresToMinusIdentityAndIsOrthogonal) {
  std::mt19937 rng(7);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd u(6);
    Eigen::VectorXd v(6);
    for (int i = 0; i < 6; ++i) {
      u[i] = normal(rng);
      v[i] = normal(rng);
    }
    EXPECT_TRUE(apply_j0(apply_j0(u)).isApprox(-u, 1e-15));
    EXPECT_NEAR(apply_j0(u).dot(apply_j0(v)), u.dot(v), 1e-13);
  }
  EXPECT_THROW(apply_j0(Eigen::VectorXd::Zero(3)), LengthMismatch);
}

TEST(FrameAt, FlatPlane) {
  const LagrangianPlane plane(3);
  const GeometryFrame f = plane.frame(ChartPoint({0.3, -2.0}, 1.1));
  EXPECT_TRUE(f.metric.isApprox(Eigen::MatrixXd::Identity(3, 3)));
  EXPECT_EQ(f.mean_curvature.norm(), 0.0);
  EXPECT_NEAR(f.cos_theta, 1.0, 1e-15);
  EXPECT_NEAR(f.sin_theta, 0.0, 1e-15);
  EXPECT_EQ(lagrangian_defect(f), 0.0);
}

TEST(FrameAt, RotatedPlaneCarriesItsAngle) {
  const LagrangianPlane plane(2, 0.8);
  const GeometryFrame f = plane.frame(ChartPoint({0.0}, 0.0));
  EXPECT_NEAR(f.theta(), 0.8, 1e-14);
  EXPECT_LE(lagrangian_defect(f), 1e-16);
}

TEST(FrameAt, CurvedSurfaceInvariants) {
  const GeometryFrame f = frame_at(curved, ChartPoint({0.4}, -0.2));
  EXPECT_TRUE((f.metric * f.metric_inv).isApprox(Eigen::MatrixXd::Identity(2, 2), 1e-12));
  EXPECT_NEAR(f.cos_theta * f.cos_theta + f.sin_theta * f.sin_theta, 1.0, 1e-12);
  for (int i = 0; i < 2; ++i) EXPECT_LE(std::abs(f.mean_curvature.dot(f.tangent.col(i))), 1e-10);
}

TEST(FrameAt, JltMetricMatchesClosedForm) {
  const ChartPoint p({0.7}, 1.3);
  const GeometryFrame f = standard().frame(p);
  const ClosedFormMetric c = jlt::metric_closed_form(SolitonParams{}, p);
  EXPECT_NEAR(f.metric(0, 0), 1.0 + 0.49 + 1.69, 1e-10);
  EXPECT_NEAR(f.metric(0, 1), 0.0, 1e-10);
  EXPECT_NEAR(f.metric(1, 1), c.metric(1, 1), 1e-10);
}

TEST(FrameAt, JltMeanCurvatureAtUnitY) {
  const GeometryFrame f = standard().frame(ChartPoint({0.0}, 1.0));
  const double expected = 1.0 / (2.0 * std::numbers::e);
  EXPECT_NEAR(jlt::mean_curvature_sq(SolitonParams{}, ChartPoint({0.0}, 1.0)), expected, 1e-15);
  EXPECT_NEAR(f.mean_curvature.squaredNorm() / expected, 1.0, 1e-8);
}

TEST(FrameAt, DegenerateMetricThrows) {
  const JetImmersion collapsed = [](const ChartPoint& p) {
    const Jet2 u = Jet2::variable(2, 0, p.coord(0));
    return std::vector<Jet2>{u, Jet2::constant(2, 0.0), u, Jet2::constant(2, 0.0)};
  };
  EXPECT_THROW(frame_at(collapsed, ChartPoint({0.0}, 0.0)), DegenerateMetric);
}

TEST(LagrangianDefect, JltAndComplexLine) {
  EXPECT_LE(lagrangian_defect(standard().frame(ChartPoint({0.7}, 1.3))), 1e-10);
  EXPECT_NEAR(lagrangian_defect(frame_at(complex_line, ChartPoint({0.2}, 0.5))), 1.0, 1e-15);
  EXPECT_NEAR(lagrangian_defect(frame_at(complex_line, ChartPoint({-3.0}, 8.0))), 1.0, 1e-15);
}

TEST(TranslatorResidual, PlaneContainingVector) {
  const LagrangianPlane plane(2);
  Eigen::VectorXd t(4);
  t << 0, 0, 1, 0;
  EXPECT_EQ(translator_residual(plane.frame(ChartPoint({1.0}, 2.0)), t), 0.0);
}

TEST(TranslatorResidual, JltGridAndWrongVector) {
  const Soliton& s = standard();
  for (double x = -3.0; x <= 3.0; x += 0.75) {
    for (double y = -4.0; y <= 4.0; y += 0.5) {
      EXPECT_LE(translator_residual(s.frame(ChartPoint({x}, y)), s.translator()), 1e-6) << x << " " << y;
    }
  }
  Eigen::VectorXd wrong(4);
  wrong << 1, 0, 0, 0;
  EXPECT_GE(translator_residual(s.frame(ChartPoint({0.0}, 1.0)), wrong), 0.1);
}

TEST(HEqualsJGradTheta, SpecialLagrangianPlane) {
  const LagrangianPlane plane(2, 0.3);
  EXPECT_LE(h_equals_j_grad_theta_residual(plane.jet_immersion(), ChartPoint({0.5}, 0.5), 1e-5), 1e-10);
}

TEST(HEqualsJGradTheta, JltBothBranches) {
  const JetImmersion imm = standard().jet_immersion();
  EXPECT_LE(h_equals_j_grad_theta_residual(imm, ChartPoint({0.0}, 1.0), 1e-5), 1e-5);
  EXPECT_LE(h_equals_j_grad_theta_residual(imm, ChartPoint({0.5}, -1.2), 1e-5), 1e-5);
  // |grad theta|^2 = |H|^2 through the closed form
  const GeometryFrame f = standard().frame(ChartPoint({0.0}, 1.0));
  const double dtheta = jlt::theta_prime(SolitonParams{}, 1.0);
  EXPECT_NEAR(dtheta * dtheta * f.metric_inv(1, 1), f.mean_curvature.squaredNorm(), 1e-12);
}

TEST(HEqualsJGradTheta, LargeStepTriggersBranchJump) {
  // z1 = e^{iu}, z2 = v: the angle is u + pi/2, so a step of 2 wraps past pi/2
  const JetImmersion spinning = [](const ChartPoint& p) {
    const Jet2 u = Jet2::variable(2, 0, p.coord(0));
    return std::vector<Jet2>{cos(u), sin(u), Jet2::variable(2, 1, p.coord(1)), Jet2::constant(2, 0.0)};
  };
  EXPECT_THROW(h_equals_j_grad_theta_residual(spinning, ChartPoint({0.0}, 0.0), 2.0), BranchJump);
}
