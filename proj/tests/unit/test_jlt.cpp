#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "soliton/error.hpp"
#include "soliton/jlt.hpp"
#include "soliton/soliton.hpp"

using namespace soliton;

namespace {

SolitonParams params_of(std::vector<double> a, double alpha = 1.0) {
  SolitonParams p;
  p.n = static_cast<int>(a.size()) + 1;
  p.alpha = alpha;
  p.a = std::move(a);
  return p;
}

// Reference values from a 30-digit evaluation of the same integrals in an independent
// arbitrary-precision package.
constexpr double kPhiBarA1 = 0.61038582159219138;
constexpr double kPhi1At1 = 0.50231471667699406;
constexpr double kPhi1At5 = 0.61038579622848383;
constexpr double kPhiBarA12[] = {0.38017237590367537, 0.64217478842946243};
constexpr double kPhiBarA4 = 0.99404537958746707;
constexpr double kVA1[] = {0.33518364310184491, 0.14836564084364521, 0.052408165545298177, 0.0032347000983686555,
                           2.4409822035467252e-9};
constexpr double kVA12[] = {0.14180808442291376, 0.051600971542863457, 0.015139519567759518,
                            0.00068437377954795547, 2.785994883722572e-10};
constexpr double kVYs[] = {1.0, 1.5, 2.0, 3.0, 6.0};

}  // namespace

TEST(SolitonParams, Validation) {
  EXPECT_NO_THROW(SolitonParams{}.validate());
  EXPECT_THROW(params_of({}).validate(), InvalidParams);
  EXPECT_THROW(params_of({1.0}, 0.0).validate(), InvalidParams);
  EXPECT_THROW(params_of({-1.0}).validate(), InvalidParams);
  EXPECT_THROW(params_of({1, 1, 1, 1}).validate(), DimensionUnsupported);
  SolitonParams bad;
  bad.a = {1.0, 2.0};
  EXPECT_THROW(bad.validate(), LengthMismatch);
}

TEST(POfT, ValuesAndSymmetry) {
  const SolitonParams p;
  EXPECT_DOUBLE_EQ(jlt::p_of_t(p, 0.0), 2.0);
  EXPECT_NEAR(jlt::p_of_t(p, 1.0), 2.0 * std::numbers::e - 1.0, 1e-14);
  for (double t : {0.999, 1.001, 1e-3, 3.0}) {
    const double raw = ((1.0 + t * t) * std::exp(t * t) - 1.0) / (t * t);
    EXPECT_NEAR(jlt::p_of_t(p, t) / raw, 1.0, t < 0.01 ? 1e-9 : 1e-14) << t;
  }
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int i = 0; i < 50; ++i) {
    const double t = u(rng);
    EXPECT_EQ(jlt::p_of_t(p, t), jlt::p_of_t(p, -t));
    EXPECT_GT(jlt::p_of_t(p, t), 0.0);
  }
  // 1/sqrt(P) stays finite far beyond exp overflow
  EXPECT_GT(jlt::inv_sqrt_p(p, 25.0), 0.0);
  EXPECT_TRUE(std::isfinite(jlt::inv_sqrt_p(p, 25.0)));
}

TEST(InvSqrtPJet, DerivativesMatchFiniteDifferences) {
  const SolitonParams p = params_of({1.0, 2.0});
  for (double t : {0.0, 1e-4, 0.3, 0.72, 1.5, 4.0}) {
    const Jet2 j = jlt::inv_sqrt_p_jet(p, Jet2::variable(1, 0, t));
    const double h = 1e-4;
    const double fp = jlt::inv_sqrt_p(p, t + h);
    const double fm = jlt::inv_sqrt_p(p, t - h);
    const double f0 = jlt::inv_sqrt_p(p, t);
    EXPECT_NEAR(j.value(), f0, 1e-15);
    EXPECT_NEAR(j.grad(0), (fp - fm) / (2 * h), 1e-8) << t;
    EXPECT_NEAR(j.hess(0, 0), (fp - 2 * f0 + fm) / (h * h), 1e-6) << t;
  }
}

TEST(PhiJ, ValuesOddnessMonotonicity) {
  const SolitonParams p;
  EXPECT_EQ(jlt::phi_j(p, 0, 0.0), 0.0);
  EXPECT_NEAR(jlt::phi_j(p, 0, 1.0, 1e-13), kPhi1At1, 1e-12);
  EXPECT_NEAR(jlt::phi_j(p, 0, 5.0, 1e-13), kPhi1At5, 1e-12);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 8.0);
  for (int i = 0; i < 20; ++i) {
    const double y = u(rng);
    EXPECT_EQ(jlt::phi_j(p, 0, -y), -jlt::phi_j(p, 0, y));
  }
  double previous = -INFINITY;
  for (double y = -5.0; y <= 5.0; y += 0.25) {
    const double v = jlt::phi_j(p, 0, y);
    EXPECT_GT(v, previous);
    previous = v;
  }
  EXPECT_THROW(jlt::phi_j(p, 1, 1.0), DomainError);
}

TEST(PhiBar, LimitAndValues) {
  const SolitonParams p;
  const double bar = jlt::phi_bar(p, 0, 1e-13);
  EXPECT_NEAR(bar, kPhiBarA1, 1e-12);
  EXPECT_GT(bar, 0.0);
  EXPECT_LT(bar, std::numbers::pi / 2);
  EXPECT_NEAR(jlt::phi_j(p, 0, 12.0, 1e-13), bar, 1e-9);

  const SolitonParams p12 = params_of({1.0, 2.0});
  EXPECT_NEAR(jlt::phi_bar(p12, 0, 1e-13), kPhiBarA12[0], 1e-12);
  EXPECT_NEAR(jlt::phi_bar(p12, 1, 1e-13), kPhiBarA12[1], 1e-12);
  EXPECT_LT(kPhiBarA12[0] + kPhiBarA12[1], std::numbers::pi / 2);
}

TEST(PhiBar, SymmetricParametersAndMonotoneInA) {
  const SolitonParams p11 = params_of({1.0, 1.0});
  const double b0 = jlt::phi_bar(p11, 0);
  const double b1 = jlt::phi_bar(p11, 1);
  EXPECT_NEAR(b0, b1, 1e-13);
  EXPECT_LT(b0, std::numbers::pi / 4);
  const double b4 = jlt::phi_bar(params_of({4.0}), 0, 1e-13);
  EXPECT_NEAR(b4, kPhiBarA4, 1e-12);
  EXPECT_GT(b4, kPhiBarA1);
}

TEST(GammaOfY, BranchesAndSymmetry) {
  const SolitonParams p;
  EXPECT_EQ(jlt::gamma_of_y(p, 0.0), std::numbers::pi / 2);
  EXPECT_LT(jlt::gamma_of_y(p, 30.0), 1e-12);
  EXPECT_GT(jlt::gamma_of_y(p, -30.0), std::numbers::pi - 1e-12);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    const double y = u(rng);
    EXPECT_NEAR(jlt::gamma_of_y(p, y) + jlt::gamma_of_y(p, -y), std::numbers::pi, 1e-15);
  }
  // continuity through 0 and strict decrease
  EXPECT_NEAR(jlt::gamma_of_y(p, 1e-9), std::numbers::pi / 2, 1e-8);
  EXPECT_NEAR(jlt::gamma_of_y(p, -1e-9), std::numbers::pi / 2, 1e-8);
  double previous = INFINITY;
  for (double y = -4.0; y <= 4.0; y += 0.1) {
    const double g = jlt::gamma_of_y(p, y);
    EXPECT_LT(g, previous);
    previous = g;
  }
}

TEST(Theta, EndpointsAndDerivative) {
  const SolitonParams p;
  EXPECT_EQ(jlt::theta_of_y(p, 0.0), std::numbers::pi / 2);
  EXPECT_NEAR(jlt::theta_of_y(p, 15.0), kPhiBarA1, 1e-9);
  EXPECT_NEAR(jlt::theta_of_y(p, -15.0), std::numbers::pi - kPhiBarA1, 1e-9);
  const double h = 1e-4;
  const double fd = (jlt::theta_of_y(p, 1.5 + h, 1e-14) - jlt::theta_of_y(p, 1.5 - h, 1e-14)) / (2 * h);
  EXPECT_NEAR(fd, jlt::theta_prime(p, 1.5), 1e-7);
  EXPECT_DOUBLE_EQ(jlt::theta_prime(p, 0.0), -1.0 / std::sqrt(2.0));
  // the y > 0 display -alpha y / sqrt(Q - 1)
  const double y = 0.8;
  EXPECT_NEAR(jlt::theta_prime(p, y), -y / std::sqrt((1 + y * y) * std::exp(y * y) - 1.0), 1e-15);
  EXPECT_NEAR(jlt::theta_prime(p, -y), jlt::theta_prime(p, y), 1e-16);
}

TEST(Theta, MonotonicityTripleAndTelescoping) {
  for (const SolitonParams& p : {SolitonParams{}, params_of({1.0, 2.0}), params_of({0.5, 3.0, 1.0}, 2.0)}) {
    for (double y = -4.0; y <= 4.0; y += 0.2) {
      double sum = jlt::dgamma_dy(p, y);
      for (int j = 0; j < p.nx(); ++j) {
        EXPECT_GT(jlt::dphi_dy(p, j, y), 0.0);
        sum += jlt::dphi_dy(p, j, y);
      }
      EXPECT_LT(jlt::dgamma_dy(p, y), 0.0);
      EXPECT_LT(jlt::theta_prime(p, y), 0.0);
      EXPECT_NEAR(sum, jlt::theta_prime(p, y), 1e-12);
    }
  }
}

TEST(Theta, DerivativeDisplaysAgainstFiniteDifferences) {
  const SolitonParams p = params_of({1.0, 2.0});
  const double h = 1e-4;
  for (double y : {-2.0, -0.5, 0.7, 1.8}) {
    for (int j = 0; j < p.nx(); ++j) {
      const double fd = (jlt::phi_j(p, j, y + h, 1e-14) - jlt::phi_j(p, j, y - h, 1e-14)) / (2 * h);
      EXPECT_NEAR(fd, jlt::dphi_dy(p, j, y), 1e-7);
    }
    const double gd = (jlt::gamma_of_y(p, y + h) - jlt::gamma_of_y(p, y - h)) / (2 * h);
    EXPECT_NEAR(gd, jlt::dgamma_dy(p, y), 1e-7);
  }
}

TEST(Immerse, OriginAndNormIdentity) {
  const SolitonParams p;
  const AmbientPoint o = jlt::immerse(p, ChartPoint({0.0}, 0.0));
  EXPECT_EQ(o.coords[0], 0.0);
  EXPECT_EQ(o.coords[1], 0.0);
  EXPECT_EQ(o.coords[2], 0.0);
  EXPECT_NEAR(o.coords[3], -std::numbers::pi / 2, 1e-16);

  const SolitonParams p12 = params_of({1.0, 2.0});
  const Soliton s(p12);
  for (double y : {-2.5, 0.0, 0.4, 3.0}) {
    const ChartPoint q({0.8, -1.1}, y);
    const AmbientPoint x = jlt::immerse(p12, q);
    EXPECT_NEAR(x.coords.squaredNorm(), jlt::ambient_norm_sq(p12, q, jlt::theta_of_y(p12, y)), 1e-10);
    EXPECT_LE((x.coords - s.immerse(q).coords).norm(), 1e-10);
  }
}

TEST(Immerse, TangentAlongX) {
  const Soliton s{SolitonParams{}};
  const GeometryFrame f = s.frame(ChartPoint({0.0}, 1.0));
  EXPECT_NEAR(f.tangent(0, 0), std::sqrt(2.0) * std::cos(kPhi1At1), 1e-11);
  EXPECT_NEAR(f.tangent(1, 0), std::sqrt(2.0) * std::sin(kPhi1At1), 1e-11);
  EXPECT_EQ(f.tangent(2, 0), 0.0);
  EXPECT_EQ(f.tangent(3, 0), 0.0);
}

TEST(Immerse, JetValuesMatchPlainImmersion) {
  const SolitonParams p = params_of({1.0, 2.0});
  const ChartPoint q({0.3, 0.9}, -1.4);
  const std::vector<Jet2> jets = jlt::immerse_jet(p, q);
  const AmbientPoint x = jlt::immerse(p, q);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(jets[static_cast<std::size_t>(i)].value(), x.coords[i], 1e-14);
}

TEST(MetricClosedForm, UnitYValueAndZeroCrossTerms) {
  const SolitonParams p;
  const ClosedFormMetric c = jlt::metric_closed_form(p, ChartPoint({0.0}, 1.0));
  const double e = std::numbers::e;
  EXPECT_NEAR(c.det_g, 4.0 * e / (2.0 * e - 1.0), 1e-14);
  const Soliton s(p);
  EXPECT_NEAR(s.frame(ChartPoint({0.0}, 1.0)).metric.determinant(), c.det_g, 1e-10);
  for (double y : {-2.0, 0.3, 1.7}) {
    const ClosedFormMetric m = jlt::metric_closed_form(params_of({1.0, 2.0}), ChartPoint({0.4, -0.6}, y));
    EXPECT_EQ(m.metric(0, 2), 0.0);
    EXPECT_EQ(m.metric(1, 2), 0.0);
    EXPECT_NEAR(m.area_density, std::sqrt(m.det_g), 1e-12 * m.area_density);
  }
  EXPECT_THROW(jlt::metric_closed_form(p, ChartPoint({0.0}, 0.0)), BranchPoint);
}

TEST(MetricClosedForm, DetGHasFinitePositiveLimitAtZero) {
  // y^2 / (Q - 1) -> 1 / (alpha + sum a), so det g does not vanish at y = 0
  const SolitonParams p;
  const ChartPoint near({0.5}, 1e-5);
  const double s = 0.25 / 1.0;  // x^2 / c with c -> 1/a = 1
  const double limit = (s + 1.0) * (s + 1.0) * 1.0 / 2.0;
  EXPECT_NEAR(jlt::metric_closed_form(p, near).det_g, limit, 1e-8);
  const Soliton sol(p);
  const GeometryFrame f = sol.frame(ChartPoint({0.5}, 0.0));
  EXPECT_NEAR(f.metric.determinant(), limit, 1e-12);
  EXPECT_NEAR(jlt::area_density(p, ChartPoint({0.5}, 0.0)), std::sqrt(limit), 1e-14);
}

TEST(MetricClosedForm, DetG1MatchesDirectDeterminant) {
  const SolitonParams p = params_of({1.0, 2.0, 0.5});
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 40; ++i) {
    const ChartPoint q({u(rng), u(rng), u(rng)}, u(rng));
    const double direct = jlt::g1_closed_form(p, q).determinant();
    EXPECT_NEAR(jlt::det_g1_closed_form(p, q) / direct, 1.0, 1e-10);
  }
}

TEST(MeanCurvatureSq, ValuesAndMonotoneInX) {
  const SolitonParams p;
  EXPECT_DOUBLE_EQ(jlt::mean_curvature_sq(p, ChartPoint({0.0}, 0.0)), 1.0);
  EXPECT_NEAR(jlt::mean_curvature_sq(p, ChartPoint({0.0}, 1.0)), 1.0 / (2.0 * std::numbers::e), 1e-16);
  double previous = INFINITY;
  for (double x = 0.0; x < 5.0; x += 0.5) {
    const double h = jlt::mean_curvature_sq(p, ChartPoint({x}, 0.7));
    EXPECT_LT(h, previous);
    previous = h;
  }
  // weighted curvature is |H|^2 times the area density and does not depend on x
  for (double x : {0.0, 1.3, -2.0}) {
    const ChartPoint q({x}, 1.1);
    EXPECT_NEAR(jlt::mean_curvature_sq(p, q) * jlt::area_density(p, q), jlt::weighted_curvature(p, 1.1), 1e-15);
  }
}

TEST(VOfY, FrozenValuesAndIdentity) {
  const SolitonParams p1;
  const SolitonParams p12 = params_of({1.0, 2.0});
  for (int i = 0; i < 5; ++i) {
    EXPECT_NEAR(jlt::v_of_y(p1, kVYs[i]) / kVA1[i], 1.0, 1e-10) << kVYs[i];
    EXPECT_NEAR(jlt::v_of_y(p12, kVYs[i]) / kVA12[i], 1.0, 1e-10) << kVYs[i];
  }
  const double theta_inf = jlt::phi_bar(p1, 0, 1e-13);
  for (double y : {1.0, 2.0, 3.0}) {
    EXPECT_NEAR(jlt::v_of_y(p1, y), jlt::theta_of_y(p1, y, 1e-13) - theta_inf, 1e-9);
  }
  EXPECT_LT(jlt::v_of_y(p1, 9.0), 1e-18);
  EXPECT_THROW(jlt::v_of_y(p1, 0.0), DomainError);
}

TEST(VBounds, EndpointsAndStrictness) {
  const SolitonParams p;
  const VBounds b = jlt::v_bounds(p, 1.0);
  EXPECT_NEAR(b.lower, std::exp(-0.5) / (2.0 * std::sqrt(2.0)), 1e-16);
  EXPECT_NEAR(b.upper, std::exp(-0.5), 1e-16);
  for (const SolitonParams& q : {p, params_of({1.0, 2.0})}) {
    for (double y = 1.0; y <= 6.0; y += 0.5) {
      const VBounds bb = jlt::v_bounds(q, y);
      const double v = jlt::v_of_y(q, y);
      EXPECT_LT(bb.lower, v) << y;
      EXPECT_LT(v, bb.upper) << y;
    }
  }
  EXPECT_THROW(jlt::v_bounds(params_of({1.0}, 2.0), 1.0), AlphaNotOne);
  EXPECT_THROW(jlt::v_bounds(p, 0.5), DomainError);
}

TEST(VBounds, StrongerUpperBoundFailsBeyondTwo) {
  // the bound with sqrt(prod(1 + a_j)) holds at y = 1 but not at y = 2 for a = 1
  const SolitonParams p;
  EXPECT_LT(jlt::v_of_y(p, 1.0), jlt::v_upper_strong(p, 1.0));
  EXPECT_GT(jlt::v_of_y(p, 2.0), jlt::v_upper_strong(p, 2.0));
}

TEST(Scalars, StandardValues) {
  const SolitonScalars s = jlt::scalars(SolitonParams{}, 1e-13);
  EXPECT_NEAR(s.phi_bar[0], kPhiBarA1, 1e-12);
  EXPECT_NEAR(s.theta_inf + s.theta_sup, std::numbers::pi, 1e-15);
  EXPECT_NEAR(s.oscillation, 1.9208210104054105, 1e-12);
  EXPECT_NEAR(s.s0, std::exp(-0.5) / (2.0 * std::sqrt(2.0)), 1e-16);
  // {v <= s0} lies in {y >= 1}
  EXPECT_GE(jlt::v_of_y(SolitonParams{}, 1.0), s.s0);
  const SolitonScalars s12 = jlt::scalars(params_of({1.0, 2.0}));
  EXPECT_GE(jlt::v_of_y(params_of({1.0, 2.0}), 1.0), s12.s0);
}

TEST(Scalars, OscillationShrinksWithA) {
  const double d1 = jlt::scalars(params_of({1.0})).oscillation;
  const double d4 = jlt::scalars(params_of({4.0})).oscillation;
  EXPECT_LT(d4, d1);
  EXPECT_GT(d4, 0.0);
}

TEST(SolitonCache, InterpolantMatchesDirectQuadrature) {
  for (const SolitonParams& p : {SolitonParams{}, params_of({1.0, 2.0})}) {
    const Soliton s(p);
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-14.0, 14.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double y = u(rng);
      for (int j = 0; j < p.nx(); ++j) worst = std::max(worst, std::abs(s.phi(j, y) - jlt::phi_j(p, j, y, 1e-14)));
    }
    EXPECT_LE(worst, 1e-11);
  }
}

TEST(SolitonCache, VAcrossZero) {
  const Soliton s{SolitonParams{}};
  const double d = s.scalars().oscillation;
  EXPECT_EQ(s.v(0.0), 0.5 * d);
  EXPECT_NEAR(s.v(1e-6), 0.5 * d, 1e-6);
  EXPECT_NEAR(s.v(-1.5), d - s.v(1.5), 1e-15);
  EXPECT_NEAR(s.v(-1.5), s.theta(-1.5) - s.scalars().theta_inf, 1e-10);
}
