#include "soliton/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "soliton/error.hpp"

namespace soliton {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool at_floor;
};

struct ByError {
  bool operator()(const Panel& l, const Panel& r) const { return l.error < r.error; }
};

double checked(const Integrand& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) throw NonFiniteIntegrand("integrand is not finite");
  return v;
}

Panel gauss_kronrod(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f, center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double resabs = std::abs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = checked(f, center - dx);
    const double f2 = checked(f, center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  resabs *= std::abs(half);
  const double floor = 50.0 * kEps * resabs;
  const double raw = std::abs(kronrod - gauss);
  return Panel{a, b, kronrod, std::max(raw, floor), raw <= floor};
}

}  // namespace

void TruncationPolicy::validate() const {
  if (!(x_radius > 0.0) || !(y_radius > 0.0)) throw DomainError("truncation radii must be positive");
  if (!(y_inner_cut >= 0.0) || !(y_inner_cut < 1.0) || !(y_inner_cut < y_radius)) {
    throw DomainError("y_inner_cut must lie in [0, min(1, y_radius))");
  }
  if (!std::isfinite(tail_bound) || tail_bound < 0.0) throw DomainError("tail_bound must be finite and >= 0");
}

QuadResult integrate_1d(const Integrand& f, double a, double b, double tol, const QuadOptions& options) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integration limits must be finite");
  if (a == b) return QuadResult{0.0, 0.0, 0, true};
  if (a > b) {
    QuadResult r = integrate_1d(f, b, a, tol, options);
    r.value = -r.value;
    return r;
  }

  const double min_width = 1e-13 * (b - a);
  std::priority_queue<Panel, std::vector<Panel>, ByError> open;
  std::vector<Panel> closed;

  Panel first = gauss_kronrod(f, a, b);
  double total_error = first.error;
  open.push(first);
  std::size_t panels = 1;

  while (total_error > tol && !open.empty() && panels < options.max_subdivisions) {
    Panel worst = open.top();
    open.pop();
    if (worst.at_floor || (worst.b - worst.a) < min_width) {
      closed.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gauss_kronrod(f, worst.a, mid);
    Panel right = gauss_kronrod(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    open.push(left);
    open.push(right);
    ++panels;
  }
  // every panel closed at the rounding floor: the estimate cannot shrink further
  const bool roundoff_limited = open.empty();

  while (!open.empty()) {
    closed.push_back(open.top());
    open.pop();
  }
  std::sort(closed.begin(), closed.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });

  QuadResult result;
  for (const Panel& p : closed) {
    result.value += p.value;
    result.error_estimate += p.error;
  }
  result.subdivisions = panels;
  result.converged = result.error_estimate <= tol || roundoff_limited;
  return result;
}

QuadResult integrate_ray(const Integrand& f, double a, double tol, const QuadOptions& options) {
  if (!std::isfinite(a)) throw DomainError("ray start must be finite");
  const double scale = options.ray_scale;
  if (!(scale > 0.0)) throw DomainError("ray scale must be positive");
  const Integrand mapped = [&](double u) {
    if (u >= 1.0) return 0.0;
    const double w = 1.0 - u;
    const double v = f(a + scale * u / w);
    if (v == 0.0) return 0.0;
    return v * scale / (w * w);
  };
  return integrate_1d(mapped, 0.0, 1.0, tol, options);
}

namespace {

class NestedBox {
 public:
  NestedBox(const SliceIntegrand& h, int nx, double radius, const QuadOptions& options)
      : h_(h), nx_(nx), radius_(radius), options_(options) {}

  QuadResult run(double tol) { return level(0, tol); }

 private:
  QuadResult level(int d, double tol) {
    const auto idx = static_cast<std::size_t>(d);
    if (d == nx_ - 1) {
      return integrate_1d(
          [&](double s) {
            x_[idx] = s;
            return h_(std::span<const double>(x_.data(), static_cast<std::size_t>(nx_)));
          },
          -radius_, radius_, tol, options_);
    }
    const double extent = 2.0 * radius_;
    const double inner_tol = tol / (4.0 * extent);
    double worst_inner = 0.0;
    bool inner_ok = true;
    std::size_t inner_subdivisions = 0;
    QuadResult outer = integrate_1d(
        [&](double s) {
          x_[idx] = s;
          const QuadResult r = level(d + 1, inner_tol);
          worst_inner = std::max(worst_inner, r.error_estimate);
          inner_ok = inner_ok && r.converged;
          inner_subdivisions += r.subdivisions;
          return r.value;
        },
        -radius_, radius_, 0.5 * tol, options_);
    outer.error_estimate += extent * worst_inner;
    outer.subdivisions += inner_subdivisions;
    outer.converged = outer.converged && inner_ok && outer.error_estimate <= tol;
    return outer;
  }

  const SliceIntegrand& h_;
  int nx_;
  double radius_;
  const QuadOptions& options_;
  std::array<double, kMaxChartX> x_{};
};

}  // namespace

QuadResult integrate_chart_sliced(const SliceFactory& factory, int n, const TruncationPolicy& policy,
                                  double tol, const QuadOptions& options) {
  if (n - 1 < 1 || n - 1 > kMaxChartX) throw DimensionUnsupported("chart integration needs n - 1 in {1, 2, 3}");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  policy.validate();

  const int nx = n - 1;
  const double y_extent = 2.0 * (policy.y_radius - policy.y_inner_cut);
  const double slice_tol = tol / (4.0 * y_extent);
  double worst_slice = 0.0;
  bool slices_ok = true;
  std::size_t slice_subdivisions = 0;

  const Integrand over_y = [&](double y) {
    const SliceIntegrand h = factory(y);
    NestedBox box(h, nx, policy.x_radius, options);
    const QuadResult r = box.run(slice_tol);
    worst_slice = std::max(worst_slice, r.error_estimate);
    slices_ok = slices_ok && r.converged;
    slice_subdivisions += r.subdivisions;
    return r.value;
  };

  const QuadResult lower = integrate_1d(over_y, -policy.y_radius, -policy.y_inner_cut, 0.25 * tol, options);
  const QuadResult upper = integrate_1d(over_y, policy.y_inner_cut, policy.y_radius, 0.25 * tol, options);

  QuadResult result;
  result.value = lower.value + upper.value;
  result.error_estimate =
      lower.error_estimate + upper.error_estimate + y_extent * worst_slice + policy.tail_bound;
  result.subdivisions = lower.subdivisions + upper.subdivisions + slice_subdivisions;
  result.converged = lower.converged && upper.converged && slices_ok && result.error_estimate <= tol;
  return result;
}

QuadResult integrate_chart(const ChartIntegrand& g, int n, const TruncationPolicy& policy, double tol,
                           const QuadOptions& options) {
  const SliceFactory factory = [&g](double y) -> SliceIntegrand {
    return [&g, y](std::span<const double> x) { return g(ChartPoint(x, y)); };
  };
  return integrate_chart_sliced(factory, n, policy, tol, options);
}

}  // namespace soliton
