#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>

#include "soliton/error.hpp"

namespace soliton {

// Upper bound on the number of x-coordinates in a chart (n - 1 <= 3).
inline constexpr int kMaxChartX = 3;

// Chart coordinates (x_1, ..., x_{n-1}, y) of a soliton point.
class ChartPoint {
 public:
  ChartPoint() = default;

  ChartPoint(std::span<const double> x, double y) : nx_(static_cast<int>(x.size())), y_(y) {
    if (x.size() > static_cast<std::size_t>(kMaxChartX)) {
      throw DimensionUnsupported("chart supports at most 3 x-coordinates");
    }
    for (std::size_t i = 0; i < x.size(); ++i) x_[i] = x[i];
  }

  ChartPoint(std::initializer_list<double> x, double y)
      : ChartPoint(std::span<const double>(x.begin(), x.size()), y) {}

  int nx() const { return nx_; }
  int dim() const { return nx_ + 1; }
  double y() const { return y_; }
  double x(int j) const { return x_[static_cast<std::size_t>(j)]; }
  std::span<const double> xs() const { return {x_.data(), static_cast<std::size_t>(nx_)}; }

  // Coordinate u_i with u_{nx} = y.
  double coord(int i) const { return i == nx_ ? y_ : x_[static_cast<std::size_t>(i)]; }

  ChartPoint shifted(int i, double h) const {
    ChartPoint q = *this;
    if (i == nx_) {
      q.y_ += h;
    } else {
      q.x_[static_cast<std::size_t>(i)] += h;
    }
    return q;
  }

 private:
  std::array<double, kMaxChartX> x_{};
  int nx_ = 0;
  double y_ = 0.0;
};

}  // namespace soliton
