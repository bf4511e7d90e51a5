#pragma once

#include <functional>
#include <vector>

namespace soliton {

// Chebyshev expansion of a smooth function on [lo, hi].
class ChebyshevSeries {
 public:
  ChebyshevSeries() = default;

  // Fits from values at the Chebyshev-Lobatto nodes x_k = mid + half * cos(pi k / (m - 1)), k = 0..m-1.
  static ChebyshevSeries from_lobatto_values(double lo, double hi, const std::vector<double>& values);

  static std::vector<double> lobatto_nodes(double lo, double hi, int count);

  double operator()(double x) const;

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::vector<double>& coefficients() const { return coeffs_; }

  // Largest magnitude among the last `count` coefficients.
  double tail_magnitude(int count) const;

 private:
  double lo_ = 0.0;
  double hi_ = 1.0;
  std::vector<double> coeffs_;
};

}  // namespace soliton
