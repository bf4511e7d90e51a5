#include "soliton/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "soliton/error.hpp"

namespace soliton {

std::vector<double> ChebyshevSeries::lobatto_nodes(double lo, double hi, int count) {
  if (count < 2) throw DomainError("Chebyshev fit needs at least two nodes");
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  std::vector<double> nodes(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    nodes[static_cast<std::size_t>(k)] = mid + half * std::cos(std::numbers::pi * k / (count - 1));
  }
  return nodes;
}

ChebyshevSeries ChebyshevSeries::from_lobatto_values(double lo, double hi, const std::vector<double>& values) {
  const int m = static_cast<int>(values.size());
  if (m < 2) throw DomainError("Chebyshev fit needs at least two nodes");
  const int n = m - 1;
  ChebyshevSeries s;
  s.lo_ = lo;
  s.hi_ = hi;
  s.coeffs_.assign(static_cast<std::size_t>(m), 0.0);
  // discrete cosine transform of type I
  for (int j = 0; j <= n; ++j) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
      const double w = (k == 0 || k == n) ? 0.5 : 1.0;
      sum += w * values[static_cast<std::size_t>(k)] * std::cos(std::numbers::pi * j * k / n);
    }
    double c = 2.0 * sum / n;
    if (j == 0 || j == n) c *= 0.5;
    s.coeffs_[static_cast<std::size_t>(j)] = c;
  }
  return s;
}

double ChebyshevSeries::operator()(double x) const {
  const double t = (2.0 * x - (lo_ + hi_)) / (hi_ - lo_);
  // Clenshaw recurrence
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t j = coeffs_.size(); j-- > 1;) {
    const double b0 = 2.0 * t * b1 - b2 + coeffs_[j];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + coeffs_.front();
}

double ChebyshevSeries::tail_magnitude(int count) const {
  double worst = 0.0;
  const std::size_t start = coeffs_.size() > static_cast<std::size_t>(count) ? coeffs_.size() - count : 0;
  for (std::size_t j = start; j < coeffs_.size(); ++j) worst = std::max(worst, std::abs(coeffs_[j]));
  return worst;
}

}  // namespace soliton
