#pragma once

#include <array>
#include <cmath>

#include "soliton/error.hpp"

namespace soliton {

inline constexpr int kMaxJetDim = 4;

// Second-order forward-mode jet: value, gradient and Hessian with respect to `dim` chart variables.
class Jet2 {
 public:
  Jet2() = default;

  static Jet2 constant(int dim, double c) {
    Jet2 j(dim);
    j.v_ = c;
    return j;
  }

  static Jet2 variable(int dim, int index, double value) {
    Jet2 j(dim);
    j.v_ = value;
    j.g_[static_cast<std::size_t>(index)] = 1.0;
    return j;
  }

  int dim() const { return n_; }
  double value() const { return v_; }
  double grad(int i) const { return g_[static_cast<std::size_t>(i)]; }
  double hess(int i, int j) const { return h_[static_cast<std::size_t>(i * kMaxJetDim + j)]; }

  // Composition with a univariate function given f(u), f'(u), f''(u).
  Jet2 chain(double f, double df, double d2f) const {
    Jet2 r(n_);
    r.v_ = f;
    for (int i = 0; i < n_; ++i) r.g_[idx(i)] = df * g_[idx(i)];
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        r.h_[idx(i, j)] = df * h_[idx(i, j)] + d2f * g_[idx(i)] * g_[idx(j)];
      }
    }
    return r;
  }

  Jet2& operator+=(const Jet2& o) {
    v_ += o.v_;
    for (int i = 0; i < n_; ++i) g_[idx(i)] += o.g_[idx(i)];
    for (int k = 0; k < kMaxJetDim * kMaxJetDim; ++k) h_[static_cast<std::size_t>(k)] += o.h_[static_cast<std::size_t>(k)];
    return *this;
  }

  Jet2& operator-=(const Jet2& o) { return *this += -o; }

  Jet2& operator*=(double c) {
    v_ *= c;
    for (auto& x : g_) x *= c;
    for (auto& x : h_) x *= c;
    return *this;
  }

  Jet2& operator+=(double c) {
    v_ += c;
    return *this;
  }

  Jet2 operator-() const {
    Jet2 r = *this;
    r *= -1.0;
    return r;
  }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator+(Jet2 a, double c) { return a += c; }
  friend Jet2 operator+(double c, Jet2 a) { return a += c; }
  friend Jet2 operator-(Jet2 a, double c) { return a += -c; }
  friend Jet2 operator-(double c, const Jet2& a) { return -a + c; }
  friend Jet2 operator*(Jet2 a, double c) { return a *= c; }
  friend Jet2 operator*(double c, Jet2 a) { return a *= c; }
  friend Jet2 operator/(Jet2 a, double c) { return a *= 1.0 / c; }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r(a.n_);
    r.v_ = a.v_ * b.v_;
    for (int i = 0; i < a.n_; ++i) r.g_[idx(i)] = a.g_[idx(i)] * b.v_ + a.v_ * b.g_[idx(i)];
    for (int i = 0; i < a.n_; ++i) {
      for (int j = 0; j < a.n_; ++j) {
        r.h_[idx(i, j)] = a.h_[idx(i, j)] * b.v_ + a.v_ * b.h_[idx(i, j)] + a.g_[idx(i)] * b.g_[idx(j)] +
                          a.g_[idx(j)] * b.g_[idx(i)];
      }
    }
    return r;
  }

  friend Jet2 reciprocal(const Jet2& a) {
    const double inv = 1.0 / a.v_;
    return a.chain(inv, -inv * inv, 2.0 * inv * inv * inv);
  }

  friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }

  friend Jet2 sin(const Jet2& a) {
    const double s = std::sin(a.v_);
    const double c = std::cos(a.v_);
    return a.chain(s, c, -s);
  }

  friend Jet2 cos(const Jet2& a) {
    const double s = std::sin(a.v_);
    const double c = std::cos(a.v_);
    return a.chain(c, -s, -c);
  }

  friend Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.v_);
    return a.chain(e, e, e);
  }

  friend Jet2 log(const Jet2& a) {
    const double inv = 1.0 / a.v_;
    return a.chain(std::log(a.v_), inv, -inv * inv);
  }

  friend Jet2 sqrt(const Jet2& a) {
    const double r = std::sqrt(a.v_);
    return a.chain(r, 0.5 / r, -0.25 / (r * a.v_));
  }

 private:
  explicit Jet2(int dim) : n_(dim) {
    if (dim < 1 || dim > kMaxJetDim) throw DimensionUnsupported("jets support 1 to 4 variables");
  }

  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }
  static std::size_t idx(int i, int j) { return static_cast<std::size_t>(i * kMaxJetDim + j); }

  int n_ = 1;
  double v_ = 0.0;
  std::array<double, kMaxJetDim> g_{};
  std::array<double, kMaxJetDim * kMaxJetDim> h_{};
};

}  // namespace soliton
