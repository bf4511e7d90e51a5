#pragma once

namespace soliton {

inline constexpr double kDefaultTol = 1e-10;

class BesselOrder {
 public:
  explicit BesselOrder(double nu);
  double nu() const { return nu_; }

 private:
  double nu_;
};

class GammaArgs {
 public:
  GammaArgs(double a, double x);
  double a() const { return a_; }
  double x() const { return x_; }

 private:
  double a_;
  double x_;
};

// K_nu(z) from the integral K_nu(z) = 1/2 (z/2)^nu int_0^inf t^(-nu-1) exp(-z^2/(4t) - t) dt,
// evaluated in the variable s = log t. With cross_check set, the cosh representation is
// evaluated as well and the two must agree within 10 * tol.
double bessel_k(BesselOrder order, double z, double tol = kDefaultTol, bool cross_check = true);

// e^z K_nu(z) from the same representation; no cross-check.
double bessel_k_scaled(BesselOrder order, double z, double tol = kDefaultTol);

// K_nu(z) = int_0^inf exp(-z cosh u) cosh(nu u) du, the independent route.
double bessel_k_cosh(BesselOrder order, double z, double tol = kDefaultTol);
double bessel_k_cosh_scaled(BesselOrder order, double z, double tol = kDefaultTol);

// Gamma(a, x) = int_x^inf t^(a-1) e^-t dt.
double upper_gamma(GammaArgs args, double tol = kDefaultTol);

// x^(1-a) e^x Gamma(a, x) for x > 0, the quantity bracketed by x/(x+1-a) and (x+1)/(x+2-a) when a < 1.
double upper_gamma_scaled(GammaArgs args, double tol = kDefaultTol);

// Lower estimate of inf_{z >= z_min} sqrt(z) e^z K_nu(z): grid minimum over [z_min, Z*] with
// Z* = max(50, 10 z_min), combined with the floor sqrt(pi/2) (1 - 1.1 |4 nu^2 - 1| / (8 Z*)).
double bessel_ray_infimum(BesselOrder order, double z_min, int grid, double tol = kDefaultTol);

}  // namespace soliton
