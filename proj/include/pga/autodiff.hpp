#pragma once

// Forward-mode automatic differentiation on flat gradient vectors. The
// product rule is evaluated as a.grad * b.val + a.val * b.grad, in that
// order; evaluating a polynomial by Horner's rule in ADNumber then gives
// bit-identical derivatives to evaluating it over the algebra at x + V
// for a nilpotent ideal vector V.

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace pga {

struct ADNumber {
  double val = 0.0;
  Eigen::VectorXd grad;

  ADNumber() = default;
  ADNumber(double v, Eigen::VectorXd g) : val(v), grad(std::move(g)) {}
};

// The variable with index i out of n.
inline ADNumber ad_variable(double v, int i, int n) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
  g(i) = 1.0;
  return {v, std::move(g)};
}

inline ADNumber ad_constant(double v, int n) {
  return {v, Eigen::VectorXd::Zero(n)};
}

inline ADNumber operator+(const ADNumber& a, const ADNumber& b) {
  return {a.val + b.val, a.grad + b.grad};
}
inline ADNumber operator+(const ADNumber& a, double b) { return {a.val + b, a.grad}; }
inline ADNumber operator+(double a, const ADNumber& b) { return {a + b.val, b.grad}; }

inline ADNumber operator-(const ADNumber& a) { return {-a.val, -a.grad}; }
inline ADNumber operator-(const ADNumber& a, const ADNumber& b) {
  return {a.val - b.val, a.grad - b.grad};
}
inline ADNumber operator-(const ADNumber& a, double b) { return {a.val - b, a.grad}; }
inline ADNumber operator-(double a, const ADNumber& b) { return {a - b.val, -b.grad}; }

inline ADNumber operator*(const ADNumber& a, const ADNumber& b) {
  return {a.val * b.val, a.grad * b.val + a.val * b.grad};
}
inline ADNumber operator*(const ADNumber& a, double b) { return {a.val * b, a.grad * b}; }
inline ADNumber operator*(double a, const ADNumber& b) { return {a * b.val, a * b.grad}; }

inline ADNumber operator/(const ADNumber& a, const ADNumber& b) {
  double inv2 = 1.0 / (b.val * b.val);
  return {a.val / b.val, (a.grad * b.val - a.val * b.grad) * inv2};
}
inline ADNumber operator/(const ADNumber& a, double b) { return {a.val / b, a.grad / b}; }
inline ADNumber operator/(double a, const ADNumber& b) {
  return {a / b.val, b.grad * (-a / (b.val * b.val))};
}

inline ADNumber sin(const ADNumber& a) {
  return {std::sin(a.val), a.grad * std::cos(a.val)};
}
inline ADNumber cos(const ADNumber& a) {
  return {std::cos(a.val), a.grad * -std::sin(a.val)};
}
inline ADNumber exp(const ADNumber& a) {
  double e = std::exp(a.val);
  return {e, a.grad * e};
}
inline ADNumber log(const ADNumber& a) {
  if (a.val <= 0.0) throw std::domain_error("log needs a positive value");
  return {std::log(a.val), a.grad / a.val};
}
inline ADNumber sqrt(const ADNumber& a) {
  if (a.val <= 0.0) throw std::domain_error("sqrt needs a positive value");
  double r = std::sqrt(a.val);
  return {r, a.grad / (2.0 * r)};
}
inline ADNumber pow(const ADNumber& a, double p) {
  return {std::pow(a.val, p), a.grad * (p * std::pow(a.val, p - 1.0))};
}
inline ADNumber atan2(const ADNumber& y, const ADNumber& x) {
  double denom = x.val * x.val + y.val * y.val;
  return {std::atan2(y.val, x.val), (y.grad * x.val - x.grad * y.val) / denom};
}

}  // namespace pga
