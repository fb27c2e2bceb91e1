#pragma once

// Dual numbers s + p*I where I is the (nilpotent) pseudoscalar of a
// degenerate algebra: I*I = 0.

#include "pga/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace pga {

struct DualNumber {
  double s = 0.0;  // scalar part
  double p = 0.0;  // pseudoscalar part

  DualNumber() = default;
  DualNumber(double s_, double p_) : s(s_), p(p_) {}

  DualNumber operator+(const DualNumber& o) const { return {s + o.s, p + o.p}; }
  DualNumber operator-(const DualNumber& o) const { return {s - o.s, p - o.p}; }
  DualNumber operator*(const DualNumber& o) const {
    return {s * o.s, s * o.p + p * o.s};
  }
  DualNumber operator*(double k) const { return {s * k, p * k}; }
  DualNumber operator-() const { return {-s, -p}; }
};

inline DualNumber dual_sqrt(const DualNumber& d) {
  if (d.s <= 0.0)
    throw std::domain_error("dual sqrt needs a positive scalar part");
  double r = std::sqrt(d.s);
  return {r, d.p / (2.0 * r)};
}

inline DualNumber dual_inverse(const DualNumber& d) {
  if (d.s == 0.0) throw std::domain_error("dual number with zero scalar part has no inverse");
  return {1.0 / d.s, -d.p / (d.s * d.s)};
}

// Scalar + pseudoscalar part of x (the dual-number shadow of an even element).
inline DualNumber dual_part(const Multivector& x) {
  return {x.scalar_part(), x.pseudo_part()};
}

inline Multivector dual_scale(const DualNumber& d, const Multivector& x) {
  return x * d.s + Multivector::pseudoscalar(x.sig()) * x * d.p;
}

}  // namespace pga
