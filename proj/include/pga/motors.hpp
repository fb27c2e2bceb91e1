#pragma once

// Exponential and logarithm for bivectors and motors, axis decomposition,
// motor square roots, and the two-line product decomposition.

#include "pga/algebra.hpp"
#include "pga/dual.hpp"
#include "pga/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace pga {

// B*B = s + p*I for a bivector B (no other grades survive).
inline DualNumber bivector_square(const Multivector& B) {
  return dual_part(B * B);
}

struct AxisDecomposition {
  DualNumber norm;         // u + v*I, u > 0
  Multivector axis;        // unit euclidean bivector, axis*axis = -1
  Multivector axis_perp;   // axis * I
};

// Write a euclidean bivector as (u + v*I) * axis. Ideal bivectors have no
// euclidean axis and are rejected.
inline AxisDecomposition axis_decompose(const Multivector& B) {
  double scale = B.max_abs();
  DualNumber sq = bivector_square(B);
  if (scale == 0.0 || -sq.s <= kClassifyTol * scale * scale)
    throw std::domain_error("ideal bivector has no euclidean axis");
  DualNumber n = dual_sqrt({-sq.s, -sq.p});
  Multivector axis = dual_scale(dual_inverse(n), B);
  return {n, axis, polar(axis)};
}

inline Multivector exp_bivector(const Multivector& B) {
  double scale = B.max_abs();
  Multivector one = Multivector::scalar(B.sig(), 1.0);
  if (scale == 0.0) return one;
  DualNumber sq = bivector_square(B);
  if (-sq.s <= kClassifyTol * scale * scale) return one + B;  // ideal: 1 + B
  DualNumber n = dual_sqrt({-sq.s, -sq.p});
  Multivector axis = dual_scale(dual_inverse(n), B);
  double cu = std::cos(n.s), su = std::sin(n.s);
  // e^{(u+vI) axis} = (cos u - v sin u I) + (sin u + v cos u I) axis
  Multivector r = Multivector::scalar(B.sig(), cu);
  r = r + Multivector::pseudoscalar(B.sig(), -n.p * su);
  r = r + dual_scale({su, n.p * cu}, axis);
  return r;
}

// Dual-number norm of an even element: sqrt(g * reverse(g)).
inline DualNumber motor_norm(const Multivector& g) {
  return dual_sqrt(dual_part(g * g.reverse()));
}

inline Multivector normalize_motor(const Multivector& g) {
  return dual_scale(dual_inverse(motor_norm(g)), g);
}

// Principal bivector logarithm of a normalized motor. The rotation part
// uses u = atan2(s2, s1) (s2 >= 0 by the axis convention); the dual part
// is v = p2/s1 or -p1/s2, algebraically equal, chosen by conditioning.
inline Multivector log_motor(const Multivector& g) {
  Multivector m = normalize_motor(g);
  double s1 = m.scalar_part();
  double p1 = m.pseudo_part();
  Multivector B = m.grade_part(2);
  double scale = m.max_abs();
  if (B.max_abs() <= 1e-14 * scale) {
    if (s1 > 0.0) return Multivector(m.sig());
    throw std::domain_error("the motor -1 has no principal logarithm");
  }
  DualNumber sq = bivector_square(B);
  if (-sq.s <= kClassifyTol * scale * scale) {
    // translator: m = s1 (1 + B/s1), exp(B/s1) = 1 + B/s1
    if (std::abs(s1) < 1e-12)
      throw std::domain_error("even element is not a motor");
    return B * (1.0 / s1);
  }
  AxisDecomposition ax = axis_decompose(B);
  double s2 = ax.norm.s, p2 = ax.norm.p;
  double u = std::atan2(s2, s1);
  double v = (std::abs(s1) >= std::abs(s2)) ? p2 / s1 : -p1 / s2;
  return dual_scale({u, v}, ax.axis);
}

// Tabulated variant of the motor logarithm:
//   b = <m>_2, s = sqrt(-b.b), p = -(b^b)/(2s),
//   bhat = ((s - pI)/s^2) b,
//   log m = (atan(s/<m>_0) + (p/<m>_0) I) bhat.
// Agrees with log_motor wherever <m>_0 > 0.
inline Multivector log_motor_tabulated(const Multivector& m) {
  Multivector b = m.grade_part(2);
  double m0 = m.scalar_part();
  double s = std::sqrt(-inner_scalar(b, b));
  if (s == 0.0 || m0 == 0.0)
    throw std::domain_error("tabulated motor log needs a rotation part and <m>_0 != 0");
  double p = -wedge(b, b).pseudo_part() / (2.0 * s);
  Multivector bhat = dual_scale({s / (s * s), -p / (s * s)}, b);
  return dual_scale({std::atan(s / m0), p / m0}, bhat);
}

// sqrt(g) = normalized(1 + g) for a normalized motor g.
inline Multivector sqrt_motor(const Multivector& g) {
  Multivector x = Multivector::scalar(g.sig(), 1.0) + g;
  DualNumber n2 = dual_part(x * x.reverse());
  if (n2.s <= 1e-14)
    throw std::domain_error("motor square root undefined at -1");
  return normalize_motor(x);
}

// Motor carrying hyperplane a onto hyperplane b (both normalized).
inline Multivector motor_between(const Multivector& a, const Multivector& b) {
  return sqrt_motor(normalize(b) * normalize(a));
}

// Screw motion around axis line L (normalized, euclidean): rotation by 2t,
// translation 2*t*pitch along the axis.
inline Multivector screw_motor(const Multivector& L, double t, double pitch) {
  Multivector axis = axis_decompose(L).axis;
  return exp_bivector(dual_scale({t, t * pitch}, axis));
}

struct LineProduct {
  double alpha = 0.0;        // angle between the oriented lines, in [0, pi]
  double dist = 0.0;         // mutual distance, >= 0
  double signed_offset = 0;  // v*s0 - p4*u, the oriented distance
  bool parallel = false;
  bool intersecting = false;
  Multivector normal;        // common normal line (unit), when not parallel
  Multivector common_plane;  // span of two intersecting lines
  Multivector common_point;  // meet of two intersecting lines
};

// Full invariant decomposition of the product of two unit euclidean lines:
//   g = O*S = cos(alpha) + (sin(alpha) N + d cos(alpha) N I) + d sin(alpha) I
// up to the orientation of N.
inline LineProduct line_product_decompose(const Multivector& O,
                                          const Multivector& S) {
  Multivector a = normalize(O), b = normalize(S);
  Multivector g = a * b;
  LineProduct r;
  r.common_plane = Multivector(g.sig());
  r.common_point = Multivector(g.sig());
  r.normal = Multivector(g.sig());
  double s0 = g.scalar_part();
  double p4 = g.pseudo_part();
  Multivector B = g.grade_part(2);
  DualNumber sq = bivector_square(B);
  double u = 0.0, v = 0.0;
  if (-sq.s > kClassifyTol) {
    DualNumber n = dual_sqrt({-sq.s, -sq.p});
    u = n.s;
    v = n.p;
    r.normal = dual_scale(dual_inverse(n), B);
  } else {
    r.parallel = true;
    u = 0.0;
    v = 0.0;
  }
  r.alpha = std::atan2(u, s0);
  if (r.parallel) {
    double bnorm = B.max_abs() > 0.0 ? ideal_norm(B) : 0.0;
    r.dist = bnorm / std::abs(s0);
    r.signed_offset = r.dist;
    return r;
  }
  r.signed_offset = v * s0 - p4 * u;
  r.dist = std::abs(r.signed_offset);
  if (std::abs(p4) <= 1e-12 * std::max(1.0, g.max_abs())) {
    r.intersecting = true;
    Multivector e0 = Multivector::blade(g.sig(), 1);
    r.common_plane = join(wedge(a, e0), b);
    r.common_point = wedge(join(wedge(r.normal, e0), a), b);
  }
  return r;
}

// angle row of the line table: alpha = acos(O . S) for unit lines.
inline double angle_between_lines(const Multivector& O, const Multivector& S) {
  double c = inner_scalar(normalize(O), normalize(S));
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c);
}

// distance row of the line table: d = csc(alpha) * (O v S); signed, and
// undefined for parallel lines.
inline double dist_skew_lines(const Multivector& O, const Multivector& S) {
  LineProduct d = line_product_decompose(O, S);
  if (d.parallel)
    throw std::domain_error("parallel lines: the cosecant route is undefined");
  double sa = std::sin(d.alpha);
  return join(normalize(O), normalize(S)).scalar_part() / sa;
}

// Distance between any two lines; dispatches the parallel case to the
// ideal-norm route.
inline double dist_between_lines(const Multivector& O, const Multivector& S) {
  LineProduct d = line_product_decompose(O, S);
  if (!d.parallel) return std::abs(dist_skew_lines(O, S));
  return d.dist;
}

}  // namespace pga
