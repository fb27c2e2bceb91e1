#pragma once

// Constructors and coordinate extractors for the geometric primitives of
// the 2D and 3D degenerate algebras. Hyperplanes are grade 1, points are
// grade gens-1.

#include "pga/algebra.hpp"
#include "pga/norms.hpp"

#include <Eigen/Dense>

namespace pga {

// --- 2D (signature 2,0,1) ---

// Line a*x + b*y + c = 0.
inline Multivector line2(const Signature& sig, double a, double b, double c) {
  Multivector l(sig);
  l[1] = c;  // e0
  l[2] = a;  // e1
  l[4] = b;  // e2
  return l;
}

// Point (x, y) = E0 + x*E1 + y*E2 = e12 + y*e01 - x*e02.
inline Multivector point2(const Signature& sig, double x, double y) {
  Multivector p(sig);
  p[6] = 1.0;  // e12
  p[5] = -x;   // e02
  p[3] = y;    // e01
  return p;
}

inline Multivector ideal_point2(const Signature& sig, double x, double y) {
  Multivector p(sig);
  p[5] = -x;
  p[3] = y;
  return p;
}

inline Eigen::Vector2d point2_coords(const Multivector& p) {
  double w = p[6];
  return {-p[5] / w, p[3] / w};
}

// --- 3D (signature 3,0,1) ---

// Plane a*x + b*y + c*z + d = 0.
inline Multivector plane3(const Signature& sig, double a, double b, double c,
                          double d) {
  Multivector q(sig);
  q[1] = d;  // e0
  q[2] = a;  // e1
  q[4] = b;  // e2
  q[8] = c;  // e3
  return q;
}

// Point (x, y, z) = E0 + x*E1 + y*E2 + z*E3
//                 = e123 - x*e023 + y*e013 - z*e012.
inline Multivector point3(const Signature& sig, double x, double y, double z) {
  Multivector p(sig);
  p[14] = 1.0;  // e123
  p[13] = -x;   // e023
  p[11] = y;    // e013
  p[7] = -z;    // e012
  return p;
}

inline Multivector ideal_point3(const Signature& sig, double x, double y,
                                double z) {
  Multivector p(sig);
  p[13] = -x;
  p[11] = y;
  p[7] = -z;
  return p;
}

inline Eigen::Vector3d point3_coords(const Multivector& p) {
  double w = p[14];
  return {-p[13] / w, p[11] / w, -p[7] / w};
}

inline Eigen::Vector3d ideal_point3_coords(const Multivector& p) {
  return {-p[13], p[11], -p[7]};
}

// Line through (px,py,pz) with direction (vx,vy,vz).
inline Multivector line3(const Signature& sig, double px, double py, double pz,
                         double vx, double vy, double vz) {
  return join(point3(sig, px, py, pz), ideal_point3(sig, vx, vy, vz));
}

// Incidence of a normalized euclidean line and a point: the half-turn about
// the line fixes exactly the points on it.
inline bool point_on_line3(const Multivector& line, const Multivector& point,
                           double tol) {
  Multivector l = normalize(line);
  return approx_equal(sandwich(l, point), point, tol * point.max_abs());
}

}  // namespace pga
