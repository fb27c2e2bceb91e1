#pragma once

// Two norms: the euclidean norm sqrt(|<x xrev>_0|), which vanishes on ideal
// elements, and the ideal norm, the euclidean norm of the dual-map image.
// One-dimensional subspaces (scalars, pseudoscalars, e0-multiples) carry a
// signed numerical value instead.

#include "pga/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace pga {

constexpr double kClassifyTol = 1e-10;

inline double euclidean_norm_raw(const Multivector& x) {
  return std::sqrt(std::abs((x * x.reverse()).scalar_part()));
}

inline bool is_ideal(const Multivector& x, double tol = kClassifyTol) {
  double scale = x.max_abs();
  if (scale == 0.0) return true;
  double n2 = std::abs((x * x.reverse()).scalar_part());
  return n2 <= tol * scale * scale;
}

inline double euclidean_norm(const Multivector& x) {
  double scale = x.max_abs();
  if (scale == 0.0) return 0.0;
  Multivector sq = x * x.reverse();
  double n2 = sq.scalar_part();
  if (std::abs(n2) <= kClassifyTol * scale * scale)
    throw std::domain_error("ideal element has zero euclidean norm; use the ideal norm");
  if (std::abs(sq.pseudo_part()) > kClassifyTol * scale * scale)
    throw std::domain_error("non-simple element has no scalar euclidean norm");
  return std::sqrt(std::abs(n2));
}

inline double ideal_norm(const Multivector& x) {
  return euclidean_norm_raw(dual_map(x));
}

// Signed value of an element of a one-dimensional subspace: scalars,
// pseudoscalars, and grade-1 multiples of e0.
inline double numerical_value(const Multivector& x) {
  double scale = x.max_abs();
  if (scale == 0.0) return 0.0;
  double tol = 1e-12 * scale;
  uint32_t ideal_plane = 1;  // e0
  bool pure_scalar = true, pure_pseudo = true, pure_e0 = true;
  for (int i = 0; i < x.dim(); ++i) {
    if (std::abs(x[i]) <= tol) continue;
    if (i != 0) pure_scalar = false;
    if (i != x.dim() - 1) pure_pseudo = false;
    if (static_cast<uint32_t>(i) != ideal_plane) pure_e0 = false;
  }
  if (pure_scalar) return x.scalar_part();
  if (pure_pseudo) return x.pseudo_part();
  if (pure_e0) return x[ideal_plane];
  throw std::invalid_argument("element has no one-dimensional numerical value");
}

inline bool is_homogeneous(const Multivector& x, int* grade_out = nullptr,
                           double tol_factor = 1e-12) {
  double tol = tol_factor * x.max_abs();
  int found = -1;
  for (int i = 0; i < x.dim(); ++i) {
    if (std::abs(x[i]) <= tol) continue;
    int g = grade_of(i);
    if (found == -1) found = g;
    else if (found != g) return false;
  }
  if (found == -1) return false;
  if (grade_out) *grade_out = found;
  return true;
}

// Weight coefficient of a point-like element (grade = gens-1): the
// coefficient of the origin blade e12 / e123.
inline double point_weight(const Multivector& x) {
  if (x.sig().gens() == 3) return x[6];
  if (x.sig().gens() == 4) return x[14];
  throw std::invalid_argument("point weight needs a 3- or 4-generator algebra");
}

// Normalize a homogeneous element: euclidean ones to unit euclidean norm
// (points additionally flipped to positive weight), ideal ones to unit
// ideal norm.
inline Multivector normalize(const Multivector& x) {
  int grade = -1;
  if (!is_homogeneous(x, &grade))
    throw std::invalid_argument("normalize expects a homogeneous element");
  if (!is_ideal(x)) {
    Multivector u = x * (1.0 / euclidean_norm(x));
    if (grade == x.sig().gens() - 1 && point_weight(u) < 0.0) u = -u;
    return u;
  }
  double n = ideal_norm(x);
  if (n == 0.0) throw std::invalid_argument("cannot normalize zero");
  return x * (1.0 / n);
}

}  // namespace pga
