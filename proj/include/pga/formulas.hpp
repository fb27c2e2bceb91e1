#pragma once

// The geometric formula catalog: constructions, measures, and motor
// factories for the planar and spatial algebras.
//
// Conventions:
//  - constructive rows (meet, join, projection, perpendicular) take their
//    arguments as given and return homogeneous results;
//  - metric rows (angles, distances, areas, volumes) normalize their
//    arguments first;
//  - signed measures follow the right-handed orientation: counterclockwise
//    loops and outward-oriented meshes come out positive.

#include "pga/algebra.hpp"
#include "pga/entities.hpp"
#include "pga/motors.hpp"
#include "pga/norms.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pga {

namespace detail {

inline double clamp_unit(double x) {
  return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x);
}

inline void require_gens(const Multivector& x, int gens, const char* what) {
  if (x.sig().gens() != gens) throw std::invalid_argument(what);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Constructions, any dimension
// ---------------------------------------------------------------------------

// a ^ b: intersection of two hyperplanes.
inline Multivector meet(const Multivector& a, const Multivector& b) {
  return wedge(a, b);
}

inline Multivector meet(const Multivector& a, const Multivector& b,
                        const Multivector& c) {
  return wedge(wedge(a, b), c);
}

// P v Q: the flat spanned by two entities.
inline Multivector join3(const Multivector& P, const Multivector& Q,
                         const Multivector& R) {
  return join(join(P, Q), R);
}

// P . a, the perpendicular through P: line in 2D, plane-or-line in 3D
// depending on the grades involved.
inline Multivector perpendicular_through(const Multivector& P,
                                         const Multivector& a) {
  return inner(P, a);
}

// (P . a) a: orthogonal projection of P onto a.
inline Multivector project_onto(const Multivector& P, const Multivector& a) {
  return inner(P, a) * a;
}

// (P . a) P: the entity parallel to a passing through P.
inline Multivector parallel_through(const Multivector& P,
                                    const Multivector& a) {
  return inner(P, a) * P;
}

// a X a with a normalized: reflection of X in the hyperplane a.
inline Multivector reflect_in(const Multivector& a, const Multivector& X) {
  return sandwich(normalize(a), X);
}

// ---------------------------------------------------------------------------
// Angles and distances
// ---------------------------------------------------------------------------

// Angle between two hyperplanes (lines in 2D, planes in 3D).
inline double angle_hyperplanes(const Multivector& a, const Multivector& b) {
  return std::acos(
      detail::clamp_unit(inner_scalar(normalize(a), normalize(b))));
}

// Distance between parallel hyperplanes: the meet is ideal, measure it there.
inline double dist_parallel_hyperplanes(const Multivector& a,
                                        const Multivector& b) {
  return ideal_norm(wedge(normalize(a), normalize(b)));
}

// Angle between an ideal point (direction) and a hyperplane.
inline double angle_direction_hyperplane(const Multivector& V,
                                         const Multivector& a) {
  return std::asin(
      detail::clamp_unit(ideal_norm(wedge(normalize(a), normalize(V)))));
}

// Distance between two euclidean points, by the join route.
inline double dist_points(const Multivector& P, const Multivector& Q) {
  return euclidean_norm(join(normalize(P), normalize(Q)));
}

// Same distance by the commutator route: P x Q is ideal.
inline double dist_points_ideal(const Multivector& P, const Multivector& Q) {
  return ideal_norm(commutator(normalize(P), normalize(Q)));
}

// Oriented distance from point P to hyperplane a: the signed weight of
// a ^ P, positive on the side the orientation of a points to.
inline double oriented_dist_point_hyperplane(const Multivector& P,
                                             const Multivector& a) {
  return numerical_value(wedge(normalize(a), normalize(P)));
}

// ---------------------------------------------------------------------------
// Planar measures (three generators)
// ---------------------------------------------------------------------------

// Signed triangle area, counterclockwise positive: (A v B v C) / 2.
inline double triangle_area(const Multivector& A, const Multivector& B,
                            const Multivector& C) {
  detail::require_gens(A, 3, "triangle_area needs the planar algebra");
  return 0.5 *
         join3(normalize(A), normalize(B), normalize(C)).scalar_part();
}

// Perimeter of the closed polygon P0 P1 ... Pn-1.
inline double loop_length(const std::vector<Multivector>& pts) {
  if (pts.size() < 2) return 0.0;
  double total = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    total += dist_points(pts[i], pts[(i + 1) % pts.size()]);
  return total;
}

// Signed area of the closed polygon, by accumulating edge joins; the
// euclidean parts cancel around a loop and the ideal weight that remains
// is twice the area.
inline double loop_area(const std::vector<Multivector>& pts) {
  if (pts.empty()) return 0.0;
  detail::require_gens(pts[0], 3, "loop_area needs the planar algebra");
  Multivector total(pts[0].sig());
  for (size_t i = 0; i < pts.size(); ++i)
    total += join(normalize(pts[i]), normalize(pts[(i + 1) % pts.size()]));
  return 0.5 * numerical_value(total);
}

// ---------------------------------------------------------------------------
// Planar motors
// ---------------------------------------------------------------------------

// Rotation by alpha around the euclidean point P. With a positive point
// weight the turn is clockwise; orient P the other way for counterclockwise.
inline Multivector rotor_about_point(const Multivector& P, double alpha) {
  detail::require_gens(P, 3, "rotor_about_point needs the planar algebra");
  return exp_bivector(normalize(P) * (0.5 * alpha));
}

// Translation by distance d perpendicular to the direction V (a quarter
// turn counterclockwise from V).
inline Multivector translator_perp(const Multivector& V, double d) {
  detail::require_gens(V, 3, "translator_perp needs the planar algebra");
  return Multivector::scalar(V.sig(), 1.0) + normalize(V) * (0.5 * d);
}

// ---------------------------------------------------------------------------
// Spatial measures (four generators)
// ---------------------------------------------------------------------------

// Signed tetrahedron volume, right-handed positive: (A v B v C v D) / 6.
inline double tetra_volume(const Multivector& A, const Multivector& B,
                           const Multivector& C, const Multivector& D) {
  detail::require_gens(A, 4, "tetra_volume needs the spatial algebra");
  return join(join3(normalize(A), normalize(B), normalize(C)), normalize(D))
             .scalar_part() /
         6.0;
}

// Unsigned triangle area in space: |A v B v C| / 2.
inline double triangle_area3(const Multivector& A, const Multivector& B,
                             const Multivector& C) {
  detail::require_gens(A, 4, "triangle_area3 needs the spatial algebra");
  return 0.5 *
         euclidean_norm(join3(normalize(A), normalize(B), normalize(C)));
}

struct Triangle {
  Multivector a, b, c;
};

inline double mesh_area(const std::vector<Triangle>& tris) {
  double total = 0.0;
  for (const Triangle& t : tris) total += triangle_area3(t.a, t.b, t.c);
  return total;
}

// Volume enclosed by a closed triangle mesh, positive when the triangles
// wind counterclockwise seen from outside. The accumulated face planes
// keep only an ideal part whose weight is -6 times the volume.
inline double mesh_volume(const std::vector<Triangle>& tris) {
  if (tris.empty()) return 0.0;
  detail::require_gens(tris[0].a, 4, "mesh_volume needs the spatial algebra");
  Multivector total(tris[0].a.sig());
  for (const Triangle& t : tris)
    total += join3(normalize(t.a), normalize(t.b), normalize(t.c));
  return -numerical_value(total) / 6.0;
}

// ---------------------------------------------------------------------------
// Spatial motors
// ---------------------------------------------------------------------------

// Rotation by alpha around the euclidean line L; with the axis oriented
// along +L the turn is clockwise seen from the tip of L.
inline Multivector rotor_about_line(const Multivector& L, double alpha) {
  detail::require_gens(L, 4, "rotor_about_line needs the spatial algebra");
  return exp_bivector(axis_decompose(L).axis * (0.5 * alpha));
}

// Translation by distance d along the direction V.
inline Multivector translator_along(const Multivector& V, double d) {
  detail::require_gens(V, 4, "translator_along needs the spatial algebra");
  Signature sig = V.sig();
  Multivector origin = Multivector::blade(sig, 14);  // unit point
  Multivector gen = join(origin, normalize(V)) * Multivector::pseudoscalar(sig);
  return Multivector::scalar(sig, 1.0) + gen * (0.5 * d);
}

// Common normal line of two non-parallel lines: the normalized commutator.
inline Multivector common_normal(const Multivector& L1, const Multivector& L2) {
  Multivector c = commutator(normalize(L1), normalize(L2));
  if (c.max_abs() == 0.0)
    throw std::domain_error("identical lines have no common normal");
  return axis_decompose(c).axis;
}

// Line through point P perpendicular to line L: join the foot of the
// perpendicular with P.
inline Multivector perp_line_point_line(const Multivector& P,
                                        const Multivector& L) {
  return join(project_onto(P, L), P);
}

}  // namespace pga
