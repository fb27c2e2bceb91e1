#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pga/algebra.hpp"
#include "pga/dual.hpp"
#include "pga/entities.hpp"
#include "pga/motors.hpp"
#include "pga/norms.hpp"

#include <array>
#include <cmath>
#include <random>

using namespace pga;

namespace {

std::mt19937_64 rng(20240811);

double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng);
}

Multivector random_unit_line3(const Signature& sig) {
  for (;;) {
    Multivector L = line3(sig, uniform(-3, 3), uniform(-3, 3), uniform(-3, 3),
                          uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
    if (euclidean_norm_raw(L) > 0.2) return normalize(L);
  }
}

}  // namespace

TEST_CASE("planar rotor turns points clockwise by twice the parameter") {
  Signature d2 = Signature::d201();
  // exp(w E0) with E0 the unit origin: (1,0) lands on (cos 2w, -sin 2w)
  for (double w : {0.1, 0.7, 1.3, -0.4}) {
    Multivector g = exp_bivector(point2(d2, 0, 0) * w);
    Multivector img = sandwich(g, point2(d2, 1, 0));
    Eigen::Vector2d xy = point2_coords(img);
    double x = xy.x(), y = xy.y();
    CHECK(x == doctest::Approx(std::cos(2 * w)).epsilon(1e-12));
    CHECK(y == doctest::Approx(-std::sin(2 * w)).epsilon(1e-12));
  }
  // around an arbitrary center the center itself is fixed
  Multivector C = point2(d2, 2, -1);
  Multivector g = exp_bivector(C * 0.3);
  CHECK(approx_equal(normalize(sandwich(g, C)), C, 1e-12));
}

TEST_CASE("planar translator moves perpendicular to its ideal point") {
  Signature d2 = Signature::d201();
  // 1 + t*(ideal x) translates by 2t in +y
  double t = 0.8;
  Multivector T = Multivector::scalar(d2, 1.0) + ideal_point2(d2, 1, 0) * t;
  Multivector img = sandwich(T, point2(d2, 3, 4));
  Eigen::Vector2d xy = point2_coords(img);
  double x = xy.x(), y = xy.y();
  CHECK(x == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(y == doctest::Approx(4.0 + 2 * t).epsilon(1e-14));
  // exp of an ideal bivector is 1 + B
  CHECK(approx_equal(exp_bivector(ideal_point2(d2, 1, 0) * t), T, 0.0));
}

TEST_CASE("spatial rotor about the z axis") {
  Signature d3 = Signature::d301();
  Multivector zaxis = line3(d3, 0, 0, 0, 0, 0, 1);
  CHECK(approx_equal(zaxis, Multivector::blade(d3, 6), 1e-14));
  for (double w : {0.25, 1.1}) {
    Multivector g = exp_bivector(zaxis * w);
    Multivector img = sandwich(g, point3(d3, 1, 0, 0.5));
    Eigen::Vector3d xyz = point3_coords(img);
    double x = xyz.x(), y = xyz.y(), z = xyz.z();
    CHECK(x == doctest::Approx(std::cos(2 * w)).epsilon(1e-12));
    CHECK(y == doctest::Approx(-std::sin(2 * w)).epsilon(1e-12));
    CHECK(z == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("spatial translator built from the origin and a direction") {
  Signature d3 = Signature::d301();
  // 1 + t * join(origin, V) * I translates by 2t along V for unit V
  Multivector origin = point3(d3, 0, 0, 0);
  Multivector V = ideal_point3(d3, 0, 0, 1);
  double t = 0.35;
  Multivector T = Multivector::scalar(d3, 1.0) +
                  join(origin, V) * Multivector::pseudoscalar(d3) * t;
  Multivector img = sandwich(T, point3(d3, 1, 2, 3));
  Eigen::Vector3d xyz = point3_coords(img);
  double x = xyz.x(), y = xyz.y(), z = xyz.z();
  CHECK(x == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(y == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(z == doctest::Approx(3.0 + 2 * t).epsilon(1e-14));
}

TEST_CASE("axis decomposition of a screw bivector") {
  Signature d3 = Signature::d301();
  Multivector B = Multivector::blade(d3, 6) + Multivector::blade(d3, 9);  // e12 + e03
  AxisDecomposition ax = axis_decompose(B);
  CHECK(ax.norm.s == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ax.norm.p == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(approx_equal(ax.axis, Multivector::blade(d3, 6), 1e-14));
  CHECK(approx_equal(ax.axis_perp, Multivector::blade(d3, 9, -1.0), 1e-14));
  CHECK(approx_equal(dual_scale(ax.norm, ax.axis), B, 1e-14));
  CHECK((ax.axis * ax.axis).scalar_part() == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK_THROWS_AS(axis_decompose(Multivector::blade(d3, 3)), std::domain_error);
}

TEST_CASE("axis reconstruction for random screw bivectors") {
  Signature d3 = Signature::d301();
  for (int t = 0; t < 100; ++t) {
    Multivector axis = axis_decompose(random_unit_line3(d3)).axis;
    DualNumber n{uniform(0.05, 3.0), uniform(-2.0, 2.0)};
    Multivector B = dual_scale(n, axis);
    AxisDecomposition ax = axis_decompose(B);
    CHECK(ax.norm.s == doctest::Approx(n.s).epsilon(1e-10));
    CHECK(ax.norm.p == doctest::Approx(n.p).epsilon(1e-9));
    CHECK(approx_equal(dual_scale(ax.norm, ax.axis), B, 1e-10));
  }
}

TEST_CASE("exp and log are mutually inverse on the principal branch") {
  Signature d3 = Signature::d301();
  for (int t = 0; t < 200; ++t) {
    Multivector axis = axis_decompose(random_unit_line3(d3)).axis;
    double u = uniform(0.01, M_PI - 0.01);
    double v = uniform(-2.0, 2.0);
    Multivector B = dual_scale({u, v}, axis);
    Multivector g = exp_bivector(B);
    DualNumber gn = dual_part(g * g.reverse());
    CHECK(gn.s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(gn.p) < 1e-12);
    CHECK(approx_equal(log_motor(g), B, 1e-10));
  }
}

TEST_CASE("log reconstructs motors exactly, including negated ones") {
  Signature d3 = Signature::d301();
  for (int t = 0; t < 100; ++t) {
    Multivector axis = axis_decompose(random_unit_line3(d3)).axis;
    Multivector g = exp_bivector(dual_scale({uniform(0.01, 3.1), uniform(-2, 2)}, axis));
    if (t % 2) g = -g;
    CHECK(approx_equal(exp_bivector(log_motor(g)), g, 1e-10));
  }
}

TEST_CASE("translator logarithm") {
  Signature d3 = Signature::d301();
  Multivector B = Multivector::blade(d3, 3, 0.7) + Multivector::blade(d3, 9, -0.2);
  Multivector g = exp_bivector(B);
  CHECK(approx_equal(g, Multivector::scalar(d3, 1.0) + B, 0.0));
  CHECK(approx_equal(log_motor(g), B, 1e-14));
  CHECK(approx_equal(log_motor(-g), B, 1e-14));  // normalization flips the sign back
  CHECK(log_motor(Multivector::scalar(d3, 2.5)).is_zero());
  CHECK_THROWS_AS(log_motor(Multivector::scalar(d3, -1.0)), std::domain_error);
}

TEST_CASE("tabulated log agrees with the principal log when the scalar part is positive") {
  Signature d3 = Signature::d301();
  for (int t = 0; t < 100; ++t) {
    Multivector axis = axis_decompose(random_unit_line3(d3)).axis;
    double u = uniform(0.05, M_PI / 2 - 0.05);
    Multivector B = dual_scale({u, uniform(-1.5, 1.5)}, axis);
    Multivector g = exp_bivector(B);
    CHECK(approx_equal(log_motor_tabulated(g), log_motor(g), 1e-9));
  }
  CHECK_THROWS_AS(log_motor_tabulated(Multivector::scalar(d3, 1.0)), std::domain_error);
}

TEST_CASE("motor square root") {
  Signature d3 = Signature::d301();
  for (int t = 0; t < 100; ++t) {
    Multivector axis = axis_decompose(random_unit_line3(d3)).axis;
    Multivector g = exp_bivector(dual_scale({uniform(0.01, 3.1), uniform(-2, 2)}, axis));
    Multivector r = sqrt_motor(g);
    CHECK(approx_equal(r * r, g, 1e-12));
  }
  Multivector half_turn = exp_bivector(Multivector::blade(d3, 6, M_PI / 2));
  CHECK_THROWS_AS(sqrt_motor(half_turn * half_turn), std::domain_error);
}

TEST_CASE("motor between two planes maps the first onto the second") {
  Signature d3 = Signature::d301();
  for (int t = 0; t < 50; ++t) {
    Multivector a = plane3(d3, uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-2, 2));
    Multivector b = plane3(d3, uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-2, 2));
    if (euclidean_norm_raw(a) < 0.3 || euclidean_norm_raw(b) < 0.3) continue;
    Multivector g = motor_between(a, b);
    CHECK(approx_equal(sandwich(g, normalize(a)), normalize(b), 1e-10));
  }
}

TEST_CASE("screw motion around the z axis with pitch") {
  Signature d3 = Signature::d301();
  Multivector zaxis = line3(d3, 0, 0, 0, 0, 0, 1);
  double t = 0.6, p = 0.25;
  Multivector g = screw_motor(zaxis, t, p);
  Multivector img = sandwich(g, point3(d3, 1, 0, 0));
  Eigen::Vector3d xyz = point3_coords(img);
  double x = xyz.x(), y = xyz.y(), z = xyz.z();
  CHECK(x == doctest::Approx(std::cos(2 * t)).epsilon(1e-12));
  CHECK(y == doctest::Approx(-std::sin(2 * t)).epsilon(1e-12));
  CHECK(z == doctest::Approx(2 * t * p).epsilon(1e-12));
}

TEST_CASE("screw motors factor into commuting rotation and translation") {
  Signature d3 = Signature::d301();
  for (int k = 0; k < 100; ++k) {
    Multivector L = random_unit_line3(d3);
    double t = uniform(0.01, 1.5), p = uniform(-2.0, 2.0);
    Multivector g = screw_motor(L, t, p);
    Multivector axis = axis_decompose(L).axis;
    Multivector rot = exp_bivector(axis * t);
    Multivector tra = exp_bivector(polar(axis) * (t * p));
    CHECK(approx_equal(g, rot * tra, 1e-12));
    CHECK(approx_equal(g, tra * rot, 1e-12));
  }
}

TEST_CASE("line product decomposition on a known skew pair") {
  Signature d3 = Signature::d301();
  // the z axis against the line {(s, 1, 1)}: perpendicular, distance 1
  Multivector O = line3(d3, 0, 0, 0, 0, 0, 1);
  Multivector S = line3(d3, 0, 1, 1, 1, 0, 0);
  LineProduct d = line_product_decompose(O, S);
  CHECK(d.alpha == doctest::Approx(M_PI / 2).epsilon(1e-14));
  CHECK(d.dist == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(!d.parallel);
  CHECK(!d.intersecting);
  // the common normal joins (0,0,1) to (0,1,1)
  Multivector N = d.normal;
  CHECK((N * N).scalar_part() == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(std::abs(wedge(N, O).pseudo_part()) < 1e-13);
  CHECK(std::abs(wedge(N, S).pseudo_part()) < 1e-13);
  CHECK(dist_between_lines(O, S) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("line product reconstruction identity") {
  Signature d3 = Signature::d301();
  for (int k = 0; k < 100; ++k) {
    Multivector O = random_unit_line3(d3);
    Multivector S = random_unit_line3(d3);
    LineProduct d = line_product_decompose(O, S);
    if (d.parallel) continue;
    double ca = std::cos(d.alpha), sa = std::sin(d.alpha);
    Multivector g = O * S;
    Multivector recon = Multivector::scalar(d3, ca) +
                        dual_scale({sa, d.signed_offset * ca}, d.normal) +
                        Multivector::pseudoscalar(d3, -d.signed_offset * sa);
    CHECK(approx_equal(recon, g, 1e-10));
    // the cosecant distance route carries the opposite orientation
    CHECK(dist_skew_lines(O, S) == doctest::Approx(-d.signed_offset).epsilon(1e-9));
  }
}

TEST_CASE("parallel and intersecting line pairs") {
  Signature d3 = Signature::d301();
  Multivector a = line3(d3, 0, 0, 0, 1, 0, 0);
  Multivector b = line3(d3, 0, 3, 4, 1, 0, 0);
  LineProduct par = line_product_decompose(a, b);
  CHECK(par.parallel);
  CHECK(par.dist == doctest::Approx(5.0).epsilon(1e-13));
  CHECK(dist_between_lines(a, b) == doctest::Approx(5.0).epsilon(1e-13));
  CHECK_THROWS_AS(dist_skew_lines(a, b), std::domain_error);
  LineProduct anti = line_product_decompose(a, -b);
  CHECK(anti.parallel);
  CHECK(anti.dist == doctest::Approx(5.0).epsilon(1e-13));

  // two lines through (1, 2, 3)
  Multivector u = line3(d3, 1, 2, 3, 1, 0, 0);
  Multivector v = line3(d3, 1, 2, 3, 1, 1, 0);
  LineProduct inter = line_product_decompose(u, v);
  CHECK(inter.intersecting);
  // oriented-line angle: unit lines square to -1, so directions at pi/4
  // decompose with alpha = pi - pi/4
  CHECK(inter.alpha == doctest::Approx(3 * M_PI / 4).epsilon(1e-12));
  CHECK(inter.dist < 1e-12);
  Eigen::Vector3d xyz = point3_coords(normalize(inter.common_point));
  double x = xyz.x(), y = xyz.y(), z = xyz.z();
  CHECK(x == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(y == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(z == doctest::Approx(3.0).epsilon(1e-10));
  // both lines lie in the common plane
  CHECK(wedge(inter.common_plane, u).max_abs() <
        1e-10 * inter.common_plane.max_abs() * u.max_abs());
  CHECK(wedge(inter.common_plane, v).max_abs() <
        1e-10 * inter.common_plane.max_abs() * v.max_abs());
}

TEST_CASE("angle between lines handles the identical case") {
  Signature d3 = Signature::d301();
  Multivector L = random_unit_line3(d3);
  // a unit line squares to -1, so the inner product of a line with itself is -1
  CHECK(angle_between_lines(L, L) == doctest::Approx(M_PI).epsilon(1e-12));
  CHECK(angle_between_lines(L, -L) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("planar motors: log dispatches between rotors and translators") {
  Signature d2 = Signature::d201();
  Multivector P = normalize(point2(d2, 1.5, -0.5));
  Multivector g = exp_bivector(P * 0.8);
  CHECK(approx_equal(log_motor(g), P * 0.8, 1e-12));
  Multivector T = exp_bivector(ideal_point2(d2, 0.3, -0.7));
  CHECK(approx_equal(log_motor(T), ideal_point2(d2, 0.3, -0.7), 1e-13));
}
