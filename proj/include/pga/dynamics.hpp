#pragma once

// Rigid body dynamics in the spatial algebra. A body is a set of point
// masses; its inertia enters as the Gram matrix of half-velocity fields,
// so kinetic energy is 2 * w' A w and the classical angular velocity
// vector is -2 times the rotational coordinates.

#include "pga/algebra.hpp"
#include "pga/entities.hpp"
#include "pga/motors.hpp"
#include "pga/norms.hpp"

#include <Eigen/Dense>
#include <array>
#include <cstdio>
#include <functional>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pga {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

// Bivector coordinates in the order [e01, e02, e03, e23, e31, e12];
// the first three are the ideal (translational) part.
inline Vector6d bivector_coords(const Multivector& B) {
  Vector6d w;
  w << B[3], B[5], B[9], B[12], -B[10], B[6];
  return w;
}

inline Multivector bivector_from_coords(const Signature& sig, const Vector6d& w) {
  Multivector B(sig);
  B[3] = w(0);
  B[5] = w(1);
  B[9] = w(2);
  B[12] = w(3);
  B[10] = -w(4);
  B[6] = w(5);
  return B;
}

// Pairing matrix: w1' W w2 is the pseudoscalar weight of B1 ^ B2.
inline Matrix6d pairing_matrix() {
  Matrix6d W = Matrix6d::Zero();
  W.block<3, 3>(0, 3).setIdentity();
  W.block<3, 3>(3, 0).setIdentity();
  return W;
}

// Commutator of two bivectors in coordinates: with X = (t1, r1), Y = (t2, r2),
//   [X, Y]_t = r2 x t1 - r1 x t2,   [X, Y]_r = -(r1 x r2).
inline Vector6d commutator_coords(const Vector6d& x, const Vector6d& y) {
  Eigen::Vector3d t1 = x.head<3>(), r1 = x.tail<3>();
  Eigen::Vector3d t2 = y.head<3>(), r2 = y.tail<3>();
  Vector6d out;
  out.head<3>() = r2.cross(t1) - r1.cross(t2);
  out.tail<3>() = -r1.cross(r2);
  return out;
}

struct PointMass {
  double mass = 0.0;
  Eigen::Vector3d pos = Eigen::Vector3d::Zero();
};

struct RigidBody {
  Signature sig = Signature::d301();
  std::vector<PointMass> masses;
  Matrix6d A = Matrix6d::Zero();
  Matrix6d Ainv = Matrix6d::Zero();
  double total_mass = 0.0;
};

// Half-velocity of the unit point R under the bivector generator B, as a
// direction vector.
inline Eigen::Vector3d half_velocity(const Multivector& B, const Multivector& R) {
  return ideal_point3_coords(commutator(B, R));
}

inline RigidBody build_body(const std::vector<PointMass>& masses) {
  RigidBody body;
  body.masses = masses;
  Signature sig = body.sig;
  std::array<Multivector, 6> gen = {
      Multivector::blade(sig, 3),        // e01
      Multivector::blade(sig, 5),        // e02
      Multivector::blade(sig, 9),        // e03
      Multivector::blade(sig, 12),       // e23
      Multivector::blade(sig, 10, -1.0), // e31
      Multivector::blade(sig, 6),        // e12
  };
  for (const PointMass& pm : masses) {
    body.total_mass += pm.mass;
    Multivector R = point3(sig, pm.pos.x(), pm.pos.y(), pm.pos.z());
    std::array<Eigen::Vector3d, 6> vel;
    for (int j = 0; j < 6; ++j) vel[j] = half_velocity(gen[j], R);
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        body.A(j, k) += pm.mass * vel[j].dot(vel[k]);
  }
  if (body.A.determinant() == 0.0)
    throw std::invalid_argument("degenerate mass distribution");
  body.Ainv = body.A.inverse();
  return body;
}

// Momentum coordinates pi = W A w; the momentum bivector pairs against
// velocities through the wedge.
inline Vector6d momentum_coords(const RigidBody& body, const Vector6d& w) {
  return pairing_matrix() * (body.A * w);
}

inline Multivector momentum_body(const RigidBody& body, const Multivector& omega) {
  return bivector_from_coords(omega.sig(),
                              momentum_coords(body, bivector_coords(omega)));
}

// Energy in the normalization E = w' A w (half the classical kinetic energy).
inline double energy(const RigidBody& body, const Vector6d& w) {
  return w.dot(body.A * w);
}

struct SimState {
  Multivector g;  // body-to-space motor
  Vector6d w;     // body-frame velocity bivector coordinates
  SimState()
      : g(Multivector::scalar(Signature::d301(), 1.0)), w(Vector6d::Zero()) {}
};

// Body-frame force as a bivector, possibly time dependent.
using ForceFunc = std::function<Multivector(double)>;

struct SimDeriv {
  Multivector gdot;
  Vector6d wdot;
  SimDeriv() : gdot(Signature::d301()), wdot(Vector6d::Zero()) {}
};

// Equations of motion: gdot = g Omega, and
//   wdot = Ainv W (2 [pi, w] - phi)
// with pi the momentum coordinates and phi the force coordinates. A free
// body keeps E and the space momentum g Pi g~ exactly constant in
// continuous time; under a force, dE/dt = -2 (Phi v Omega).
inline SimDeriv derivative(const RigidBody& body, const SimState& s, double t,
                           const ForceFunc& force) {
  SimDeriv d;
  Multivector omega = bivector_from_coords(s.g.sig(), s.w);
  d.gdot = s.g * omega;
  Vector6d pi = momentum_coords(body, s.w);
  Vector6d rhs = 2.0 * commutator_coords(pi, s.w);
  if (force) rhs -= bivector_coords(force(t));
  d.wdot = body.Ainv * (pairing_matrix() * rhs);
  return d;
}

inline SimState rk4_step(const RigidBody& body, const SimState& s, double t,
                         double dt, const ForceFunc& force) {
  auto advance = [&](const SimState& base, const SimDeriv& d, double h) {
    SimState out;
    out.g = base.g + d.gdot * h;
    out.w = base.w + d.wdot * h;
    return out;
  };
  SimDeriv k1 = derivative(body, s, t, force);
  SimDeriv k2 = derivative(body, advance(s, k1, dt / 2), t + dt / 2, force);
  SimDeriv k3 = derivative(body, advance(s, k2, dt / 2), t + dt / 2, force);
  SimDeriv k4 = derivative(body, advance(s, k3, dt), t + dt, force);
  SimState out;
  out.g = s.g + (k1.gdot + (k2.gdot + k3.gdot) * 2.0 + k4.gdot) * (dt / 6.0);
  out.w = s.w + (k1.wdot + (k2.wdot + k3.wdot) * 2.0 + k4.wdot) * (dt / 6.0);
  out.g = normalize_motor(out.g);
  return out;
}

// Motor coefficients in CSV column order [1, e01, e02, e03, e23, e31, e12, e0123].
inline std::array<double, 8> motor_coeffs(const Multivector& g) {
  return {g[0], g[3], g[5], g[9], g[12], -g[10], g[6], g[15]};
}

struct SimRow {
  double t = 0.0;
  std::array<double, 8> motor{};
  Vector6d w = Vector6d::Zero();
  double energy = 0.0;
  Vector6d space_momentum = Vector6d::Zero();
};

inline SimRow make_row(const RigidBody& body, const SimState& s, double t) {
  SimRow row;
  row.t = t;
  row.motor = motor_coeffs(s.g);
  row.w = s.w;
  row.energy = energy(body, s.w);
  Multivector pi_body = momentum_body(body, bivector_from_coords(s.g.sig(), s.w));
  row.space_momentum = bivector_coords(sandwich(s.g, pi_body));
  return row;
}

inline std::vector<SimRow> simulate(const RigidBody& body, const SimState& init,
                                    double dt, int steps,
                                    const ForceFunc& force = nullptr) {
  std::vector<SimRow> rows;
  rows.reserve(steps + 1);
  SimState s = init;
  rows.push_back(make_row(body, s, 0.0));
  for (int i = 0; i < steps; ++i) {
    s = rk4_step(body, s, i * dt, dt, force);
    rows.push_back(make_row(body, s, (i + 1) * dt));
  }
  return rows;
}

inline std::string csv_header() {
  return "t,g1,ge01,ge02,ge03,ge23,ge31,ge12,ge0123,"
         "we01,we02,we03,we23,we31,we12,E,"
         "pe01,pe02,pe03,pe23,pe31,pe12";
}

inline std::string csv_line(const SimRow& row) {
  char buf[64];
  std::string out;
  auto push = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    if (!out.empty()) out += ',';
    out += buf;
  };
  push(row.t);
  for (double c : row.motor) push(c);
  for (int i = 0; i < 6; ++i) push(row.w(i));
  push(row.energy);
  for (int i = 0; i < 6; ++i) push(row.space_momentum(i));
  return out;
}

// Body file: one point mass per line, "mass x y z"; '#' starts a comment.
inline std::vector<PointMass> parse_body_file(std::istream& in) {
  std::vector<PointMass> masses;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double m, x, y, z;
    if (!(ss >> m)) continue;  // blank or comment-only line
    if (!(ss >> x >> y >> z))
      throw std::invalid_argument("body file line " + std::to_string(lineno) +
                                  ": expected \"mass x y z\"");
    std::string extra;
    if (ss >> extra)
      throw std::invalid_argument("body file line " + std::to_string(lineno) +
                                  ": trailing fields");
    if (m <= 0.0)
      throw std::invalid_argument("body file line " + std::to_string(lineno) +
                                  ": mass must be positive");
    masses.push_back({m, {x, y, z}});
  }
  if (masses.empty()) throw std::invalid_argument("body file has no masses");
  return masses;
}

}  // namespace pga
