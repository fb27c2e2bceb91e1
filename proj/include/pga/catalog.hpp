#pragma once

// Name-indexed registry over the formula catalog, used by the command line
// front end. Each entry dispatches to the functions in formulas.hpp or
// motors.hpp and reports whether it produced a scalar or a multivector.

#include "pga/formulas.hpp"
#include "pga/motors.hpp"

#include <functional>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace pga {

struct FormulaResult {
  bool is_scalar = false;
  double value = 0.0;
  Multivector mv;
  FormulaResult() : mv(Signature::d201()) {}
  explicit FormulaResult(double v) : is_scalar(true), value(v), mv(Signature::d201()) {}
  explicit FormulaResult(const Multivector& m) : mv(m) {}
};

struct FormulaSpec {
  std::string name;     // registry key, kebab-case
  std::string args;     // argument synopsis for --help style listings
  std::string summary;
  int gens = 0;         // 0: any algebra, 3: planar only, 4: spatial only
  int mv_arity = 0;     // -1: variadic list of points
  int num_scalars = 0;  // trailing scalar arguments
  bool needs_mesh = false;
  std::function<FormulaResult(const std::vector<Multivector>&,
                              const std::vector<double>&,
                              const std::vector<Triangle>&)>
      fn;
};

inline const std::vector<FormulaSpec>& formula_catalog() {
  using MV = std::vector<Multivector>;
  using SC = std::vector<double>;
  using TR = std::vector<Triangle>;
  static const std::vector<FormulaSpec> catalog = {
      {"meet", "a b", "intersection of two hyperplanes", 0, 2, 0, false,
       [](const MV& m, const SC&, const TR&) { return FormulaResult(meet(m[0], m[1])); }},
      {"meet3", "a b c", "common point of three planes", 4, 3, 0, false,
       [](const MV& m, const SC&, const TR&) { return FormulaResult(meet(m[0], m[1], m[2])); }},
      {"join", "P Q", "flat spanned by two entities", 0, 2, 0, false,
       [](const MV& m, const SC&, const TR&) { return FormulaResult(join(m[0], m[1])); }},
      {"join3", "P Q R", "plane spanned by three points", 4, 3, 0, false,
       [](const MV& m, const SC&, const TR&) { return FormulaResult(join3(m[0], m[1], m[2])); }},
      {"perp-through", "P a", "perpendicular to a through P", 0, 2, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(perpendicular_through(m[0], m[1]));
       }},
      {"project", "P a", "orthogonal projection of P onto a", 0, 2, 0, false,
       [](const MV& m, const SC&, const TR&) { return FormulaResult(project_onto(m[0], m[1])); }},
      {"parallel-through", "P a", "entity parallel to a through P", 0, 2, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(parallel_through(m[0], m[1]));
       }},
      {"reflect", "a X", "reflection of X in the hyperplane a", 0, 2, 0, false,
       [](const MV& m, const SC&, const TR&) { return FormulaResult(reflect_in(m[0], m[1])); }},
      {"angle", "a b", "angle between two hyperplanes", 0, 2, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(angle_hyperplanes(m[0], m[1]));
       }},
      {"dist-parallel", "a b", "distance between parallel hyperplanes", 0, 2, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(dist_parallel_hyperplanes(m[0], m[1]));
       }},
      {"angle-direction", "V a", "angle between a direction and a hyperplane", 0, 2, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(angle_direction_hyperplane(m[0], m[1]));
       }},
      {"dist-points", "P Q", "distance between two points, join route", 0, 2, 0, false,
       [](const MV& m, const SC&, const TR&) { return FormulaResult(dist_points(m[0], m[1])); }},
      {"dist-points-ideal", "P Q", "distance between two points, commutator route", 0, 2, 0,
       false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(dist_points_ideal(m[0], m[1]));
       }},
      {"dist-point-hyperplane", "P a", "oriented distance from P to a", 0, 2, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(oriented_dist_point_hyperplane(m[0], m[1]));
       }},
      {"triangle-area", "A B C", "signed planar triangle area", 3, 3, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(triangle_area(m[0], m[1], m[2]));
       }},
      {"loop-length", "P0 P1 ...", "perimeter of a closed polygon", 3, -1, 0, false,
       [](const MV& m, const SC&, const TR&) { return FormulaResult(loop_length(m)); }},
      {"loop-area", "P0 P1 ...", "signed area of a closed polygon", 3, -1, 0, false,
       [](const MV& m, const SC&, const TR&) { return FormulaResult(loop_area(m)); }},
      {"rotor-point", "P alpha", "rotation by alpha around the point P", 3, 1, 1, false,
       [](const MV& m, const SC& s, const TR&) {
         return FormulaResult(rotor_about_point(m[0], s[0]));
       }},
      {"translator-perp", "V d", "translation by d perpendicular to V", 3, 1, 1, false,
       [](const MV& m, const SC& s, const TR&) {
         return FormulaResult(translator_perp(m[0], s[0]));
       }},
      {"tetra-volume", "A B C D", "signed tetrahedron volume", 4, 4, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(tetra_volume(m[0], m[1], m[2], m[3]));
       }},
      {"triangle-area3", "A B C", "triangle area in space", 4, 3, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(triangle_area3(m[0], m[1], m[2]));
       }},
      {"mesh-area", "", "total area of the mesh triangles", 4, 0, 0, true,
       [](const MV&, const SC&, const TR& t) { return FormulaResult(mesh_area(t)); }},
      {"mesh-volume", "", "volume enclosed by a closed mesh", 4, 0, 0, true,
       [](const MV&, const SC&, const TR& t) { return FormulaResult(mesh_volume(t)); }},
      {"rotor-line", "L alpha", "rotation by alpha around the line L", 4, 1, 1, false,
       [](const MV& m, const SC& s, const TR&) {
         return FormulaResult(rotor_about_line(m[0], s[0]));
       }},
      {"translator-along", "V d", "translation by d along the direction V", 4, 1, 1, false,
       [](const MV& m, const SC& s, const TR&) {
         return FormulaResult(translator_along(m[0], s[0]));
       }},
      {"screw", "L t pitch", "screw motion around the line L", 4, 1, 2, false,
       [](const MV& m, const SC& s, const TR&) {
         return FormulaResult(screw_motor(m[0], s[0], s[1]));
       }},
      {"motor-between", "a b", "motor carrying hyperplane a onto b", 0, 2, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(motor_between(m[0], m[1]));
       }},
      {"motor-log", "g", "principal bivector logarithm of a motor", 0, 1, 0, false,
       [](const MV& m, const SC&, const TR&) { return FormulaResult(log_motor(m[0])); }},
      {"motor-sqrt", "g", "square root of a motor", 0, 1, 0, false,
       [](const MV& m, const SC&, const TR&) { return FormulaResult(sqrt_motor(m[0])); }},
      {"common-normal", "L1 L2", "common normal line of two lines", 4, 2, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(common_normal(m[0], m[1]));
       }},
      {"angle-lines", "L1 L2", "angle between two oriented lines", 4, 2, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(angle_between_lines(m[0], m[1]));
       }},
      {"dist-lines", "L1 L2", "distance between two lines", 4, 2, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(dist_between_lines(m[0], m[1]));
       }},
      {"dist-skew", "L1 L2", "signed distance between skew lines", 4, 2, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(dist_skew_lines(m[0], m[1]));
       }},
      {"perp-line-point-line", "P L", "line through P perpendicular to L", 4, 2, 0, false,
       [](const MV& m, const SC&, const TR&) {
         return FormulaResult(perp_line_point_line(m[0], m[1]));
       }},
  };
  return catalog;
}

inline const FormulaSpec* find_formula(const std::string& name) {
  for (const FormulaSpec& f : formula_catalog())
    if (f.name == name) return &f;
  return nullptr;
}

// Wavefront OBJ subset: "v x y z" vertices and "f a b c" triangles with
// 1-based indices (a "/..." suffix per index is tolerated). Faces must be
// triangles wound counterclockwise seen from outside. Other directives are
// skipped.
inline std::vector<Triangle> parse_obj_mesh(std::istream& in, const Signature& sig) {
  std::vector<Eigen::Vector3d> verts;
  std::vector<Triangle> tris;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("mesh file line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      double x, y, z;
      if (!(ss >> x >> y >> z)) fail("expected \"v x y z\"");
      verts.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::string field[3], extra;
      if (!(ss >> field[0] >> field[1] >> field[2])) fail("expected \"f a b c\"");
      if (ss >> extra) fail("faces must be triangles");
      Multivector corner[3] = {Multivector(sig), Multivector(sig), Multivector(sig)};
      for (int i = 0; i < 3; ++i) {
        size_t idx = 0;
        long v = 0;
        try {
          v = std::stol(field[i].substr(0, field[i].find('/')), &idx);
        } catch (const std::exception&) {
          fail("bad vertex index '" + field[i] + "'");
        }
        if (v < 1 || static_cast<size_t>(v) > verts.size())
          fail("vertex index " + std::to_string(v) + " out of range");
        const Eigen::Vector3d& p = verts[v - 1];
        corner[i] = point3(sig, p.x(), p.y(), p.z());
      }
      tris.push_back({corner[0], corner[1], corner[2]});
    }
  }
  return tris;
}

}  // namespace pga
