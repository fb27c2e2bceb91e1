// Command line front end: an expression calculator on stdin (default) or
// from arguments (eval), multiplication tables checked against the frozen
// goldens (tables), the formula catalog by name (formula), and the rigid
// body integrator (simulate).
//
// Exit codes: 0 ok, 1 evaluation error, 2 expression parse error, 3 golden
// table mismatch.

#include "CLI11.hpp"

#include "pga/algebra.hpp"
#include "pga/catalog.hpp"
#include "pga/cayley.hpp"
#include "pga/dynamics.hpp"
#include "pga/entities.hpp"
#include "pga/eval.hpp"
#include "pga/format.hpp"
#include "pga/parse.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace pga;

bool scalar_only(const Multivector& x) { return (x.grade_mask() & ~1u) == 0; }
bool bivector_only(const Multivector& x) {
  return (x.grade_mask() & ~(1u << 2)) == 0;
}

int run_repl(const Signature& sig) {
  Evaluator ev(sig);
  std::string line;
  int code = 0;
  while (std::getline(std::cin, line)) {
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    try {
      std::cout << format_multivector(ev.eval_line(line)) << "\n";
    } catch (const ParseError& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      if (code == 0) code = 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      if (code == 0) code = 1;
    }
  }
  return code;
}

int run_eval(const Signature& sig, const std::vector<std::string>& exprs) {
  Evaluator ev(sig);
  for (const std::string& src : exprs)
    std::cout << format_multivector(ev.eval_line(src)) << "\n";
  return 0;
}

int run_tables(const Signature& sig, const std::string& sig_name) {
  std::string table = cayley_table_text(sig);
  std::cout << table;
  const char* golden = nullptr;
  if (sig == Signature::r300()) golden = golden_cayley_r300();
  if (sig == Signature::d201()) golden = golden_cayley_d201();
  if (golden && table != golden) {
    std::cerr << "golden mismatch for " << sig_name << "\n";
    return 3;
  }
  return 0;
}

void list_formulas() {
  for (const FormulaSpec& f : formula_catalog()) {
    const char* algebra = f.gens == 3 ? "2D" : f.gens == 4 ? "3D" : "any";
    std::string args = f.needs_mesh ? "--mesh FILE" : f.args;
    std::printf("%-22s %-4s %-14s %s\n", f.name.c_str(), algebra, args.c_str(),
                f.summary.c_str());
  }
}

int run_formula(const Signature& sig, const std::string& name,
                const std::vector<std::string>& args, const std::string& mesh_path) {
  if (name.empty()) {
    list_formulas();
    return 0;
  }
  const FormulaSpec* spec = find_formula(name);
  if (!spec) {
    std::cerr << "error: unknown formula '" << name
              << "' (run `pga formula` for the list)\n";
    return 1;
  }
  if (spec->gens != 0 && sig.gens() != spec->gens) {
    std::cerr << "error: " << name << " needs a "
              << (spec->gens == 3 ? "planar" : "spatial")
              << " algebra, not gens=" << sig.gens() << "\n";
    return 1;
  }
  std::vector<Triangle> tris;
  if (spec->needs_mesh) {
    if (mesh_path.empty()) {
      std::cerr << "error: " << name << " needs --mesh FILE\n";
      return 1;
    }
    std::ifstream mf(mesh_path);
    if (!mf) {
      std::cerr << "error: cannot open '" << mesh_path << "'\n";
      return 1;
    }
    tris = parse_obj_mesh(mf, sig);
  }

  size_t n_mv = spec->mv_arity < 0 ? args.size() : static_cast<size_t>(spec->mv_arity);
  size_t want = n_mv + spec->num_scalars;
  if (spec->mv_arity < 0 && args.size() < 3) {
    std::cerr << "error: " << name << " needs at least three points\n";
    return 1;
  }
  if (args.size() != want) {
    std::cerr << "error: " << name << " takes " << want << " argument"
              << (want == 1 ? "" : "s") << " (" << spec->args << ")\n";
    return 1;
  }

  Evaluator ev(sig);
  std::vector<Multivector> mvs;
  std::vector<double> scalars;
  for (size_t i = 0; i < args.size(); ++i) {
    Multivector v = ev.eval_line(args[i]);
    if (i < n_mv) {
      mvs.push_back(v);
    } else if (scalar_only(v)) {
      scalars.push_back(v[0]);
    } else {
      std::cerr << "error: argument " << i + 1 << " of " << name
                << " must be a scalar\n";
      return 1;
    }
  }

  FormulaResult r = spec->fn(mvs, scalars, tris);
  std::cout << (r.is_scalar ? format_number(r.value) : format_multivector(r.mv))
            << "\n";
  return 0;
}

int run_simulate(const Signature& sig, const std::string& body_path, double dt,
                 int steps, const std::string& out_path,
                 const std::string& omega_expr, const std::string& force_expr) {
  if (!(sig == Signature::d301())) {
    std::cerr << "error: simulate runs in the d301 algebra\n";
    return 1;
  }
  std::ifstream bf(body_path);
  if (!bf) {
    std::cerr << "error: cannot open '" << body_path << "'\n";
    return 1;
  }
  RigidBody body = build_body(parse_body_file(bf));

  Evaluator ev(sig);
  SimState init;
  if (!omega_expr.empty()) {
    Multivector w = ev.eval_line(omega_expr);
    if (!bivector_only(w)) {
      std::cerr << "error: --omega must evaluate to a bivector\n";
      return 1;
    }
    init.w = bivector_coords(w);
  }
  ForceFunc force;
  ExprPtr force_ast;
  if (!force_expr.empty()) {
    force_ast = parse(force_expr, sig);
    force = [&ev, force_ast, &sig](double t) {
      ev.set("t", Multivector::scalar(sig, t));
      Multivector f = ev.eval(force_ast);
      if (!bivector_only(f))
        throw EvalError("--force must evaluate to a bivector", force_ast);
      return f;
    };
  }

  std::vector<SimRow> rows = simulate(body, init, dt, steps, force);

  std::ofstream of;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    of.open(out_path);
    if (!of) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 1;
    }
    os = &of;
  }
  *os << csv_header() << "\n";
  for (const SimRow& row : rows) *os << csv_line(row) << "\n";

  double e0 = rows.front().energy;
  double drift = 0.0;
  for (const SimRow& row : rows) drift = std::max(drift, std::abs(row.energy - e0));
  double rel = drift / std::max(std::abs(e0), 1e-300);
  (out_path.empty() ? std::cerr : std::cout)
      << "energy_drift_rel = " << format_number(rel) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"projective geometric algebra calculator"};
  app.require_subcommand(0, 1);

  std::string sig_name = "d301";
  app.add_option("--sig", sig_name,
                 "algebra signature: d201, d301, r300, or custom:p,m,z[,dual]")
      ->envname("PGA_SIG");

  CLI::App* tables_cmd =
      app.add_subcommand("tables", "print the multiplication table");
  tables_cmd->fallthrough();

  std::vector<std::string> eval_exprs;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate expressions");
  eval_cmd->fallthrough();
  eval_cmd->add_option("expr", eval_exprs, "expressions, evaluated in order")
      ->required();

  std::string formula_name;
  std::vector<std::string> formula_args;
  std::string mesh_path;
  CLI::App* formula_cmd = app.add_subcommand(
      "formula", "run a catalog formula (no name: list the catalog)");
  formula_cmd->fallthrough();
  formula_cmd->add_option("name", formula_name, "formula name");
  formula_cmd->add_option("args", formula_args, "argument expressions");
  formula_cmd->add_option("--mesh", mesh_path, "triangle mesh file (OBJ subset)");

  std::string body_path, out_path, omega_expr, force_expr;
  double dt = 1e-3;
  int steps = 1000;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "integrate a rigid body");
  sim_cmd->fallthrough();
  sim_cmd->add_option("--body", body_path, "body file, one \"mass x y z\" per line")
      ->required();
  sim_cmd->add_option("--dt", dt, "time step");
  sim_cmd->add_option("--steps", steps, "number of steps");
  sim_cmd->add_option("--out", out_path, "CSV output file (default: stdout)");
  sim_cmd->add_option("--omega", omega_expr, "initial body velocity bivector");
  sim_cmd->add_option("--force", force_expr,
                      "body-frame force bivector, may use the variable t");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    Signature sig = parse_signature(sig_name);
    if (tables_cmd->parsed()) return run_tables(sig, sig_name);
    if (eval_cmd->parsed()) return run_eval(sig, eval_exprs);
    if (formula_cmd->parsed())
      return run_formula(sig, formula_name, formula_args, mesh_path);
    if (sim_cmd->parsed())
      return run_simulate(sig, body_path, dt, steps, out_path, omega_expr,
                          force_expr);
    return run_repl(sig);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
