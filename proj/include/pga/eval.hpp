#pragma once

// Evaluates parsed expressions over one algebra. Every value is a
// multivector; scalars ride in the grade-0 slot. The functions dispatch on
// grade content: exp takes scalars or bivectors, log takes positive scalars
// or motors, sqrt takes nonnegative scalars or motors.

#include "pga/algebra.hpp"
#include "pga/motors.hpp"
#include "pga/norms.hpp"
#include "pga/parse.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace pga {

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
  EvalError(const std::string& msg, const ExprPtr& where)
      : std::runtime_error(msg + " in '" + to_string(where) + "'") {}
};

class Evaluator {
 public:
  explicit Evaluator(const Signature& sig) : sig_(sig) {}

  const Signature& sig() const { return sig_; }

  void set(const std::string& name, const Multivector& v) {
    env_.insert_or_assign(name, v);
  }

  Multivector eval_line(const std::string& src) { return eval(parse(src, sig_)); }

  Multivector eval(const ExprPtr& e) {
    switch (e->kind) {
      case Expr::Kind::Number:
        return Multivector::scalar(sig_, e->number);
      case Expr::Kind::Ident:
        return resolve(e);
      case Expr::Kind::Assign: {
        if (names_blade(e->name))
          throw EvalError("cannot assign to the blade name '" + e->name + "'");
        Multivector v = eval(e->args[0]);
        env_.insert_or_assign(e->name, v);
        return v;
      }
      case Expr::Kind::Unary: {
        Multivector a = eval(e->args[0]);
        try {
          switch (e->op) {
            case '~': return a.reverse();
            case '!': return dual_map(a);
            default: return -a;
          }
        } catch (const EvalError&) {
          throw;
        } catch (const std::exception& ex) {
          throw EvalError(ex.what(), e);
        }
      }
      case Expr::Kind::Binary: {
        Multivector a = eval(e->args[0]);
        Multivector b = eval(e->args[1]);
        try {
          switch (e->op) {
            case '+': return a + b;
            case '-': return a - b;
            case '*': return a * b;
            case '^': return wedge(a, b);
            case '&': return join(a, b);
            default: return inner(a, b);
          }
        } catch (const EvalError&) {
          throw;
        } catch (const std::exception& ex) {
          throw EvalError(ex.what(), e);
        }
      }
      case Expr::Kind::Call:
        return call(e);
    }
    throw EvalError("unreachable expression kind");
  }

 private:
  static bool scalar_only(const Multivector& x) {
    return (x.grade_mask() & ~1u) == 0;
  }
  static bool even_only(const Multivector& x) {
    return (x.grade_mask() & 0b1010u) == 0;
  }
  static bool bivector_only(const Multivector& x) {
    return (x.grade_mask() & ~(1u << 2)) == 0;
  }

  bool names_blade(const std::string& name) const {
    if (name.size() >= 2 && name[0] == 'e') {
      bool digits = true;
      for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
      if (digits) return true;
    }
    for (const BasisAlias& a : basis_aliases(sig_))
      if (name == a.name) return true;
    return false;
  }

  Multivector resolve(const ExprPtr& e) {
    const std::string& name = e->name;
    if (detail::validate_blade_token(name, sig_, e->line, e->col)) {
      uint32_t mask = 0;
      for (size_t i = 1; i < name.size(); ++i) mask |= 1u << (name[i] - '0');
      return Multivector::blade(sig_, mask);
    }
    for (const BasisAlias& a : basis_aliases(sig_))
      if (name == a.name) return Multivector::blade(sig_, a.mask, a.sign);
    auto it = env_.find(name);
    if (it != env_.end()) return it->second;
    throw EvalError("unknown identifier '" + name + "'");
  }

  Multivector call(const ExprPtr& e) {
    const std::string& fn = e->name;
    auto arity = [&](size_t n) {
      if (e->args.size() != n)
        throw EvalError(fn + " takes " + std::to_string(n) + " argument" +
                            (n == 1 ? "" : "s"),
                        e);
    };
    try {
      if (fn == "exp") {
        arity(1);
        Multivector a = eval(e->args[0]);
        if (scalar_only(a)) return Multivector::scalar(sig_, std::exp(a[0]));
        if (bivector_only(a)) return exp_bivector(a);
        throw EvalError("exp needs a scalar or a bivector", e);
      }
      if (fn == "log") {
        arity(1);
        Multivector a = eval(e->args[0]);
        if (scalar_only(a)) {
          if (a[0] <= 0.0) throw EvalError("log needs a positive scalar", e);
          return Multivector::scalar(sig_, std::log(a[0]));
        }
        if (even_only(a)) return log_motor(a);
        throw EvalError("log needs a positive scalar or a motor", e);
      }
      if (fn == "sqrt") {
        arity(1);
        Multivector a = eval(e->args[0]);
        if (scalar_only(a)) {
          if (a[0] < 0.0) throw EvalError("sqrt needs a nonnegative scalar", e);
          return Multivector::scalar(sig_, std::sqrt(a[0]));
        }
        if (even_only(a)) return sqrt_motor(a);
        throw EvalError("sqrt needs a nonnegative scalar or a motor", e);
      }
      if (fn == "norm") {
        arity(1);
        return Multivector::scalar(sig_, euclidean_norm(eval(e->args[0])));
      }
      if (fn == "inorm") {
        arity(1);
        return Multivector::scalar(sig_, ideal_norm(eval(e->args[0])));
      }
      if (fn == "normalize") {
        arity(1);
        return normalize(eval(e->args[0]));
      }
      if (fn == "grade") {
        arity(2);
        Multivector a = eval(e->args[0]);
        Multivector k = eval(e->args[1]);
        if (!scalar_only(k)) throw EvalError("grade index must be a scalar", e);
        double kv = k[0];
        int ki = static_cast<int>(std::lround(kv));
        if (std::abs(kv - ki) > 1e-9 || ki < 0 || ki > sig_.gens())
          throw EvalError("grade index must be an integer between 0 and " +
                              std::to_string(sig_.gens()),
                          e);
        return a.grade_part(ki);
      }
      if (fn == "sandwich") {
        arity(2);
        Multivector g = eval(e->args[0]);
        Multivector x = eval(e->args[1]);
        return sandwich(g, x);
      }
    } catch (const EvalError&) {
      throw;
    } catch (const std::exception& ex) {
      throw EvalError(ex.what(), e);
    }
    throw EvalError("unknown function '" + fn + "'", e);
  }

  Signature sig_;
  std::map<std::string, Multivector> env_;
};

}  // namespace pga
