#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "pga/entities.hpp"
#include "pga/eval.hpp"
#include "pga/format.hpp"
#include "pga/motors.hpp"
#include "pga/parse.hpp"

using namespace pga;

TEST_CASE("precedence ladder") {
  Signature sig = Signature::d301();
  CHECK(to_string(parse("(a^b) | c", sig)) == "(a ^ b) | c");
  CHECK(to_string(parse("a^b | c", sig)) == "a ^ b | c");
  CHECK(to_string(parse("a & b ^ c", sig)) == "a & b ^ c");
  CHECK(to_string(parse("(a & b) ^ c", sig)) == "(a & b) ^ c");
  CHECK(to_string(parse("a + b*c", sig)) == "a + b*c");
  CHECK(to_string(parse("(a + b)*c", sig)) == "(a + b)*c");
  CHECK(to_string(parse("a | b*c", sig)) == "a | b*c");

  // The inner product binds tighter than the wedge, so the unparenthesized
  // form groups to the right.
  ExprPtr mixed = parse("a^b | c", sig);
  CHECK(mixed->op == '^');
  CHECK(mixed->args[1]->op == '|');
  ExprPtr forced = parse("(a^b) | c", sig);
  CHECK(forced->op == '|');
  CHECK(forced->args[0]->op == '^');
}

TEST_CASE("left associativity") {
  Signature sig = Signature::d301();
  ExprPtr e = parse("a - b - c", sig);
  CHECK(e->op == '-');
  CHECK(e->args[0]->op == '-');
  CHECK(to_string(e) == "a - b - c");
  CHECK(to_string(parse("a - (b - c)", sig)) == "a - (b - c)");
  CHECK(to_string(parse("a*b*c*d", sig)) == "a*b*c*d");
  CHECK(to_string(parse("a*(b*(c*d))", sig)) == "a*(b*(c*d))");
}

TEST_CASE("juxtaposition is the geometric product between identifier atoms") {
  Signature sig = Signature::d301();
  ExprPtr e = parse("e1 e2", sig);
  CHECK(e->kind == Expr::Kind::Binary);
  CHECK(e->op == '*');
  CHECK(to_string(e) == "e1*e2");
  CHECK(to_string(parse("e1 e2 e3", sig)) == "e1*e2*e3");
  CHECK(to_string(parse("a e12", sig)) == "a*e12");

  // Not between numbers, parenthesized expressions, or call names.
  CHECK_THROWS_AS(parse("2 e1", sig), ParseError);
  CHECK_THROWS_AS(parse("(a) b", sig), ParseError);
  CHECK_THROWS_AS(parse("a exp(b)", sig), ParseError);
}

TEST_CASE("the lexer reads 2e1 as twenty") {
  Signature sig = Signature::d201();
  ExprPtr e = parse("2e1", sig);
  CHECK(e->kind == Expr::Kind::Number);
  CHECK(e->number == 20.0);
  Evaluator ev(sig);
  CHECK(format_multivector(ev.eval_line("2e1")) == "20");
  CHECK(format_multivector(ev.eval_line("2*e1")) == "2*e1");
}

TEST_CASE("blade token validation against the signature") {
  Signature d2 = Signature::d201();
  CHECK_THROWS_WITH_AS(parse("e9", d2), doctest::Contains("unknown generator"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse("e3", d2), doctest::Contains("unknown generator"),
                       ParseError);
  CHECK_THROWS_AS(parse("e21", d2), ParseError);
  CHECK_THROWS_AS(parse("e00", d2), ParseError);
  CHECK_NOTHROW(parse("e012", d2));
  CHECK_NOTHROW(parse("e0123", Signature::d301()));
  CHECK_THROWS_AS(parse("e0123", d2), ParseError);

  try {
    parse("1 + e9", d2);
    FAIL("expected a parse error");
  } catch (const ParseError& pe) {
    CHECK(pe.line == 1);
    CHECK(pe.col == 5);
  }
}

TEST_CASE("parse errors carry line and column") {
  Signature sig = Signature::d301();
  try {
    parse("1 +\n* 2", sig);
    FAIL("expected a parse error");
  } catch (const ParseError& pe) {
    CHECK(pe.line == 2);
    CHECK(pe.col == 1);
  }
  CHECK_THROWS_AS(parse("", sig), ParseError);
  CHECK_THROWS_AS(parse("a +", sig), ParseError);
  CHECK_THROWS_AS(parse("exp(a", sig), ParseError);
  CHECK_THROWS_AS(parse("a b c)", sig), ParseError);
  CHECK_THROWS_AS(parse("a @ b", sig), ParseError);
}

TEST_CASE("round-trip corpus of fifty expressions") {
  Signature sig = Signature::d301();
  const std::vector<std::string> corpus = {
      "a + b",
      "a - b - c",
      "a - (b - c)",
      "a*b + c",
      "a*(b + c)",
      "a ^ b | c",
      "(a ^ b) | c",
      "a & b ^ c",
      "(a & b) ^ c",
      "a | b*c",
      "(a | b)*c",
      "~a*b",
      "~(a*b)",
      "-a + b",
      "-(a + b)",
      "!a & b",
      "!(a & b)",
      "a e12",
      "e1 e2 e3",
      "e0*e0",
      "E0 + E1 + E2 + E3",
      "I - ~I",
      "exp(0.5*e12)",
      "log(exp(0.25*e01))",
      "norm(3*e1 + 4*e2)",
      "inorm(e01)",
      "normalize(e1 + e2)",
      "sqrt(4)",
      "grade(a, 2)",
      "sandwich(g, x)",
      "x = a + b",
      "y = exp(t*e12)*p*~exp(t*e12)",
      "0.5",
      "20",
      "1e+300",
      "2.5e-3",
      "a*b*c*d",
      "a*(b*(c*d))",
      "a + b*c - d",
      "(a + b)*(c - d)",
      "~-a",
      "--a",
      "a & b & c",
      "a | b | c",
      "a ^ b ^ c",
      "grade(sandwich(g, x), 1)",
      "exp(a) + log(b)",
      "sqrt(norm(a))",
      "-1.5*e023",
      "p = normalize(e123 - 2*e023 + 3*e013)",
  };
  CHECK(corpus.size() == 50);
  for (const std::string& src : corpus) {
    CAPTURE(src);
    std::string once = to_string(parse(src, sig));
    std::string twice = to_string(parse(once, sig));
    CHECK(once == twice);
  }
}

TEST_CASE("evaluation matches direct library calls byte for byte") {
  Signature sig = Signature::d201();
  Evaluator ev(sig);

  CHECK(ev.eval_line("e0*e0").max_abs() == 0.0);

  std::string got = format_multivector(ev.eval_line("exp(0.7853981634*E0)"));
  Multivector b = Multivector::blade(sig, 6, 0.7853981634);
  CHECK(got == format_multivector(exp_bivector(b)));
  CHECK(got == "0.7071067812 + 0.7071067812*e12");

  CHECK(format_multivector(ev.eval_line("norm(3*e1 + 4*e2)")) == "5");
  CHECK(format_multivector(ev.eval_line("norm(e1 + 2*e2 + 3*e0)")) ==
        format_multivector(
            Multivector::scalar(sig, euclidean_norm(line2(sig, 1, 2, 3)))));

  CHECK(format_multivector(ev.eval_line("normalize(3*e1 + 4*e2 + 2*e0)")) ==
        format_multivector(normalize(line2(sig, 3, 4, 2))));

  CHECK(format_multivector(ev.eval_line("!e12")) ==
        format_multivector(dual_map(Multivector::blade(sig, 6))));
  CHECK(format_multivector(ev.eval_line("~(e01 + e12)")) ==
        format_multivector((Multivector::blade(sig, 3) + Multivector::blade(sig, 6))
                               .reverse()));
}

TEST_CASE("environment assignment and reuse") {
  Signature sig = Signature::d201();
  Evaluator ev(sig);
  Multivector p = ev.eval_line("P = e12 + 3*e01 - 2*e02");
  CHECK(format_multivector(p) ==
        format_multivector(point2(sig, 2.0, 3.0)));
  Multivector q = ev.eval_line("Q = e12 - 1*e02");
  Multivector line = ev.eval_line("P & Q");
  CHECK(format_multivector(line) == format_multivector(join(p, q)));

  Multivector rot = ev.eval_line("R = exp(0.35*E0)");
  CHECK(format_multivector(ev.eval_line("sandwich(R, P)")) ==
        format_multivector(sandwich(rot, p)));
  CHECK(format_multivector(ev.eval_line("R*P*~R")) ==
        format_multivector(rot * p * rot.reverse()));

  CHECK_THROWS_AS(ev.eval_line("e12 = 5"), EvalError);
  CHECK_THROWS_AS(ev.eval_line("E0 = 1"), EvalError);
  CHECK_THROWS_AS(ev.eval_line("I = 2"), EvalError);
  CHECK_THROWS_AS(ev.eval_line("missing + 1"), EvalError);
}

TEST_CASE("function dispatch on grade content") {
  Signature sig = Signature::d301();
  Evaluator ev(sig);

  CHECK(format_multivector(ev.eval_line("exp(1)")) ==
        format_multivector(Multivector::scalar(sig, std::exp(1.0))));
  CHECK(format_multivector(ev.eval_line("log(exp(1))")) == "1");
  CHECK(format_multivector(ev.eval_line("sqrt(4)")) == "2");

  Multivector biv = Multivector::blade(sig, 6, 0.3) + Multivector::blade(sig, 9, 0.2);
  Multivector motor = exp_bivector(biv);
  CHECK(format_multivector(ev.eval_line("exp(0.3*e12 + 0.2*e03)")) ==
        format_multivector(motor));
  CHECK(format_multivector(ev.eval_line("log(exp(0.3*e12 + 0.2*e03))")) ==
        format_multivector(log_motor(motor)));
  CHECK((log_motor(motor) - biv).max_abs() < 1e-12);
  CHECK(format_multivector(ev.eval_line("sqrt(exp(0.4*e12))")) ==
        format_multivector(sqrt_motor(exp_bivector(Multivector::blade(sig, 6, 0.4)))));

  CHECK(format_multivector(ev.eval_line("grade(1 + 2*e01 + 3*e1, 2)")) ==
        "2*e01");
  CHECK_THROWS_AS(ev.eval_line("log(0)"), EvalError);
  CHECK_THROWS_AS(ev.eval_line("sqrt(-1)"), EvalError);
  CHECK_THROWS_AS(ev.eval_line("exp(e1)"), EvalError);
  CHECK_THROWS_AS(ev.eval_line("log(e1)"), EvalError);
  CHECK_THROWS_AS(ev.eval_line("grade(e1, 9)"), EvalError);
  CHECK_THROWS_AS(ev.eval_line("grade(e1, 0.5)"), EvalError);
  CHECK_THROWS_AS(ev.eval_line("norm(e1, e2)"), EvalError);
  CHECK_THROWS_AS(ev.eval_line("mystery(1)"), EvalError);
}

TEST_CASE("number literals print in shortest round-trip form") {
  Signature sig = Signature::d301();
  CHECK(to_string(parse("0.5", sig)) == "0.5");
  CHECK(to_string(parse("20", sig)) == "20");
  CHECK(to_string(parse("2.5e-3", sig)) == "0.0025");
  CHECK(to_string(parse("1e300", sig)) == "1e+300");
  CHECK(to_string(parse("0.1", sig)) == "0.1");
}
