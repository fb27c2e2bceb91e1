#pragma once

// Expression language for the calculator: geometric product (* or
// juxtaposition between identifier atoms), ^ wedge, & join, | inner,
// + -, unary ~ (reverse), ! (dual), - (negate), function calls, and
// assignment. Precedence, loosest to tightest:
//
//   =   assignment
//   + -
//   &
//   ^
//   |
//   *   (and juxtaposition)
//   ~ ! -  (prefix)
//
// All binary operators associate left. Blade tokens are `e` followed by
// strictly ascending generator digits; `E0`..`E3` and `I` are the basis
// aliases of the active signature. Note the lexer reads `2e1` as the
// number 20, so scaling a blade always needs an explicit `*`.

#include "pga/algebra.hpp"

#include <charconv>
#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pga {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" +
                           std::to_string(col_)),
        line(line_),
        col(col_) {}
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Ident, Unary, Binary, Call, Assign };
  Kind kind;
  double number = 0.0;
  std::string name;  // identifier, function name, or assignment target
  char op = 0;       // unary or binary operator
  std::vector<ExprPtr> args;
  int line = 0, col = 0;
};

namespace detail {

struct Token {
  enum class Kind {
    Number, Ident, Plus, Minus, Star, Caret, Amp, Pipe, Tilde, Bang,
    Equals, LParen, RParen, Comma, End
  };
  Kind kind;
  std::string text;
  double number = 0.0;
  int line, col;
};

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Token::Kind k, std::string text, double num = 0.0) {
    out.push_back({k, std::move(text), num, line, col});
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    int start_col = col;
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < src.size() &&
         std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '.') {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          ++k;
          while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
          j = k;
        }
      }
      std::string text = src.substr(i, j - i);
      double v = 0.0;
      auto res = std::from_chars(text.data(), text.data() + text.size(), v);
      if (res.ec != std::errc{})
        throw ParseError("bad number '" + text + "'", line, start_col);
      out.push_back({Token::Kind::Number, text, v, line, start_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_'))
        ++j;
      out.push_back({Token::Kind::Ident, src.substr(i, j - i), 0.0, line, start_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::Plus; break;
      case '-': k = Token::Kind::Minus; break;
      case '*': k = Token::Kind::Star; break;
      case '^': k = Token::Kind::Caret; break;
      case '&': k = Token::Kind::Amp; break;
      case '|': k = Token::Kind::Pipe; break;
      case '~': k = Token::Kind::Tilde; break;
      case '!': k = Token::Kind::Bang; break;
      case '=': k = Token::Kind::Equals; break;
      case '(': k = Token::Kind::LParen; break;
      case ')': k = Token::Kind::RParen; break;
      case ',': k = Token::Kind::Comma; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    push(k, std::string(1, c));
    ++col;
    ++i;
  }
  out.push_back({Token::Kind::End, "", 0.0, line, col});
  return out;
}

// Blade tokens are `e` plus one or more digits. Returns false for plain
// identifiers; throws for blade-shaped tokens that do not name a blade of
// the signature.
inline bool validate_blade_token(const std::string& name, const Signature& sig,
                                 int line, int col) {
  if (name.size() < 2 || name[0] != 'e') return false;
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  int prev = -1;
  for (size_t i = 1; i < name.size(); ++i) {
    int d = name[i] - '0';
    if (d >= sig.gens())
      throw ParseError("unknown generator e" + std::string(1, name[i]), line, col);
    if (d <= prev)
      throw ParseError("blade generators must be strictly ascending in '" + name + "'",
                       line, col);
    prev = d;
  }
  return true;
}

inline bool is_alias_token(const std::string& name, const Signature& sig) {
  for (const BasisAlias& a : basis_aliases(sig))
    if (name == a.name) return true;
  return false;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Signature& sig)
      : toks_(std::move(tokens)), sig_(sig) {}

  ExprPtr parse_statement() {
    if (at(Token::Kind::Ident) && peek(1).kind == Token::Kind::Equals) {
      Token name = advance();
      advance();  // '='
      auto e = node(Expr::Kind::Assign, name);
      e->name = name.text;
      e->args.push_back(parse_additive());
      expect_end();
      return e;
    }
    ExprPtr e = parse_additive();
    expect_end();
    return e;
  }

 private:
  std::shared_ptr<Expr> node(Expr::Kind k, const Token& t) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->line = t.line;
    e->col = t.col;
    return e;
  }

  ExprPtr binary(char op, ExprPtr a, ExprPtr b, const Token& t) {
    auto e = node(Expr::Kind::Binary, t);
    e->op = op;
    e->args = {std::move(a), std::move(b)};
    return e;
  }

  ExprPtr parse_additive() {
    ExprPtr lhs = parse_join();
    while (at(Token::Kind::Plus) || at(Token::Kind::Minus)) {
      Token t = advance();
      lhs = binary(t.kind == Token::Kind::Plus ? '+' : '-', lhs, parse_join(), t);
    }
    return lhs;
  }

  ExprPtr parse_join() {
    ExprPtr lhs = parse_wedge();
    while (at(Token::Kind::Amp)) {
      Token t = advance();
      lhs = binary('&', lhs, parse_wedge(), t);
    }
    return lhs;
  }

  ExprPtr parse_wedge() {
    ExprPtr lhs = parse_inner();
    while (at(Token::Kind::Caret)) {
      Token t = advance();
      lhs = binary('^', lhs, parse_inner(), t);
    }
    return lhs;
  }

  ExprPtr parse_inner() {
    ExprPtr lhs = parse_product();
    while (at(Token::Kind::Pipe)) {
      Token t = advance();
      lhs = binary('|', lhs, parse_product(), t);
    }
    return lhs;
  }

  // True when the factor parsed since `from` was a single identifier token,
  // not a parenthesized group, call, number, or unary expression.
  bool factor_was_ident_atom(size_t from) const {
    return pos_ == from + 1 && toks_[from].kind == Token::Kind::Ident;
  }

  ExprPtr parse_product() {
    size_t mark = pos_;
    ExprPtr lhs = parse_unary();
    bool last_factor_is_atom = factor_was_ident_atom(mark);
    while (true) {
      if (at(Token::Kind::Star)) {
        Token t = advance();
        mark = pos_;
        ExprPtr rhs = parse_unary();
        last_factor_is_atom = factor_was_ident_atom(mark);
        lhs = binary('*', lhs, rhs, t);
        continue;
      }
      // Juxtaposition: only between identifier/blade atoms, and never
      // when the next identifier starts a call.
      if (at(Token::Kind::Ident) && peek(1).kind != Token::Kind::LParen &&
          last_factor_is_atom) {
        Token t = advance();
        auto rhs = node(Expr::Kind::Ident, t);
        rhs->name = t.text;
        validate_ident(t);
        lhs = binary('*', lhs, rhs, t);
        continue;
      }
      return lhs;
    }
  }

  ExprPtr parse_unary() {
    if (at(Token::Kind::Tilde) || at(Token::Kind::Bang) || at(Token::Kind::Minus)) {
      Token t = advance();
      auto e = node(Expr::Kind::Unary, t);
      e->op = t.kind == Token::Kind::Tilde ? '~'
              : t.kind == Token::Kind::Bang ? '!'
                                            : '-';
      e->args.push_back(parse_unary());
      return e;
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    if (at(Token::Kind::Number)) {
      Token t = advance();
      auto e = node(Expr::Kind::Number, t);
      e->number = t.number;
      return e;
    }
    if (at(Token::Kind::Ident)) {
      Token t = advance();
      if (at(Token::Kind::LParen)) {
        advance();
        auto e = node(Expr::Kind::Call, t);
        e->name = t.text;
        if (!at(Token::Kind::RParen)) {
          e->args.push_back(parse_additive());
          while (at(Token::Kind::Comma)) {
            advance();
            e->args.push_back(parse_additive());
          }
        }
        expect(Token::Kind::RParen, "')'");
        return e;
      }
      auto e = node(Expr::Kind::Ident, t);
      e->name = t.text;
      validate_ident(t);
      return e;
    }
    if (at(Token::Kind::LParen)) {
      advance();
      ExprPtr e = parse_additive();
      expect(Token::Kind::RParen, "')'");
      return e;
    }
    const Token& t = peek(0);
    throw ParseError("expected an expression, found '" +
                         (t.kind == Token::Kind::End ? "end of input" : t.text) + "'",
                     t.line, t.col);
  }

  void validate_ident(const Token& t) {
    validate_blade_token(t.text, sig_, t.line, t.col);
  }

  bool at(Token::Kind k) const { return toks_[pos_].kind == k; }
  const Token& peek(int ahead) const {
    size_t i = pos_ + ahead;
    return toks_[i < toks_.size() ? i : toks_.size() - 1];
  }
  Token advance() { return toks_[pos_++]; }
  void expect(Token::Kind k, const char* what) {
    if (!at(k)) {
      const Token& t = peek(0);
      throw ParseError(std::string("expected ") + what + ", found '" +
                           (t.kind == Token::Kind::End ? "end of input" : t.text) + "'",
                       t.line, t.col);
    }
    advance();
  }
  void expect_end() {
    if (!at(Token::Kind::End)) {
      const Token& t = peek(0);
      throw ParseError("unexpected '" + t.text + "' after the expression", t.line,
                       t.col);
    }
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  Signature sig_;
};

inline int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Assign: return 0;
    case Expr::Kind::Binary:
      switch (e.op) {
        case '+':
        case '-': return 1;
        case '&': return 2;
        case '^': return 3;
        case '|': return 4;
        default: return 5;
      }
    case Expr::Kind::Unary: return 6;
    default: return 7;
  }
}

inline std::string format_literal(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace detail

inline ExprPtr parse(const std::string& src, const Signature& sig) {
  detail::Parser p(detail::lex(src), sig);
  return p.parse_statement();
}

inline std::string to_string(const ExprPtr& e) {
  using detail::precedence;
  auto wrap = [](const std::string& s, bool need) {
    return need ? "(" + s + ")" : s;
  };
  switch (e->kind) {
    case Expr::Kind::Number:
      return detail::format_literal(e->number);
    case Expr::Kind::Ident:
      return e->name;
    case Expr::Kind::Assign:
      return e->name + " = " + to_string(e->args[0]);
    case Expr::Kind::Unary: {
      const std::string inner = to_string(e->args[0]);
      return e->op + wrap(inner, precedence(*e->args[0]) < 6);
    }
    case Expr::Kind::Call: {
      std::string s = e->name + "(";
      for (size_t i = 0; i < e->args.size(); ++i) {
        if (i) s += ", ";
        s += to_string(e->args[i]);
      }
      return s + ")";
    }
    case Expr::Kind::Binary: {
      int p = precedence(*e);
      std::string lhs = wrap(to_string(e->args[0]), precedence(*e->args[0]) < p);
      std::string rhs = wrap(to_string(e->args[1]), precedence(*e->args[1]) <= p);
      if (e->op == '*') return lhs + "*" + rhs;
      return lhs + " " + e->op + " " + rhs;
    }
  }
  return "";
}

}  // namespace pga
