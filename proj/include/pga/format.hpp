#pragma once

// Canonical text form: terms sorted by grade then by generator digits,
// coefficients printed with %.10g, ascending-digit blade names only.

#include "pga/algebra.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace pga {

inline std::string blade_name(uint32_t mask) {
  if (mask == 0) return "";
  std::string s = "e";
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) s += static_cast<char>('0' + i);
  return s;
}

inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

inline std::string format_multivector(const Multivector& x) {
  struct Term {
    uint32_t mask;
    std::string name;
    double coeff;
  };
  std::vector<Term> terms;
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] == 0.0) continue;
    terms.push_back({static_cast<uint32_t>(i), blade_name(i), x[i]});
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    int ga = grade_of(a.mask), gb = grade_of(b.mask);
    if (ga != gb) return ga < gb;
    return a.name < b.name;
  });
  if (terms.empty()) return "0";

  std::string out;
  bool first = true;
  for (const Term& t : terms) {
    double mag = std::abs(t.coeff);
    if (first) {
      if (t.coeff < 0) out += "-";
      out += format_number(mag);
      first = false;
    } else {
      out += (t.coeff < 0) ? " - " : " + ";
      out += format_number(mag);
    }
    if (t.mask != 0) {
      out += "*";
      out += t.name;
    }
  }
  return out;
}

}  // namespace pga
