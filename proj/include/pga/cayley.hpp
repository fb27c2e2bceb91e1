#pragma once

// Cayley (multiplication) tables rendered as text. For three-generator
// algebras the basis order and naming follow the classical presentation
// [1, e0, e1, e2, E0, E1, E2, I] with E0 = e12, E1 = -e02, E2 = e01;
// other algebras use canonical blade names in mask order.

#include "pga/algebra.hpp"
#include "pga/format.hpp"

#include <string>
#include <vector>

namespace pga {

struct CayleyBasisElement {
  std::string name;
  uint32_t mask;
  int sign;
};

inline std::vector<CayleyBasisElement> cayley_basis(const Signature& sig) {
  if (sig.gens() == 3) {
    return {{"1", 0, 1},  {"e0", 1, 1}, {"e1", 2, 1},  {"e2", 4, 1},
            {"E0", 6, 1}, {"E1", 5, -1}, {"E2", 3, 1}, {"I", 7, 1}};
  }
  std::vector<CayleyBasisElement> basis;
  for (int i = 0; i < sig.dim(); ++i) {
    std::string name = (i == 0) ? "1" : blade_name(i);
    basis.push_back({name, static_cast<uint32_t>(i), 1});
  }
  return basis;
}

inline std::string cayley_table_text(const Signature& sig) {
  std::vector<CayleyBasisElement> basis = cayley_basis(sig);
  std::string out;
  for (const CayleyBasisElement& row : basis) {
    bool first = true;
    for (const CayleyBasisElement& col : basis) {
      if (!first) out += " ";
      first = false;
      BladeProduct p = blade_geometric(row.mask, col.mask, sig);
      if (p.sign == 0) {
        out += "0";
        continue;
      }
      int total = p.sign * row.sign * col.sign;
      const CayleyBasisElement* hit = nullptr;
      for (const CayleyBasisElement& e : basis)
        if (e.mask == p.blade) {
          hit = &e;
          break;
        }
      total *= hit->sign;  // express the result blade in the table's basis
      if (total < 0) out += "-";
      out += hit->name;
    }
    out += "\n";
  }
  return out;
}

// Frozen multiplication tables for the acceptance check.
inline const char* golden_cayley_r300() {
  return
      "1 e0 e1 e2 E0 E1 E2 I\n"
      "e0 1 E2 -E1 I -e2 e1 E0\n"
      "e1 -E2 1 E0 e2 I -e0 E1\n"
      "e2 E1 -E0 1 -e1 e0 I E2\n"
      "E0 I -e2 e1 -1 -E2 E1 -e0\n"
      "E1 e2 I -e0 E2 -1 -E0 -e1\n"
      "E2 -e1 e0 I -E1 E0 -1 -e2\n"
      "I E0 E1 E2 -e0 -e1 -e2 -1\n";
}

inline const char* golden_cayley_d201() {
  return
      "1 e0 e1 e2 E0 E1 E2 I\n"
      "e0 0 E2 -E1 I 0 0 0\n"
      "e1 -E2 1 E0 e2 I -e0 E1\n"
      "e2 E1 -E0 1 -e1 e0 I E2\n"
      "E0 I -e2 e1 -1 -E2 E1 -e0\n"
      "E1 0 I -e0 E2 0 0 0\n"
      "E2 0 e0 I -E1 0 0 0\n"
      "I 0 E1 E2 -e0 0 0 0\n";
}

}  // namespace pga
