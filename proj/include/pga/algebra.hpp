#pragma once

// Graded multivector arithmetic over metrics with a degenerate direction.
// Basis blades are bitmasks: bit i set means generator e_i is a factor.
// Generator order is degenerate-first: in a signature with z null
// directions, e_0 .. e_{z-1} square to 0, the next p square to +1, the
// remaining m to -1.

#include <Eigen/Dense>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pga {

struct Signature {
  int p = 0;
  int m = 0;
  int z = 0;
  bool dual = false;  // dual construction: vectors are hyperplanes

  int gens() const { return p + m + z; }
  int dim() const { return 1 << gens(); }

  int metric(int i) const {
    if (i < z) return 0;
    if (i < z + p) return 1;
    return -1;
  }

  bool operator==(const Signature& o) const {
    return p == o.p && m == o.m && z == o.z && dual == o.dual;
  }
  bool operator!=(const Signature& o) const { return !(*this == o); }

  static Signature d201() { return {2, 0, 1, true}; }
  static Signature d301() { return {3, 0, 1, true}; }
  static Signature r300() { return {3, 0, 0, false}; }
};

// "d201", "d301", "r300", or "custom:p,m,z[,dual]".
inline Signature parse_signature(const std::string& name) {
  if (name == "d201") return Signature::d201();
  if (name == "d301") return Signature::d301();
  if (name == "r300") return Signature::r300();
  const std::string prefix = "custom:";
  if (name.rfind(prefix, 0) == 0) {
    std::string rest = name.substr(prefix.size());
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
      size_t comma = rest.find(',', start);
      if (comma == std::string::npos) {
        parts.push_back(rest.substr(start));
        break;
      }
      parts.push_back(rest.substr(start, comma - start));
      start = comma + 1;
    }
    bool dual = false;
    if (parts.size() == 4 && parts[3] == "dual") {
      dual = true;
      parts.pop_back();
    }
    if (parts.size() != 3) throw std::invalid_argument("bad signature: " + name);
    Signature s;
    try {
      s.p = std::stoi(parts[0]);
      s.m = std::stoi(parts[1]);
      s.z = std::stoi(parts[2]);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad signature: " + name);
    }
    s.dual = dual;
    if (s.p < 0 || s.m < 0 || s.z < 0 || s.gens() < 1 || s.gens() > 5)
      throw std::invalid_argument("bad signature: " + name);
    return s;
  }
  throw std::invalid_argument("unknown signature: " + name);
}

inline int grade_of(uint32_t blade) { return std::popcount(blade); }

// Sign from sorting the concatenation of two ascending generator lists.
inline int reorder_sign(uint32_t a, uint32_t b) {
  int swaps = 0;
  a >>= 1;
  while (a) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

struct BladeProduct {
  int sign;        // 0 when a shared generator squares to 0
  uint32_t blade;  // a ^ b
};

inline BladeProduct blade_geometric(uint32_t a, uint32_t b, const Signature& sig) {
  int sign = reorder_sign(a, b);
  for (uint32_t common = a & b; common; common &= common - 1) {
    int g = std::countr_zero(common);
    int mg = sig.metric(g);
    if (mg == 0) return {0, 0};
    sign *= mg;
  }
  return {sign, a ^ b};
}

class Multivector {
 public:
  Multivector() : sig_(Signature::d301()), c_(Eigen::VectorXd::Zero(16)) {}
  explicit Multivector(const Signature& sig)
      : sig_(sig), c_(Eigen::VectorXd::Zero(sig.dim())) {}
  Multivector(const Signature& sig, const Eigen::VectorXd& coeffs)
      : sig_(sig), c_(coeffs) {
    if (c_.size() != sig.dim())
      throw std::invalid_argument("coefficient count does not match signature");
  }

  static Multivector scalar(const Signature& sig, double v) {
    Multivector x(sig);
    x.c_[0] = v;
    return x;
  }
  static Multivector blade(const Signature& sig, uint32_t mask, double v = 1.0) {
    if (mask >= static_cast<uint32_t>(sig.dim()))
      throw std::invalid_argument("blade outside algebra");
    Multivector x(sig);
    x.c_[mask] = v;
    return x;
  }
  static Multivector pseudoscalar(const Signature& sig, double v = 1.0) {
    return blade(sig, static_cast<uint32_t>(sig.dim() - 1), v);
  }

  const Signature& sig() const { return sig_; }
  int dim() const { return sig_.dim(); }
  double operator[](uint32_t mask) const { return c_[mask]; }
  double& operator[](uint32_t mask) { return c_[mask]; }
  const Eigen::VectorXd& coeffs() const { return c_; }

  double scalar_part() const { return c_[0]; }
  double pseudo_part() const { return c_[dim() - 1]; }

  double max_abs() const { return c_.cwiseAbs().maxCoeff(); }

  bool is_zero(double tol = 0.0) const { return max_abs() <= tol; }

  // Bitmask of grades with a coefficient of magnitude above tol.
  uint32_t grade_mask(double tol = 0.0) const {
    uint32_t gm = 0;
    for (int i = 0; i < dim(); ++i)
      if (std::abs(c_[i]) > tol) gm |= 1u << grade_of(i);
    return gm;
  }

  Multivector grade_part(int k) const {
    Multivector r(sig_);
    for (int i = 0; i < dim(); ++i)
      if (grade_of(i) == k) r.c_[i] = c_[i];
    return r;
  }

  Multivector even_part() const {
    Multivector r(sig_);
    for (int i = 0; i < dim(); ++i)
      if ((grade_of(i) & 1) == 0) r.c_[i] = c_[i];
    return r;
  }

  Multivector reverse() const {
    Multivector r(sig_);
    for (int i = 0; i < dim(); ++i) {
      int g = grade_of(i);
      int s = ((g * (g - 1) / 2) & 1) ? -1 : 1;
      r.c_[i] = s * c_[i];
    }
    return r;
  }

  Multivector operator-() const { return Multivector(sig_, -c_); }

  Multivector& operator+=(const Multivector& o) {
    check_sig(o);
    c_ += o.c_;
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_sig(o);
    c_ -= o.c_;
    return *this;
  }
  Multivector& operator*=(double s) {
    c_ *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator+(const Multivector& a, double s) {
    Multivector r = a;
    r.c_[0] += s;
    return r;
  }
  friend Multivector operator+(double s, const Multivector& a) { return a + s; }
  friend Multivector operator-(const Multivector& a, double s) { return a + (-s); }
  friend Multivector operator-(double s, const Multivector& a) { return -a + s; }

  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_sig(b);
    Multivector r(a.sig_);
    for (int i = 0; i < a.dim(); ++i) {
      if (a.c_[i] == 0.0) continue;
      for (int j = 0; j < b.dim(); ++j) {
        if (b.c_[j] == 0.0) continue;
        BladeProduct p = blade_geometric(i, j, a.sig_);
        if (p.sign) r.c_[p.blade] += p.sign * a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  void check_sig(const Multivector& o) const {
    if (sig_ != o.sig_)
      throw std::invalid_argument("operands from different algebras");
  }

 private:
  Signature sig_;
  Eigen::VectorXd c_;
};

inline Multivector wedge(const Multivector& a, const Multivector& b) {
  a.check_sig(b);
  Multivector r(a.sig());
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < b.dim(); ++j) {
      if (b[j] == 0.0) continue;
      if ((static_cast<uint32_t>(i) & static_cast<uint32_t>(j)) != 0) continue;
      r[i ^ j] += reorder_sign(i, j) * a[i] * b[j];
    }
  }
  return r;
}

// Grade-|j-k| part of the geometric product, extended bilinearly over the
// homogeneous parts of both arguments.
inline Multivector inner(const Multivector& a, const Multivector& b) {
  a.check_sig(b);
  Multivector r(a.sig());
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < b.dim(); ++j) {
      if (b[j] == 0.0) continue;
      BladeProduct p = blade_geometric(i, j, a.sig());
      if (p.sign == 0) continue;
      if (grade_of(p.blade) != std::abs(grade_of(i) - grade_of(j))) continue;
      r[p.blade] += p.sign * a[i] * b[j];
    }
  }
  return r;
}

inline double inner_scalar(const Multivector& a, const Multivector& b) {
  return inner(a, b).scalar_part();
}

// X x Y := (XY - YX) / 2
inline Multivector commutator(const Multivector& a, const Multivector& b) {
  return (a * b - b * a) * 0.5;
}

inline Multivector sandwich(const Multivector& g, const Multivector& x) {
  return g * x * g.reverse();
}

// Dual coordinate map: J(blade) = s * complement(blade) with s chosen so
// blade ^ J(blade) = +pseudoscalar.
inline Multivector dual_map(const Multivector& x) {
  uint32_t full = static_cast<uint32_t>(x.dim() - 1);
  Multivector r(x.sig());
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] == 0.0) continue;
    uint32_t comp = full ^ static_cast<uint32_t>(i);
    r[comp] += reorder_sign(i, comp) * x[i];
  }
  return r;
}

// Exact inverse of dual_map: s chosen so complement(blade) ^ blade = +pseudoscalar.
inline Multivector dual_map_inverse(const Multivector& x) {
  uint32_t full = static_cast<uint32_t>(x.dim() - 1);
  Multivector r(x.sig());
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] == 0.0) continue;
    uint32_t comp = full ^ static_cast<uint32_t>(i);
    r[comp] += reorder_sign(comp, i) * x[i];
  }
  return r;
}

// Regressive product: X v Y := Jinv(J(X) ^ J(Y)).
inline Multivector join(const Multivector& a, const Multivector& b) {
  return dual_map_inverse(wedge(dual_map(a), dual_map(b)));
}

inline Multivector polar(const Multivector& x) {
  return x * Multivector::pseudoscalar(x.sig());
}

struct BasisAlias {
  const char* name;
  uint32_t mask;
  int sign;  // alias = sign * canonical blade
};

// Directions/origin pseudo-points and the pseudoscalar, by generator count.
inline std::vector<BasisAlias> basis_aliases(const Signature& sig) {
  if (sig.gens() == 3)
    return {{"E0", 6, 1}, {"E1", 5, -1}, {"E2", 3, 1}, {"I", 7, 1}};
  if (sig.gens() == 4)
    return {{"E0", 14, 1}, {"E1", 13, -1}, {"E2", 11, 1}, {"E3", 7, -1},
            {"I", 15, 1}};
  return {{"I", static_cast<uint32_t>(sig.dim() - 1), 1}};
}

inline bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  a.check_sig(b);
  return (a - b).max_abs() <= tol;
}

}  // namespace pga
