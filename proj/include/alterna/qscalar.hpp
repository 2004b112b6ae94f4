#pragma once
// Scalars for the dihedral Hecke algebra: Laurent polynomials in the q
// variables divided by a product of (q + q^-1) powers, kept in factored form
// so cancellation is a sequence of exact divisions.

#include <map>

#include "laurent.hpp"

namespace alterna {

struct QScalar {
  LaurentPoly num;
  std::map<std::string, int> den;  // variable v -> power of (v + v^-1)

  QScalar() = default;
  /*implicit*/ QScalar(int c) : num(c) {}
  /*implicit*/ QScalar(const Int& c) : num(c) {}
  /*implicit*/ QScalar(LaurentPoly p) : num(std::move(p)) {}
  QScalar(LaurentPoly p, std::map<std::string, int> d)
      : num(std::move(p)), den(std::move(d)) {
    canon();
  }

  static LaurentPoly plus_form(const std::string& v) {
    return LaurentPoly::var(v) + LaurentPoly::var(v, -1);
  }

  void canon() {
    if (num.is_zero()) {
      den.clear();
      return;
    }
    for (auto it = den.begin(); it != den.end();) {
      LaurentPoly f = plus_form(it->first);
      while (it->second > 0) {
        auto q = div_exact(num, f);
        if (!q) break;
        num = *q;
        --it->second;
      }
      it = it->second == 0 ? den.erase(it) : std::next(it);
    }
  }

  bool is_zero() const { return num.is_zero(); }

  bool operator==(const QScalar& o) const { return num == o.num && den == o.den; }
  bool operator!=(const QScalar& o) const { return !(*this == o); }
};

inline QScalar operator+(const QScalar& a, const QScalar& b) {
  QScalar r;
  LaurentPoly an = a.num, bn = b.num;
  for (const auto& [v, p] : a.den) r.den[v] = p;
  for (const auto& [v, p] : b.den) r.den[v] = std::max(r.den[v], p);
  for (const auto& [v, p] : r.den) {
    LaurentPoly f = QScalar::plus_form(v);
    auto lift = [&](LaurentPoly& n, const std::map<std::string, int>& d) {
      auto it = d.find(v);
      int have = it == d.end() ? 0 : it->second;
      for (int t = have; t < p; ++t) n *= f;
    };
    lift(an, a.den);
    lift(bn, b.den);
  }
  r.num = an + bn;
  r.canon();
  return r;
}

inline QScalar operator-(const QScalar& a) {
  QScalar r = a;
  r.num = -r.num;
  return r;
}

inline QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }

inline QScalar operator*(const QScalar& a, const QScalar& b) {
  QScalar r;
  r.num = a.num * b.num;
  if (!r.num.is_zero()) {
    r.den = a.den;
    for (const auto& [v, p] : b.den) r.den[v] += p;
  }
  r.canon();
  return r;
}

inline QScalar& operator+=(QScalar& a, const QScalar& b) { return a = a + b; }
inline QScalar& operator-=(QScalar& a, const QScalar& b) { return a = a - b; }
inline QScalar& operator*=(QScalar& a, const QScalar& b) { return a = a * b; }

// Division restricted to the blessed denominators.
inline QScalar div_qplus(QScalar a, const std::string& v) {
  if (a.is_zero()) return a;
  a.den[v] += 1;
  a.canon();
  return a;
}

}  // namespace alterna
