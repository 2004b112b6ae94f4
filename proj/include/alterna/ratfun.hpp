#pragma once
// Normalized rational functions num/den over LaurentPoly.
//
// Canonical form: den is an honest polynomial (minimal exponent 0 in each of
// its variables), integer content of the pair removed, den's leading
// coefficient (largest term in map order) positive, and common factors
// cancelled.  Cancellation is heuristic by design: trial division by the
// (v^2 - 1) / (v^2 + 1) family that actually shows up in denominators here,
// plus a univariate gcd when both sides live in one common variable.

#include <optional>

#include "laurent.hpp"

namespace alterna {

namespace detail {

// Primitive univariate gcd over the integers (coefficients by ascending
// exponent).  Classic primitive-PRS Euclid; sizes here are tiny.
inline std::vector<Int> upoly_from(const LaurentPoly& p, const std::string& v) {
  std::vector<Int> c;
  for (const auto& [m, co] : p.terms) {
    int e = m.empty() ? 0 : m.begin()->second;
    if ((int)c.size() <= e) c.resize(e + 1, 0);
    c[e] = co;
  }
  return c;
}

inline void uprim(std::vector<Int>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  Int g = 0;
  for (const auto& x : a) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (auto& x : a) x /= g;
  if (!a.empty() && a.back() < 0)
    for (auto& x : a) x = -x;
}

inline std::vector<Int> upoly_gcd(std::vector<Int> a, std::vector<Int> b) {
  uprim(a);
  uprim(b);
  while (!b.empty()) {
    // pseudo-remainder of a by b
    std::vector<Int> r = a;
    Int lb = b.back();
    int db = (int)b.size() - 1;
    while ((int)r.size() - 1 >= db && !r.empty()) {
      Int lr = r.back();
      int dr = (int)r.size() - 1;
      for (auto& x : r) x *= lb;
      for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b[i];
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    uprim(r);
    a = b;
    b = r;
  }
  return a;
}

inline LaurentPoly upoly_to(const std::vector<Int>& c, const std::string& v) {
  LaurentPoly p;
  for (size_t e = 0; e < c.size(); ++e)
    if (c[e] != 0) p.add_term(e == 0 ? Monomial{} : Monomial{{v, (int)e}}, c[e]);
  return p;
}

}  // namespace detail

struct RationalFunction {
  LaurentPoly num, den;

  RationalFunction() : num(), den(1) {}
  /*implicit*/ RationalFunction(int c) : num(c), den(1) {}
  /*implicit*/ RationalFunction(const Int& c) : num(c), den(1) {}
  /*implicit*/ RationalFunction(const LaurentPoly& p) : num(p), den(1) {}
  RationalFunction(const LaurentPoly& n, const LaurentPoly& d) { assign(n, d); }

  bool is_zero() const { return num.is_zero(); }

  bool operator==(const RationalFunction& o) const {
    return num == o.num && den == o.den;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

 private:
  void assign(LaurentPoly n, LaurentPoly d);
  friend RationalFunction ratfun_normalize(const LaurentPoly&, const LaurentPoly&);
};

inline RationalFunction ratfun_normalize(const LaurentPoly& n, const LaurentPoly& d) {
  RationalFunction r;
  r.assign(n, d);
  return r;
}

inline void RationalFunction::assign(LaurentPoly n, LaurentPoly d) {
  if (d.is_zero()) throw std::invalid_argument("rational function: zero denominator");
  if (n.is_zero()) {
    num = LaurentPoly();
    den = LaurentPoly(1);
    return;
  }

  // Shift den to an honest polynomial with min exponent 0 per variable.
  auto shift_den = [&]() {
    Monomial s;
    for (const auto& v : d.vars()) {
      int e = d.min_exp(v);
      if (e != 0) s[v] = -e;
    }
    if (!s.empty()) {
      d *= mono_poly(s);
      n *= mono_poly(s);
    }
  };
  shift_den();

  // Known denominator family, per variable.
  for (const auto& v : d.vars()) {
    for (int sign : {-1, +1}) {
      LaurentPoly f = LaurentPoly::var(v, 2) + LaurentPoly(sign);
      for (;;) {
        auto qd = div_exact(d, f);
        if (!qd) break;
        auto qn = div_exact(n, f);
        if (!qn) break;
        d = *qd;
        n = *qn;
      }
    }
  }

  // Univariate gcd when both sides share one single variable.
  {
    auto vn = n.vars(), vd = d.vars();
    if (vd.size() == 1 && (vn.empty() || vn == vd)) {
      const std::string& v = *vd.begin();
      Monomial s;
      int e = n.min_exp(v);
      if (e < 0) s[v] = -e;
      LaurentPoly nn = n * mono_poly(s);
      auto g = detail::upoly_gcd(detail::upoly_from(nn, v), detail::upoly_from(d, v));
      if (g.size() > 1) {
        LaurentPoly gp = detail::upoly_to(g, v);
        auto qn = div_exact(n, gp), qd = div_exact(d, gp);
        if (qn && qd) {
          n = *qn;
          d = *qd;
        }
      }
    }
  }

  shift_den();

  Int c = boost::multiprecision::gcd(content(n), content(d));
  if (c > 1) {
    for (auto& [m, co] : n.terms) co /= c;
    for (auto& [m, co] : d.terms) co /= c;
  }
  if (d.terms.rbegin()->second < 0) {
    n = -n;
    d = -d;
  }
  num = n;
  den = d;
}

inline RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return ratfun_normalize(a.num * b.den + b.num * a.den, a.den * b.den);
}
inline RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  LaurentPoly n = -r.num;
  return ratfun_normalize(n, r.den);
}
inline RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}
inline RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return ratfun_normalize(a.num * b.num, a.den * b.den);
}
inline RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::invalid_argument("rational function: division by zero");
  return ratfun_normalize(a.num * b.den, a.den * b.num);
}
inline RationalFunction& operator+=(RationalFunction& a, const RationalFunction& b) { return a = a + b; }
inline RationalFunction& operator-=(RationalFunction& a, const RationalFunction& b) { return a = a - b; }
inline RationalFunction& operator*=(RationalFunction& a, const RationalFunction& b) { return a = a * b; }

}  // namespace alterna
