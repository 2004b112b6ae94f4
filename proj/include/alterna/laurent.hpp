#pragma once
// Multivariate Laurent polynomials over unbounded integers.
//
// Terms are kept in a std::map keyed by exponent vector, so iteration order is
// deterministic (lexicographic on variable name, then exponent).  Zero
// coefficients and zero exponents are never stored.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace alterna {

using Monomial = std::map<std::string, int>;  // var -> exponent, no zeros

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [v, e] : b) {
    int ne = (r.count(v) ? r[v] : 0) + e;
    if (ne == 0)
      r.erase(v);
    else
      r[v] = ne;
  }
  return r;
}

inline Monomial mono_inv(const Monomial& a) {
  Monomial r;
  for (const auto& [v, e] : a) r[v] = -e;
  return r;
}

struct LaurentPoly {
  std::map<Monomial, Int> terms;

  LaurentPoly() = default;
  /*implicit*/ LaurentPoly(int c) { add_term({}, c); }
  /*implicit*/ LaurentPoly(const Int& c) { add_term({}, c); }

  static LaurentPoly var(const std::string& name, int exp = 1) {
    LaurentPoly p;
    Monomial m;
    if (exp != 0) m[name] = exp;
    p.add_term(m, 1);
    return p;
  }

  void add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  bool is_zero() const { return terms.empty(); }

  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
  }

  Int constant_value() const {
    if (terms.empty()) return 0;
    if (!is_constant()) throw std::logic_error("constant_value: not constant");
    return terms.begin()->second;
  }

  // Single term with coefficient +-1 — the units of the Laurent ring.
  bool is_unit_monomial() const {
    return terms.size() == 1 &&
           (terms.begin()->second == 1 || terms.begin()->second == -1);
  }

  std::set<std::string> vars() const {
    std::set<std::string> r;
    for (const auto& [m, c] : terms)
      for (const auto& [v, e] : m) r.insert(v);
    return r;
  }

  int min_exp(const std::string& v) const {
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms) {
      auto it = m.find(v);
      int e = it == m.end() ? 0 : it->second;
      if (first || e < best) best = e;
      first = false;
    }
    return best;
  }

  bool operator==(const LaurentPoly& o) const { return terms == o.terms; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
};

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, c);
  return r;
}

inline LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [m, c] : a.terms) r.terms.emplace(m, -c);
  return r;
}

inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + (-b);
}

inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

inline LaurentPoly& operator+=(LaurentPoly& a, const LaurentPoly& b) { return a = a + b; }
inline LaurentPoly& operator-=(LaurentPoly& a, const LaurentPoly& b) { return a = a - b; }
inline LaurentPoly& operator*=(LaurentPoly& a, const LaurentPoly& b) { return a = a * b; }

inline LaurentPoly pow(const LaurentPoly& a, unsigned e) {
  LaurentPoly r = 1;
  for (unsigned i = 0; i < e; ++i) r *= a;
  return r;
}

inline LaurentPoly mono_poly(const Monomial& m, const Int& c = 1) {
  LaurentPoly p;
  p.add_term(m, c);
  return p;
}

// Substitute variables by polynomial images; variables not in the map stay.
// Negative powers require the image to be a unit monomial.
inline LaurentPoly subst(const LaurentPoly& p,
                         const std::map<std::string, LaurentPoly>& images) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms) {
    LaurentPoly term = LaurentPoly(c);
    for (const auto& [v, e] : m) {
      auto it = images.find(v);
      if (it == images.end()) {
        term *= mono_poly(Monomial{{v, e}});
        continue;
      }
      if (e >= 0) {
        term *= pow(it->second, unsigned(e));
      } else {
        if (!it->second.is_unit_monomial())
          throw std::logic_error("subst: negative power of non-unit image");
        const auto& [im, ic] = *it->second.terms.begin();
        LaurentPoly inv = mono_poly(mono_inv(im), ic);  // ic is +-1
        term *= pow(inv, unsigned(-e));
      }
    }
    out += term;
  }
  return out;
}

inline Rat rat_pow(const Rat& q, int e) {
  Rat r = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= q;
  if (e < 0) {
    if (r == 0) throw std::logic_error("rat_pow: zero to negative power");
    r = Rat(1) / r;
  }
  return r;
}

inline Rat eval(const LaurentPoly& p, const std::map<std::string, Rat>& vals) {
  Rat out = 0;
  for (const auto& [m, c] : p.terms) {
    Rat term = Rat(c);
    for (const auto& [v, e] : m) {
      auto it = vals.find(v);
      if (it == vals.end()) throw std::logic_error("eval: unbound variable " + v);
      term *= rat_pow(it->second, e);
    }
    out += term;
  }
  return out;
}

inline Int content(const LaurentPoly& p) {
  Int g = 0;
  for (const auto& [m, c] : p.terms) g = boost::multiprecision::gcd(g, c);
  return g;  // 0 for the zero polynomial
}

// Exact division in the Laurent ring; nullopt when d does not divide p.
inline std::optional<LaurentPoly> div_exact(const LaurentPoly& p,
                                            const LaurentPoly& d) {
  if (d.is_zero()) return std::nullopt;
  if (p.is_zero()) return LaurentPoly();
  if (d.is_unit_monomial()) {
    const auto& [dm, dc] = *d.terms.begin();
    LaurentPoly q;
    Monomial inv = mono_inv(dm);
    for (const auto& [m, c] : p.terms) q.add_term(mono_mul(m, inv), c * dc);
    return q;
  }

  // Shift both to honest polynomials; divisibility is unaffected because the
  // shifted divisor is not divisible by any variable.
  std::set<std::string> vs = p.vars();
  for (const auto& v : d.vars()) vs.insert(v);
  std::vector<std::string> varlist(vs.begin(), vs.end());
  Monomial shift_p, shift_d;
  for (const auto& v : varlist) {
    int ep = p.min_exp(v), ed = d.min_exp(v);
    if (ep != 0) shift_p[v] = -ep;
    if (ed != 0) shift_d[v] = -ed;
  }
  LaurentPoly P = p * mono_poly(shift_p);
  LaurentPoly D = d * mono_poly(shift_d);

  auto exps = [&](const Monomial& m) {
    std::vector<int> e;
    e.reserve(varlist.size());
    for (const auto& v : varlist) {
      auto it = m.find(v);
      e.push_back(it == m.end() ? 0 : it->second);
    }
    return e;
  };
  auto lex_less = [&](const Monomial& a, const Monomial& b) {
    return exps(a) < exps(b);
  };
  auto leading = [&](const LaurentPoly& f) {
    auto best = f.terms.begin();
    for (auto it = std::next(f.terms.begin()); it != f.terms.end(); ++it)
      if (lex_less(best->first, it->first)) best = it;
    return best;
  };

  auto dl = leading(D);
  LaurentPoly rem = P, quot;
  while (!rem.is_zero()) {
    auto rl = leading(rem);
    if (rl->second % dl->second != 0) return std::nullopt;
    Monomial qm;
    auto re = exps(rl->first), de = exps(dl->first);
    for (size_t i = 0; i < varlist.size(); ++i) {
      int diff = re[i] - de[i];
      if (diff < 0) return std::nullopt;
      if (diff != 0) qm[varlist[i]] = diff;
    }
    LaurentPoly qt = mono_poly(qm, rl->second / dl->second);
    quot += qt;
    rem -= qt * D;
  }
  // Undo the shifts: p/d = (P/D) * shift_d / shift_p.
  return quot * mono_poly(mono_inv(shift_p)) * mono_poly(shift_d);
}

}  // namespace alterna
