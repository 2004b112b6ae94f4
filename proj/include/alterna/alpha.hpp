#pragma once
// Coefficient tables for the alternating-subalgebra defining relations: the
// three-index integer tables alpha^(m), the relation polynomials a_k^(m), the
// one-parameter closed form, and generating-function cross-checks.

#include <map>
#include <sstream>
#include <tuple>

#include "series.hpp"

namespace alterna {

struct AlphaTable {
  int m = 0;
  // (k, l, l') -> value
  std::map<std::tuple<int, int, int>, Int> entries;

  Int at(int k, int l, int lp) const {
    auto it = entries.find({k, l, lp});
    return it == entries.end() ? Int(0) : it->second;
  }
};

inline AlphaTable alpha_table(int m) {
  if (m < 0) throw std::invalid_argument("alpha_table: m < 0");
  AlphaTable t;
  t.entries[{0, 0, 0}] = 1;
  for (int step = 0; step < m; ++step) {
    AlphaTable next;
    next.m = step + 1;
    for (const auto& [key, v] : t.entries) {
      auto [k, l, lp] = key;
      // alpha^{m+1}_{k',l',lp'} = alpha^m_{k'-1,lp',l'} + alpha^m_{-k',lp',l'-1}
      next.entries[{k + 1, lp, l}] += v;
      next.entries[{-k, lp + 1, l}] += v;
    }
    for (auto it = next.entries.begin(); it != next.entries.end();) {
      if (it->second == 0)
        it = next.entries.erase(it);
      else
        ++it;
    }
    t = std::move(next);
  }
  t.m = m;
  // Support constraints; violation would mean the recursion is implemented wrong.
  for (const auto& [key, v] : t.entries) {
    auto [k, l, lp] = key;
    int kk = k < 0 ? -k : k;
    if (kk > m - l - lp || ((m - l - lp - k) % 2 + 2) % 2 != 0 ||
        l > (m + 1) / 2 || lp > m / 2)
      throw std::logic_error("alpha_table: support violation");
  }
  return t;
}

struct AKVector {
  int m = 2;
  bool equal_params = false;
  std::map<int, LaurentPoly> a;  // k = 1..m
};

// Two-parameter coefficients from the alpha table; variables b0 (beta_i) and
// b1 (beta_j), collapsed to b0 alone when the parameters are identified.
inline AKVector a_vector(int m, bool equal_params = false) {
  if (m < 2) throw std::invalid_argument("a_vector: m < 2");
  if (m % 2 == 1 && !equal_params)
    throw std::invalid_argument("a_vector: odd m forces equal parameters");
  AlphaTable t = alpha_table(m);
  AKVector r;
  r.m = m;
  r.equal_params = equal_params;
  for (int k = 1; k <= m; ++k) {
    LaurentPoly p;
    for (const auto& [key, v] : t.entries) {
      auto [kk, l, lp] = key;
      if (kk == k) {
        // + alpha_{k,l,l'} b0^l b1^l'
        Monomial mo;
        if (equal_params) {
          if (l + lp) mo["b0"] = l + lp;
        } else {
          if (l) mo["b0"] = l;
          if (lp) mo["b1"] = lp;
        }
        p.add_term(mo, v);
      }
      if (kk == -k) {
        // - alpha_{-k,l',l} b0^l b1^l'  (table key order is (l', l) here)
        Monomial mo;
        if (equal_params) {
          if (l + lp) mo["b0"] = l + lp;
        } else {
          if (lp) mo["b0"] = lp;
          if (l) mo["b1"] = l;
        }
        p.add_term(mo, -v);
      }
    }
    r.a[k] = p;
  }
  if (r.a[m] != LaurentPoly(1)) throw std::logic_error("a_vector: a_m != 1");
  return r;
}

// Symmetric companion coefficients: in the expansion of the braid difference
// the coefficient of the k-th word plus the coefficient of its mirror.  Each
// table entry at +/-k contributes its monomial minus the index-swapped
// monomial, so the whole thing vanishes identically.
inline std::map<int, LaurentPoly> b_vector(int m, bool equal_params) {
  if (m % 2 == 1 && !equal_params)
    throw std::invalid_argument("b_vector: odd m forces equal parameters");
  AlphaTable t = alpha_table(m);
  std::map<int, LaurentPoly> r;
  for (int k = 0; k <= m; ++k) {
    LaurentPoly p;
    for (const auto& [key, v] : t.entries) {
      auto [kk, l, lp] = key;
      if (kk != k && kk != -k) continue;
      Monomial straight, swapped;
      if (equal_params) {
        if (l + lp) straight["b0"] = l + lp;
        swapped = straight;
      } else {
        if (l) straight["b0"] = l;
        if (lp) straight["b1"] = lp;
        if (lp) swapped["b0"] = lp;
        if (l) swapped["b1"] = l;
      }
      p.add_term(straight, v);
      p.add_term(swapped, -v);
    }
    r[k] = p;
  }
  return r;
}

// Closed form for the collapsed one-parameter table (sum over l+l' = L).
inline Int alpha_one_param(int m, int k, int L) {
  if (L < 0 || L > m) return 0;
  int kk = k < 0 ? -k : k;
  if (kk > m - L) return 0;
  if (((m + k - L) % 2 + 2) % 2 != 0) return 0;
  if (L % 2 == 0)
    return binom((m + k) / 2, (m + k - L) / 2) * binom((m - k - 2) / 2, (m - k - L) / 2);
  return binom((m + k - 1) / 2, (m + k - L) / 2) * binom((m - k - 1) / 2, (m - k - L) / 2);
}

// One-parameter relation coefficients; the 2k/(m+k) division must be exact in
// every term, anything else would falsify the closed form.
inline AKVector a_one_param(int m) {
  if (m < 2) throw std::invalid_argument("a_one_param: m < 2");
  AKVector r;
  r.m = m;
  r.equal_params = true;
  for (int k = 1; k <= m; ++k) {
    LaurentPoly p;
    for (int pp = 0; pp <= (m - 1) / 2; ++pp) {
      Int al = alpha_one_param(m, k, 2 * pp);
      if (al == 0) continue;
      Int c = exact_div(Int(2 * k) * al, Int(m + k));
      Monomial mo;
      if (pp) mo["b0"] = 2 * pp;
      p.add_term(mo, c);
    }
    r.a[k] = p;
  }
  return r;
}

struct CheckReport {
  bool ok = true;
  std::string detail;
};

namespace genfun {

inline LaurentPoly T(int e = 1) { return LaurentPoly::var("t", e); }
inline LaurentPoly U(int e = 1) { return LaurentPoly::var("u", e); }
inline LaurentPoly V(int e = 1) { return LaurentPoly::var("v", e); }
inline LaurentPoly S(int e = 1) { return LaurentPoly::var("s", e); }

inline LaurentPoly C_num() {
  return LaurentPoly(1) + T() * (U() + S()) +
         T(2) * (V() * S() + U() * S(-1) - S(-2) - U() * V()) +
         T(3) * (LaurentPoly(1) - U(2)) * (V() - S(-1));
}
inline LaurentPoly C_den() {
  return LaurentPoly(1) - T(2) * (S(2) + S(-2) + LaurentPoly(2) * U() * V()) +
         T(4) * (U(2) - LaurentPoly(1)) * (V(2) - LaurentPoly(1));
}
inline LaurentPoly D_num() { return LaurentPoly(1) + T() * (U() - S(-1)); }
inline LaurentPoly D_den() {
  return LaurentPoly(1) - T() * (S() + S(-1)) + T(2) * (LaurentPoly(1) - U(2));
}

}  // namespace genfun

// Compare the series expansion of the four-variable generating function with
// the recursion tables, order by order.
inline CheckReport gen_check_C(int M) {
  CheckReport rep;
  TruncatedSeries s = series_expand(genfun::C_num(), genfun::C_den(), "t", M);
  for (int m = 0; m <= M; ++m) {
    AlphaTable t = alpha_table(m);
    LaurentPoly want;
    for (const auto& [key, v] : t.entries) {
      auto [k, l, lp] = key;
      Monomial mo;
      if (l) mo["u"] = l;
      if (lp) mo["v"] = lp;
      if (k) mo["s"] = k;
      want.add_term(mo, v);
    }
    if (s.at(m) != want) {
      rep.ok = false;
      std::ostringstream os;
      os << "C series mismatch at order " << m;
      rep.detail = os.str();
      return rep;
    }
  }
  rep.detail = "C series matches recursion";
  return rep;
}

// One-parameter generating function: series vs specialized C series vs the
// closed form, plus the even/odd split summing back to D.
inline CheckReport gen_check_D(int M) {
  CheckReport rep;
  TruncatedSeries d = series_expand(genfun::D_num(), genfun::D_den(), "t", M);

  TruncatedSeries c = series_expand(genfun::C_num(), genfun::C_den(), "t", M);
  std::map<std::string, LaurentPoly> vu{{"v", LaurentPoly::var("u")}};
  for (int m = 0; m <= M; ++m) {
    if (subst(c.at(m), vu) != d.at(m)) {
      rep.ok = false;
      rep.detail = "D differs from C with v = u at order " + std::to_string(m);
      return rep;
    }
  }

  for (int m = 0; m <= M; ++m) {
    LaurentPoly want;
    for (int L = 0; L <= m; ++L)
      for (int k = -m; k <= m; ++k) {
        Int v = alpha_one_param(m, k, L);
        if (v == 0) continue;
        Monomial mo;
        if (L) mo["u"] = L;
        if (k) mo["s"] = k;
        want.add_term(mo, v);
      }
    if (d.at(m) != want) {
      rep.ok = false;
      rep.detail = "closed form differs from D series at order " + std::to_string(m);
      return rep;
    }
  }

  // Even and odd parts, as explicit double sums.
  TruncatedSeries split(M, "t");
  for (int a = 0; 2 * a <= M; ++a)
    for (int b = 0; 2 * a + b <= M; ++b)
      for (int cc = 0; 2 * a + b + cc <= M; ++cc) {
        Int even = binom(a + b, b) * binom(a + cc - 1, cc);
        if (even != 0) {
          Monomial mo;
          if (a) mo["u"] = 2 * a;
          if (b != cc) mo["s"] = b - cc;
          split.coeffs[2 * a + b + cc].add_term(mo, even);
        }
        if (2 * a + 1 + b + cc <= M) {
          Int odd = binom(a + b, b) * binom(a + cc, cc);
          Monomial mo;
          mo["u"] = 2 * a + 1;
          if (b != cc) mo["s"] = b - cc;
          split.coeffs[2 * a + 1 + b + cc].add_term(mo, odd);
        }
      }
  for (int m = 0; m <= M; ++m) {
    if (split.at(m) != d.at(m)) {
      rep.ok = false;
      rep.detail = "even/odd split differs from D series at order " + std::to_string(m);
      return rep;
    }
  }

  rep.detail = "D series, specialized C, closed form and even/odd split agree";
  return rep;
}

// Closed form vs recursion, collapsed over l + l' = L; also the reflection
// identities relating alpha_{-k,L} to alpha_{k,L}.
inline CheckReport closed_form_check(int maxM) {
  CheckReport rep;
  for (int m = 0; m <= maxM; ++m) {
    AlphaTable t = alpha_table(m);
    std::map<std::pair<int, int>, Int> collapsed;
    for (const auto& [key, v] : t.entries) {
      auto [k, l, lp] = key;
      collapsed[{k, l + lp}] += v;
    }
    for (int k = -m; k <= m; ++k)
      for (int L = 0; L <= m; ++L) {
        auto it = collapsed.find({k, L});
        Int want = it == collapsed.end() ? Int(0) : it->second;
        if (alpha_one_param(m, k, L) != want) {
          rep.ok = false;
          rep.detail = "closed form mismatch at m=" + std::to_string(m) +
                       " k=" + std::to_string(k) + " L=" + std::to_string(L);
          return rep;
        }
      }
    for (int k = 0; k <= m; ++k)
      for (int L = 0; L <= m; ++L) {
        Int pos = alpha_one_param(m, k, L), neg = alpha_one_param(m, -k, L);
        bool good = (L % 2 == 1) ? neg == pos
                                 : Int(m + k) * neg == Int(m - k) * pos;
        if (!good) {
          rep.ok = false;
          rep.detail = "reflection identity fails at m=" + std::to_string(m) +
                       " k=" + std::to_string(k) + " L=" + std::to_string(L);
          return rep;
        }
      }
  }
  rep.detail = "closed form matches recursion and reflection identities";
  return rep;
}

}  // namespace alterna
