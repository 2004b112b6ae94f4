#pragma once
// The 2m-dimensional dihedral Hecke algebra with generators g_i, g_j subject
// to the quadratic relation g^2 = (q - q^-1) g + 1 and the braid relation
// identifying the two spellings of the length-m word.  Works over symbolic
// scalars or over exact rationals with q specialized.

#include <random>

#include "alpha.hpp"
#include "qscalar.hpp"

namespace alterna {

// Basis words are keyed by an integer: 0 is the identity, k > 0 the
// alternating word g_i g_j ... of length k, k < 0 the word starting with g_j;
// the length-m word appears once, under the positive key.
struct SymbolicField {
  std::vector<std::string> qvars;  // size 1 (identified parameters) or 2

  using Scalar = QScalar;

  const std::string& qv(int which) const {
    return qvars[which < static_cast<int>(qvars.size()) ? which : 0];
  }
  Scalar quad(int which) const {  // q - q^-1
    return QScalar(LaurentPoly::var(qv(which)) - LaurentPoly::var(qv(which), -1));
  }
  Scalar beta(int which) const {
    return div_qplus(quad(which), qv(which));
  }
  Scalar inv_qplus(int which) const {
    return div_qplus(QScalar(1), qv(which));
  }
};

struct NumericField {
  std::vector<Rat> qs;

  using Scalar = Rat;

  NumericField() = default;
  explicit NumericField(std::vector<Rat> values) : qs(std::move(values)) {
    for (const Rat& q : qs)
      if (q == 0 || q == 1 || q == -1)
        throw std::invalid_argument(
            "q must avoid 0 and +-1 (degenerate quadratic relation)");
  }

  Rat q(int which) const { return qs[which < static_cast<int>(qs.size()) ? which : 0]; }
  Scalar quad(int which) const { return q(which) - 1 / q(which); }
  Scalar beta(int which) const {
    return (q(which) - 1 / q(which)) / (q(which) + 1 / q(which));
  }
  Scalar inv_qplus(int which) const { return 1 / (q(which) + 1 / q(which)); }
};

template <class Field>
struct DihedralAlgebra {
  int m = 2;
  Field field;

  using Scalar = typename Field::Scalar;
  using Elem = std::map<int, Scalar>;

  DihedralAlgebra(int m_, Field f) : m(m_), field(std::move(f)) {
    if (m < 2) throw std::invalid_argument("dihedral algebra needs m >= 2");
  }

  static void strip(Elem& x) {
    for (auto it = x.begin(); it != x.end();)
      it = it->second == Scalar() ? x.erase(it) : std::next(it);
  }

  Elem unit() const { return {{0, Scalar(1)}}; }
  Elem gen(int which) const { return {{which == 0 ? 1 : -1, Scalar(1)}}; }

  bool in_basis(int k) const { return k > -m && k <= m; }

  // Left multiplication by g_i (which = 0) or g_j (which = 1) of a single
  // basis word, expressed over the basis again.
  void left_mul_word(int which, int k, const Scalar& c, Elem& acc) const {
    auto put = [&](int w, const Scalar& v) { acc[w] += v; };
    if (which == 0) {
      if (k == 0) {
        put(1, c);
      } else if (k > 0) {
        // word leads with g_i (the stored length-m word included)
        put(k, field.quad(0) * c);
        put(-(k - 1), c);
      } else {
        put(-k + 1, c);  // lands on the stored word when it reaches length m
      }
    } else {
      if (k == 0) {
        put(-1, c);
      } else if (k < 0) {
        put(k, field.quad(1) * c);
        put(-k - 1, c);
      } else if (k < m) {
        int len = k + 1;
        put(len == m ? m : -len, c);
      } else {
        // g_j times the length-m word, re-spelled to lead with g_j
        put(m, field.quad(1) * c);
        put(m - 1, c);
      }
    }
  }

  Elem left_mul_gen(int which, const Elem& x) const {
    Elem acc;
    for (const auto& [k, c] : x) left_mul_word(which, k, c, acc);
    strip(acc);
    return acc;
  }

  static std::vector<int> word_letters(int k) {
    std::vector<int> ls;
    int len = k < 0 ? -k : k;
    int lead = k < 0 ? 1 : 0;
    for (int p = 0; p < len; ++p) ls.push_back((p % 2 == 0) ? lead : 1 - lead);
    return ls;
  }

  Elem scale(const Scalar& c, Elem x) const {
    for (auto& [k, v] : x) {
      (void)k;
      v *= c;
    }
    strip(x);
    return x;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (const auto& [k, c] : b) r[k] += c;
    strip(r);
    return r;
  }

  Elem sub(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (const auto& [k, c] : b) r[k] -= c;
    strip(r);
    return r;
  }

  Elem mul(const Elem& x, const Elem& y) const {
    Elem out;
    for (const auto& [w, c] : x) {
      Elem v = y;
      std::vector<int> ls = word_letters(w);
      for (auto it = ls.rbegin(); it != ls.rend(); ++it) v = left_mul_gen(*it, v);
      for (const auto& [k, val] : v) out[k] += c * val;
    }
    strip(out);
    return out;
  }

  // Involution determined by g -> (q - q^-1) - g, extended multiplicatively;
  // scalars are fixed.
  Elem phi(const Elem& x) const {
    Elem out;
    for (const auto& [w, c] : x) {
      Elem v = unit();
      std::vector<int> ls = word_letters(w);
      for (auto it = ls.rbegin(); it != ls.rend(); ++it)
        v = sub(scale(field.quad(*it), v), left_mul_gen(*it, v));
      for (const auto& [k, val] : v) out[k] += c * val;
    }
    strip(out);
    return out;
  }

  // f = (2g - (q - q^-1)) / (q + q^-1)
  Elem f_gen(int which) const {
    Elem r;
    r[which == 0 ? 1 : -1] = field.inv_qplus(which) * Scalar(2);
    r[0] = -(field.inv_qplus(which) * field.quad(which));
    strip(r);
    return r;
  }

  bool is_zero(const Elem& x) const { return x.empty(); }
};

inline DihedralAlgebra<SymbolicField> make_symbolic_dihedral(int m,
                                                             bool equal_params) {
  if (m % 2 == 1 && !equal_params)
    throw std::invalid_argument("odd m forces identified parameters");
  SymbolicField f;
  f.qvars = equal_params ? std::vector<std::string>{"q0"}
                         : std::vector<std::string>{"q0", "q1"};
  return DihedralAlgebra<SymbolicField>(m, std::move(f));
}

inline DihedralAlgebra<NumericField> make_numeric_dihedral(int m, const Rat& qi,
                                                           const Rat& qj) {
  if (m % 2 == 1 && qi != qj)
    throw std::invalid_argument("odd m forces identified parameters");
  NumericField f(qi == qj ? std::vector<Rat>{qi} : std::vector<Rat>{qi, qj});
  return DihedralAlgebra<NumericField>(m, std::move(f));
}

// Evaluate a polynomial in b0, b1 on scalar values for the betas.
template <class Scalar>
Scalar eval_bpoly(const LaurentPoly& p, const Scalar& b0, const Scalar& b1) {
  Scalar out{};
  for (const auto& [mono, c] : p.terms) {
    Scalar term{Int(c)};
    for (const auto& [v, e] : mono) {
      if (e < 0) throw std::logic_error("eval_bpoly: negative exponent");
      const Scalar& base = v == "b0" ? b0 : b1;
      for (int t = 0; t < e; ++t) term *= base;
    }
    out += term;
  }
  return out;
}

// The defining-relation residual: sum over k of a_k ((f_i f_j)^{(m+k)/2} -
// (f_i f_j)^{(m-k)/2}); identically zero in the algebra.
template <class Field>
typename DihedralAlgebra<Field>::Elem relation_residual_in(
    const DihedralAlgebra<Field>& alg, const AKVector& ak) {
  using Scalar = typename Field::Scalar;
  using Elem = typename DihedralAlgebra<Field>::Elem;
  int m = alg.m;
  Scalar bi = alg.field.beta(0), bj = alg.field.beta(1);

  Elem P = alg.mul(alg.f_gen(0), alg.f_gen(1));
  std::vector<Elem> powers(m + 1);
  powers[0] = alg.unit();
  for (int p = 1; p <= m; ++p) powers[p] = alg.mul(powers[p - 1], P);

  Elem res;
  for (const auto& [k, poly] : ak.a) {
    if (poly.is_zero()) continue;
    Scalar c = eval_bpoly(poly, bi, bj);
    Elem diff = alg.sub(powers[(m + k) / 2], powers[(m - k) / 2]);
    res = alg.add(res, alg.scale(c, diff));
  }
  return res;
}

inline DihedralAlgebra<SymbolicField>::Elem relation_residual(int m,
                                                              bool equal_params) {
  auto alg = make_symbolic_dihedral(m, equal_params);
  return relation_residual_in(alg, a_vector(m, equal_params));
}

// Expansion of the braid difference in the span of free alternating f-words,
// coefficients polynomial in the betas.  Words are indexed like the algebra
// basis but without the braid identification, so k runs over -m..m.
template <class Coef>
std::map<int, Coef> braid_f_difference(int m, const Coef& bi, const Coef& bj) {
  auto lmul_f = [](int gen, int k) {
    if (gen == 0) return k == 0 ? 1 : (k > 0 ? -(k - 1) : -k + 1);
    return k == 0 ? -1 : (k > 0 ? -(k + 1) : -k - 1);
  };
  auto expand = [&](int lead) {
    std::map<int, Coef> v{{0, Coef(1)}};
    for (int p = m; p >= 1; --p) {
      int g = (p % 2 == 1) ? lead : 1 - lead;
      const Coef& b = g == 0 ? bi : bj;
      std::map<int, Coef> nv;
      for (const auto& [k, c] : v) {
        nv[lmul_f(g, k)] += c;
        nv[k] += b * c;
      }
      v = std::move(nv);
    }
    return v;
  };
  std::map<int, Coef> diff = expand(0);
  for (const auto& [k, c] : expand(1)) diff[k] -= c;
  for (auto it = diff.begin(); it != diff.end();)
    it = it->second == Coef() ? diff.erase(it) : std::next(it);
  return diff;
}

struct FExpansion {
  // k -> (coefficient of the word leading with f_i, of the one leading with f_j)
  std::map<int, std::pair<LaurentPoly, LaurentPoly>> pairs;
};

inline FExpansion braid_f_expansion(int m, bool equal_params) {
  if (m % 2 == 1 && !equal_params)
    throw std::invalid_argument("odd m forces identified parameters");
  LaurentPoly bi = LaurentPoly::var("b0");
  LaurentPoly bj = equal_params ? bi : LaurentPoly::var("b1");
  std::map<int, LaurentPoly> diff = braid_f_difference(m, bi, bj);
  FExpansion out;
  for (int k = 0; k <= m; ++k) {
    LaurentPoly pos = diff.count(k) ? diff[k] : LaurentPoly();
    LaurentPoly neg = diff.count(-k) ? diff[-k] : LaurentPoly();
    if (k == 0) neg = pos;
    if (!pos.is_zero() || !neg.is_zero()) out.pairs[k] = {pos, neg};
  }
  return out;
}

}  // namespace alterna
