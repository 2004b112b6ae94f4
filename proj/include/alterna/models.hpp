#pragma once
// Concrete faithful models used to sanity-check presentations: permutation
// realizations of the finite reflection groups in the test corpus, an integer
// matrix realization for crystallographic matrices, and a small metabelian
// quotient of the rank-2 braid group.

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "alterna/coxeter.hpp"
#include "alterna/perm.hpp"

namespace alterna {

// ---------------------------------------------------------------------------
// Z[phi] with phi^2 = phi + 1, enough arithmetic for icosahedral root systems.

struct GoldInt {
  long long a = 0;  // rational part
  long long b = 0;  // coefficient of phi

  friend GoldInt operator+(GoldInt x, GoldInt y) { return {x.a + y.a, x.b + y.b}; }
  friend GoldInt operator-(GoldInt x, GoldInt y) { return {x.a - y.a, x.b - y.b}; }
  friend GoldInt operator-(GoldInt x) { return {-x.a, -x.b}; }
  friend GoldInt operator*(GoldInt x, GoldInt y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend bool operator==(GoldInt x, GoldInt y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(GoldInt x, GoldInt y) { return !(x == y); }
  friend bool operator<(GoldInt x, GoldInt y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

inline GoldInt gold_half(GoldInt x) {
  if (x.a % 2 != 0 || x.b % 2 != 0)
    throw std::logic_error("inexact halving in Z[phi]");
  return {x.a / 2, x.b / 2};
}

namespace detail {

using H3Root = std::array<GoldInt, 3>;

inline GoldInt h3_dot(const H3Root& x, const H3Root& y) {
  GoldInt s;
  for (int i = 0; i < 3; ++i) s = s + x[i] * y[i];
  return s;
}

// The 30 icosahedral roots, scaled by 2 so every coordinate is in Z[phi]:
// cyclic shifts of (+-2, 0, 0) and of (+-1, +-phi, +-(phi-1)), all of norm 4.
inline std::vector<H3Root> h3_roots() {
  const GoldInt one{1, 0}, phi{0, 1}, phim1{-1, 1}, zero{0, 0}, two{2, 0};
  std::set<H3Root> roots;
  for (int pos = 0; pos < 3; ++pos) {
    for (int s = -1; s <= 1; s += 2) {
      H3Root r{zero, zero, zero};
      r[pos] = s > 0 ? two : -two;
      roots.insert(r);
    }
  }
  for (int rot = 0; rot < 3; ++rot) {
    for (int s0 = -1; s0 <= 1; s0 += 2)
      for (int s1 = -1; s1 <= 1; s1 += 2)
        for (int s2 = -1; s2 <= 1; s2 += 2) {
          H3Root r;
          r[rot] = s0 > 0 ? one : -one;
          r[(rot + 1) % 3] = s1 > 0 ? phi : -phi;
          r[(rot + 2) % 3] = s2 > 0 ? phim1 : -phim1;
          roots.insert(r);
        }
  }
  return {roots.begin(), roots.end()};
}

inline H3Root h3_reflect(const H3Root& x, const H3Root& alpha) {
  GoldInt c = gold_half(h3_dot(x, alpha));
  H3Root out;
  for (int i = 0; i < 3; ++i) out[i] = x[i] - c * alpha[i];
  return out;
}

inline std::vector<Permutation> h3_model() {
  auto roots = h3_roots();
  std::map<H3Root, int> index;
  for (size_t i = 0; i < roots.size(); ++i) index[roots[i]] = static_cast<int>(i);

  // Simple roots pinned by their pairwise inner products: -2*phi for the
  // order-5 pair, -2 for the order-3 pair, 0 for the commuting pair.
  const GoldInt m2phi{0, -2}, m2{-2, 0}, zero{0, 0};
  std::array<H3Root, 3> simple;
  bool found = false;
  for (const auto& a0 : roots) {
    for (const auto& a1 : roots) {
      if (h3_dot(a0, a1) != m2phi) continue;
      for (const auto& a2 : roots) {
        if (h3_dot(a1, a2) == m2 && h3_dot(a0, a2) == zero) {
          simple = {a0, a1, a2};
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (found) break;
  }
  if (!found) throw std::logic_error("no icosahedral simple system found");

  std::vector<Permutation> gens;
  for (const auto& alpha : simple) {
    Permutation p = Permutation::identity(roots.size());
    for (size_t i = 0; i < roots.size(); ++i)
      p.images[i] = index.at(h3_reflect(roots[i], alpha));
    gens.push_back(validated_permutation(p.images));
  }
  return gens;
}

}  // namespace detail

// Permutation generators matching the labeling of named_matrix(name):
// A{n} on n+1 points, B{n} and D{n} on the 2n signed coordinate axes,
// I2({m}) on the m-gon (four points when m = 2), H3 on the 30 roots.
inline std::vector<Permutation> coxeter_model(const std::string& name) {
  if (name == "H3") return detail::h3_model();
  if (name.rfind("I2(", 0) == 0 && name.back() == ')') {
    int m = std::stoi(name.substr(3, name.size() - 4));
    if (m == 2) {
      return {transposition(4, 0, 1), transposition(4, 2, 3)};
    }
    if (m >= 3) {
      Permutation s0 = Permutation::identity(m), s1 = Permutation::identity(m);
      for (int k = 0; k < m; ++k) {
        s0.images[k] = (m - k) % m;
        s1.images[k] = (m + 1 - k) % m;
      }
      return {validated_permutation(s0.images), validated_permutation(s1.images)};
    }
  }
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B' || name[0] == 'D')) {
    int n = std::stoi(name.substr(1));
    if (name[0] == 'A' && n >= 1) {
      std::vector<Permutation> gens;
      for (int i = 0; i < n; ++i) gens.push_back(transposition(n + 1, i, i + 1));
      return gens;
    }
    auto coord_swap = [&](int a, int b) {
      Permutation p = Permutation::identity(2 * n);
      std::swap(p.images[a], p.images[b]);
      std::swap(p.images[n + a], p.images[n + b]);
      return p;
    };
    if (name[0] == 'B' && n >= 2) {
      std::vector<Permutation> gens{transposition(2 * n, 0, n)};
      for (int i = 1; i < n; ++i) gens.push_back(coord_swap(i - 1, i));
      return gens;
    }
    if (name[0] == 'D' && n >= 4) {
      Permutation s0 = Permutation::identity(2 * n);
      std::swap(s0.images[0], s0.images[n + 1]);
      std::swap(s0.images[1], s0.images[n]);
      std::vector<Permutation> gens{s0, coord_swap(0, 1)};
      for (int i = 2; i < n; ++i) gens.push_back(coord_swap(i - 1, i));
      return gens;
    }
  }
  throw std::invalid_argument("no permutation model for type: " + name);
}

inline size_t coxeter_order(const std::string& name) {
  auto factorial = [](int n) {
    size_t f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
  };
  if (name == "H3") return 120;
  if (name.rfind("I2(", 0) == 0 && name.back() == ')')
    return 2 * std::stoi(name.substr(3, name.size() - 4));
  int n = std::stoi(name.substr(1));
  if (name[0] == 'A') return factorial(n + 1);
  if (name[0] == 'B') return (size_t{1} << n) * factorial(n);
  if (name[0] == 'D') return (size_t{1} << (n - 1)) * factorial(n);
  throw std::invalid_argument("no stored order for type: " + name);
}

// ---------------------------------------------------------------------------
// Integer matrix realization, available when every off-diagonal label is 2 or
// 3.  Covers crystallographic cases with no finite permutation model, like the
// triangle with all labels 3.

struct IntMatrix {
  int n = 0;
  std::vector<long long> a;

  static IntMatrix identity(int n) {
    IntMatrix m{n, std::vector<long long>(static_cast<size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  long long& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  long long at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix out{x.n, std::vector<long long>(static_cast<size_t>(x.n) * x.n, 0)};
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        long long v = x.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < x.n; ++j) out.at(i, j) += v * y.at(k, j);
      }
    return out;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.n == y.n && x.a == y.a;
  }
  friend bool operator!=(const IntMatrix& x, const IntMatrix& y) {
    return !(x == y);
  }
};

// Reflection s_i sends e_i to -e_i and e_j to e_j + e_i when m(i,j) = 3.
inline std::vector<IntMatrix> matrix_model(const CoxeterMatrix& mat) {
  for (int i = 0; i < mat.n; ++i)
    for (int j = i + 1; j < mat.n; ++j)
      if (mat.at(i, j) != 2 && mat.at(i, j) != 3)
        throw std::invalid_argument(
            "matrix model needs all off-diagonal labels in {2, 3}");
  std::vector<IntMatrix> gens;
  for (int i = 0; i < mat.n; ++i) {
    IntMatrix s = IntMatrix::identity(mat.n);
    s.at(i, i) = -1;
    for (int j = 0; j < mat.n; ++j)
      if (j != i && mat.at(i, j) == 3) s.at(i, j) = 1;
    gens.push_back(s);
  }
  return gens;
}

// ---------------------------------------------------------------------------
// The wreath-like group (Z^2) x| S2, written as (flip, v): flip swaps the two
// coordinates before adding.  Quotient of the rank-2 braid group via
// g0 -> (swap, (0,0)), g1 -> (id, (1,0)).

struct MetaElt {
  bool flip = false;
  long long v0 = 0, v1 = 0;

  friend MetaElt operator*(const MetaElt& x, const MetaElt& y) {
    long long w0 = x.flip ? y.v1 : y.v0;
    long long w1 = x.flip ? y.v0 : y.v1;
    return {x.flip != y.flip, x.v0 + w0, x.v1 + w1};
  }
  friend bool operator==(const MetaElt& x, const MetaElt& y) {
    return x.flip == y.flip && x.v0 == y.v0 && x.v1 == y.v1;
  }
  friend bool operator!=(const MetaElt& x, const MetaElt& y) { return !(x == y); }
};

inline MetaElt meta_inverse(const MetaElt& x) {
  MetaElt inv{x.flip, 0, 0};
  long long w0 = x.flip ? x.v1 : x.v0;
  long long w1 = x.flip ? x.v0 : x.v1;
  inv.v0 = -w0;
  inv.v1 = -w1;
  return inv;
}

inline std::map<std::string, MetaElt> metabelian_assignment() {
  return {{"g0", MetaElt{true, 0, 0}}, {"g1", MetaElt{false, 1, 0}}};
}

inline MetaElt eval_meta(const FreeWord& w,
                         const std::map<std::string, MetaElt>& assign) {
  return eval_word<MetaElt>(w, assign, MetaElt{},
                            [](const MetaElt& x) { return meta_inverse(x); });
}

// Whether target lies in the subgroup generated by gens, scanning products of
// length at most depth in a breadth-first sweep.
inline bool meta_in_subgroup(const MetaElt& target,
                             const std::vector<MetaElt>& gens, int depth) {
  struct Key {
    bool flip;
    long long v0, v1;
    bool operator<(const Key& o) const {
      if (flip != o.flip) return flip < o.flip;
      if (v0 != o.v0) return v0 < o.v0;
      return v1 < o.v1;
    }
  };
  auto key = [](const MetaElt& e) { return Key{e.flip, e.v0, e.v1}; };
  std::vector<MetaElt> all = gens;
  for (const auto& g : gens) all.push_back(meta_inverse(g));
  std::set<Key> seen{key(MetaElt{})};
  std::vector<MetaElt> frontier{MetaElt{}};
  if (target == MetaElt{}) return true;
  for (int d = 0; d < depth; ++d) {
    std::vector<MetaElt> next;
    for (const auto& e : frontier)
      for (const auto& g : all) {
        MetaElt h = e * g;
        if (h == target) return true;
        if (seen.insert(key(h)).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace alterna
