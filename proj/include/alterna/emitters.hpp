#pragma once
// Presentation emitters for Coxeter groups, their braid groups, the
// alternating subobjects of both, and the Hecke-level deformations, plus the
// generator maps connecting them.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "alterna/alpha.hpp"
#include "alterna/coxeter.hpp"
#include "alterna/presentation.hpp"
#include "alterna/word.hpp"

namespace alterna {

inline std::string s_name(int i) { return "s" + std::to_string(i); }
inline std::string g_name(int i) { return "g" + std::to_string(i); }
inline std::string f_name(int i) { return "f" + std::to_string(i); }
inline std::string t_name(int i) { return "t" + std::to_string(i); }
inline std::string R_name(int i) { return "R" + std::to_string(i); }
inline std::string Rp_name(int i) { return "R'" + std::to_string(i); }
inline std::string Y_name(int i) { return "Y" + std::to_string(i); }

inline std::string edge_name(const char* base, int i, int j) {
  return std::string(base) + std::to_string(i) + "_" + std::to_string(j);
}
inline std::string r_name(int i, int j) { return edge_name("r", i, j); }
inline std::string y_name(int i, int j) { return edge_name("y", i, j); }

// Letter for the oriented edge x -> y; generators are stored with i < j.
inline FreeWord edge_letter(const char* base, int x, int y) {
  return x < y ? gen(edge_name(base, x, y)) : gen(edge_name(base, y, x), -1);
}

inline GroupPresentation coxeter_group(const CoxeterMatrix& mat) {
  GroupPresentation p;
  for (int i = 0; i < mat.n; ++i) p.generators.push_back(s_name(i));
  for (int i = 0; i < mat.n; ++i)
    p.relations.emplace_back(gen(s_name(i), 2), FreeWord{});
  for (int i = 0; i < mat.n; ++i)
    for (int j = i + 1; j < mat.n; ++j)
      if (mat.finite(i, j))
        p.relations.emplace_back(
            w_pow(gen(s_name(i)) * gen(s_name(j)), mat.at(i, j)), FreeWord{});
  return p;
}

inline GroupPresentation braid_group(const CoxeterMatrix& mat) {
  GroupPresentation p;
  for (int i = 0; i < mat.n; ++i) p.generators.push_back(g_name(i));
  for (int i = 0; i < mat.n; ++i)
    for (int j = i + 1; j < mat.n; ++j)
      if (mat.finite(i, j))
        p.relations.emplace_back(
            bracket(gen(g_name(i)), gen(g_name(j)), mat.at(i, j)),
            bracket(gen(g_name(j)), gen(g_name(i)), mat.at(i, j)));
  return p;
}

// Alternating subgroup, generators R_i with the vertex 0 distinguished.
inline GroupPresentation bourbaki_group(const CoxeterMatrix& mat) {
  GroupPresentation p;
  for (int i = 1; i < mat.n; ++i) p.generators.push_back(R_name(i));
  for (int i = 1; i < mat.n; ++i)
    if (mat.finite(0, i))
      p.relations.emplace_back(gen(R_name(i), mat.at(0, i)), FreeWord{});
  for (int i = 1; i < mat.n; ++i)
    for (int j = i + 1; j < mat.n; ++j)
      if (mat.finite(i, j))
        p.relations.emplace_back(
            w_pow(gen(R_name(i), -1) * gen(R_name(j)), mat.at(i, j)),
            FreeWord{});
  return p;
}

// Characteristic relation  sum_k a_k (w^{(m+k)/2} - w^{(m-k)/2}) = 0  for the
// base word w, with the coefficient variables named after parameter classes.
inline AlgebraRelation characteristic_relation(int m, const FreeWord& base,
                                               const std::string& bi,
                                               const std::string& bj) {
  AKVector v = a_vector(m, bi == bj);
  std::map<std::string, LaurentPoly> vars;
  vars["b0"] = LaurentPoly::var(bi);
  if (!v.equal_params) vars["b1"] = LaurentPoly::var(bj);
  AlgebraRelation rel;
  for (auto it = v.a.rbegin(); it != v.a.rend(); ++it) {
    const auto& [k, ak] = *it;
    if (ak.is_zero()) continue;
    LaurentPoly c = subst(ak, vars);
    rel.terms.push_back({c, w_pow(base, (m + k) / 2)});
    rel.terms.push_back({LaurentPoly(0) - c, w_pow(base, (m - k) / 2)});
  }
  return rel;
}

inline AlgebraPresentation bourbaki_hecke(const CoxeterMatrix& mat) {
  ParamClass pc = parameter_classes(mat);
  auto bvar = [&](int v) { return "b" + std::to_string(pc.class_of[v]); };
  AlgebraPresentation p;
  for (int i = 1; i < mat.n; ++i) p.generators.push_back(Y_name(i));
  for (int i = 1; i < mat.n; ++i)
    if (mat.finite(0, i))
      p.relations.push_back(characteristic_relation(
          mat.at(0, i), gen(Y_name(i)), bvar(0), bvar(i)));
  for (int i = 1; i < mat.n; ++i)
    for (int j = i + 1; j < mat.n; ++j)
      if (mat.finite(i, j))
        p.relations.push_back(characteristic_relation(
            mat.at(i, j), gen(Y_name(i), -1) * gen(Y_name(j)), bvar(i),
            bvar(j)));
  return p;
}

namespace detail {

// Vertex paths (i, j, k) with i < k, m_ik = 2, consecutive pairs being edges
// of the extension; and (i, j, k, l) with i < l, m_il = 2, vertices distinct.
struct ChainLists {
  std::vector<std::array<int, 3>> two;
  std::vector<std::array<int, 4>> three;
};

inline ChainLists chains(const CoxeterMatrix& mat, const CoxGraph& g) {
  ChainLists out;
  auto adj = g.adjacency();
  for (int j = 0; j < g.n; ++j)
    for (int i : adj[j])
      for (int k : adj[j])
        if (i < k && mat.at(i, k) == 2) out.two.push_back({i, j, k});
  for (int j = 0; j < g.n; ++j)
    for (int k : adj[j]) {
      if (k == j) continue;
      for (int i : adj[j]) {
        if (i == j || i == k) continue;
        for (int l : adj[k]) {
          if (l == i || l == j || l == k) continue;
          if (i < l && mat.at(i, l) == 2) out.three.push_back({i, j, k, l});
        }
      }
    }
  return out;
}

inline bool edges_not_connected(const CoxGraph& g, std::pair<int, int> e1,
                                std::pair<int, int> e2) {
  int a[2] = {e1.first, e1.second}, b[2] = {e2.first, e2.second};
  for (int x : a)
    for (int y : b) {
      if (x == y) return false;
      auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
      if (g.edges.count(key)) return false;
    }
  return true;
}

inline std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>
commuting_edge_pairs(const CoxGraph& g) {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (auto it1 = g.edges.begin(); it1 != g.edges.end(); ++it1)
    for (auto it2 = std::next(it1); it2 != g.edges.end(); ++it2)
      if (edges_not_connected(g, it1->first, it2->first))
        out.push_back({it1->first, it2->first});
  return out;
}

inline FreeWord walk_word(const char* base, const std::vector<int>& walk) {
  FreeWord w;
  for (size_t i = 0; i + 1 < walk.size(); ++i)
    w = w * edge_letter(base, walk[i], walk[i + 1]);
  return w;
}

}  // namespace detail

// Alternating subgroup on one generator per oriented edge of the connected
// extension.
inline GroupPresentation edge_group(const CoxeterMatrix& mat) {
  CoxGraph g = connected_extension(mat);
  GroupPresentation p;
  for (const auto& [e, label] : g.edges) {
    (void)label;
    p.generators.push_back(r_name(e.first, e.second));
  }
  for (const auto& [e, label] : g.edges)
    if (label != 0)
      p.relations.emplace_back(gen(r_name(e.first, e.second), label),
                               FreeWord{});
  for (const auto& cyc : cycle_basis(g).cycles)
    p.relations.emplace_back(detail::walk_word("r", cyc), FreeWord{});
  auto ch = detail::chains(mat, g);
  for (const auto& [i, j, k] : ch.two)
    p.relations.emplace_back(
        w_pow(edge_letter("r", i, j) * edge_letter("r", j, k), 2), FreeWord{});
  for (const auto& [i, j, k, l] : ch.three)
    p.relations.emplace_back(w_pow(edge_letter("r", i, j) *
                                       edge_letter("r", j, k) *
                                       edge_letter("r", k, l),
                                   2),
                             FreeWord{});
  for (const auto& [e1, e2] : detail::commuting_edge_pairs(g)) {
    FreeWord w1 = gen(r_name(e1.first, e1.second));
    FreeWord w2 = gen(r_name(e2.first, e2.second));
    p.relations.emplace_back(w1 * w2, w2 * w1);
  }
  return p;
}

// Deformation of edge_group: the torsion relation on each edge is replaced by
// the characteristic relation, everything else is kept verbatim.
inline AlgebraPresentation edge_hecke(const CoxeterMatrix& mat) {
  CoxGraph g = connected_extension(mat);
  ParamClass pc = parameter_classes(mat);
  auto bvar = [&](int v) { return "b" + std::to_string(pc.class_of[v]); };
  AlgebraPresentation p;
  for (const auto& [e, label] : g.edges) {
    (void)label;
    p.generators.push_back(y_name(e.first, e.second));
  }
  auto group_style = [&](const FreeWord& lhs, const FreeWord& rhs) {
    AlgebraRelation rel;
    rel.terms.push_back({LaurentPoly(1), lhs});
    rel.terms.push_back({LaurentPoly(-1), rhs});
    p.relations.push_back(rel);
  };
  for (const auto& [e, label] : g.edges)
    if (label != 0)
      p.relations.push_back(
          characteristic_relation(label, gen(y_name(e.first, e.second)),
                                  bvar(e.first), bvar(e.second)));
  for (const auto& cyc : cycle_basis(g).cycles)
    group_style(detail::walk_word("y", cyc), FreeWord{});
  auto ch = detail::chains(mat, g);
  for (const auto& [i, j, k] : ch.two)
    group_style(w_pow(edge_letter("y", i, j) * edge_letter("y", j, k), 2),
                FreeWord{});
  for (const auto& [i, j, k, l] : ch.three)
    group_style(w_pow(edge_letter("y", i, j) * edge_letter("y", j, k) *
                          edge_letter("y", k, l),
                      2),
                FreeWord{});
  for (const auto& [e1, e2] : detail::commuting_edge_pairs(g)) {
    FreeWord w1 = gen(y_name(e1.first, e1.second));
    FreeWord w2 = gen(y_name(e2.first, e2.second));
    group_style(w1 * w2, w2 * w1);
  }
  return p;
}

// Alternating subgroup of the braid group, Bourbaki style.
inline GroupPresentation bourbaki_braid(const CoxeterMatrix& mat) {
  GroupPresentation p;
  for (int i = 0; i < mat.n; ++i) p.generators.push_back(R_name(i));
  for (int i = 0; i < mat.n; ++i) p.generators.push_back(Rp_name(i));
  p.relations.emplace_back(gen(Rp_name(0)), FreeWord{});
  for (int i = 0; i < mat.n; ++i)
    for (int j = i + 1; j < mat.n; ++j) {
      if (!mat.finite(i, j)) continue;
      int m = mat.at(i, j);
      p.relations.emplace_back(bracket(gen(Rp_name(i)), gen(R_name(j)), m),
                               bracket(gen(Rp_name(j)), gen(R_name(i)), m));
      p.relations.emplace_back(bracket(gen(R_name(i)), gen(Rp_name(j)), m),
                               bracket(gen(R_name(j)), gen(Rp_name(i)), m));
    }
  return p;
}

// Alternating subgroup of the braid group on edge generators r_ij and the
// squares t_i.  A label-2 edge (added ones are such) uses the even family
// with exponent 1.
inline GroupPresentation edge_braid(const CoxeterMatrix& mat) {
  CoxGraph g = connected_extension(mat);
  GroupPresentation p;
  for (const auto& [e, label] : g.edges) {
    (void)label;
    p.generators.push_back(r_name(e.first, e.second));
  }
  for (int i = 0; i < mat.n; ++i) p.generators.push_back(t_name(i));
  for (const auto& cyc : cycle_basis(g).cycles)
    p.relations.emplace_back(detail::walk_word("r", cyc), FreeWord{});
  auto ch = detail::chains(mat, g);
  for (const auto& [i, j, k] : ch.two) {
    FreeWord fwd = edge_letter("r", i, j) * edge_letter("r", j, k);
    FreeWord rhs =
        edge_letter("r", k, j) * edge_letter("r", j, i) * gen(t_name(i));
    p.relations.emplace_back(fwd * gen(t_name(k)), rhs);
    p.relations.emplace_back(gen(t_name(k)) * fwd, rhs);
  }
  for (const auto& [i, j, k, l] : ch.three) {
    FreeWord fwd = edge_letter("r", i, j) * edge_letter("r", j, k) *
                   edge_letter("r", k, l);
    FreeWord rhs = edge_letter("r", l, k) * edge_letter("r", k, j) *
                   edge_letter("r", j, i) * gen(t_name(i));
    p.relations.emplace_back(fwd * gen(t_name(l)), rhs);
    p.relations.emplace_back(gen(t_name(l)) * fwd, rhs);
  }
  for (const auto& [e, label] : g.edges) {
    if (label == 0) continue;
    auto [i, j] = e;
    FreeWord rij = gen(r_name(i, j)), rji = gen(r_name(i, j), -1);
    FreeWord ti = gen(t_name(i)), tj = gen(t_name(j));
    if (label % 2 == 0) {
      int h = label / 2;
      p.relations.emplace_back(w_pow(rij * tj, h), w_pow(rji * ti, h));
      p.relations.emplace_back(w_pow(tj * rij, h), w_pow(rji * ti, h));
    } else {
      int h = (label - 1) / 2;
      p.relations.emplace_back(w_pow(rij * tj, h) * rij, w_pow(rji * ti, h));
      p.relations.emplace_back(w_pow(rij * tj, h + 1),
                               ti * w_pow(rji * ti, h));
    }
  }
  for (const auto& [e1, e2] : detail::commuting_edge_pairs(g)) {
    FreeWord w1 = gen(r_name(e1.first, e1.second));
    FreeWord w2 = gen(r_name(e2.first, e2.second));
    p.relations.emplace_back(w1 * w2, w2 * w1);
  }
  return p;
}

// The two hardcoded type-A presentations of the alternating braid subgroup:
// first on R_0..R_{n-1}, second on the chain generators r_i = r_{i-1,i} and
// the squares t_i.
inline std::pair<GroupPresentation, GroupPresentation> typeA_presentations(
    int n) {
  if (n < 2) throw std::invalid_argument("type A presentations need rank >= 2");
  GroupPresentation a;
  for (int i = 0; i < n; ++i) a.generators.push_back(R_name(i));
  auto R = [&](int i, int e = 1) { return gen(R_name(i), e); };
  a.relations.emplace_back(R(0) * R(1) * R(0), R(1, 2) * R(0, -1) * R(1, 2));
  for (int j = 2; j < n; ++j)
    a.relations.emplace_back(R(0) * R(j), R(j) * R(0));
  if (n >= 3) {
    a.relations.emplace_back(
        R(2) * R(1) * R(2),
        R(1, 2) * R(0, -1) * R(2) * R(0, -1) * R(1, 2));
    a.relations.emplace_back(R(2) * R(1, 2) * R(2),
                             R(0) * R(1) * R(2) * R(0, -1) * R(1) * R(0));
  }
  for (int j = 3; j < n; ++j) {
    a.relations.emplace_back(R(1, 2) * R(j), R(j) * R(1) * R(0));
    a.relations.emplace_back(R(j) * R(1, 2), R(0) * R(1) * R(j));
  }
  for (int i = 2; i + 1 < n; ++i)
    a.relations.emplace_back(R(i) * R(i + 1) * R(i),
                             R(i + 1) * R(i) * R(i + 1));
  for (int i = 2; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      a.relations.emplace_back(R(i) * R(j), R(j) * R(i));

  GroupPresentation b;
  for (int i = 1; i < n; ++i) b.generators.push_back("r" + std::to_string(i));
  for (int i = 0; i < n; ++i) b.generators.push_back(t_name(i));
  auto r = [&](int i, int e = 1) { return gen("r" + std::to_string(i), e); };
  auto t = [&](int i, int e = 1) { return gen(t_name(i), e); };
  for (int i = 1; i + 1 < n; ++i) {
    FreeWord rhs = r(i + 1, -1) * r(i, -1) * t(i - 1);
    b.relations.emplace_back(r(i) * r(i + 1) * t(i + 1), rhs);
    b.relations.emplace_back(t(i + 1) * r(i) * r(i + 1), rhs);
  }
  for (int i = 1; i + 2 < n; ++i) {
    FreeWord rhs = r(i + 2, -1) * r(i + 1, -1) * r(i, -1) * t(i - 1);
    b.relations.emplace_back(r(i) * r(i + 1) * r(i + 2) * t(i + 2), rhs);
    b.relations.emplace_back(t(i + 2) * r(i) * r(i + 1) * r(i + 2), rhs);
  }
  for (int i = 1; i < n; ++i) {
    b.relations.emplace_back(r(i) * t(i) * r(i), r(i, -1) * t(i - 1));
    b.relations.emplace_back(w_pow(r(i) * t(i), 2),
                             t(i - 1) * r(i, -1) * t(i - 1));
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 3; j < n; ++j)
      b.relations.emplace_back(r(i) * r(j), r(j) * r(i));
  return {a, b};
}

// Path from 0 to v along the breadth-first spanning tree, as a vertex list.
inline std::vector<int> tree_path(const std::vector<int>& parent, int v) {
  std::vector<int> path;
  for (int x = v; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

// All generator maps between the presentations, keyed by name.
inline std::map<std::string, GenMap> iso_maps(const CoxeterMatrix& mat) {
  std::map<std::string, GenMap> maps;
  CoxGraph g = connected_extension(mat);
  std::vector<int> parent = spanning_tree(g);

  GenMap to_cox;
  for (int i = 1; i < mat.n; ++i)
    to_cox.images[R_name(i)] = gen(s_name(0)) * gen(s_name(i));
  maps["group-bourbaki"] = to_cox;

  GenMap edge_cox;
  for (const auto& [e, label] : g.edges) {
    (void)label;
    edge_cox.images[r_name(e.first, e.second)] =
        gen(s_name(e.first)) * gen(s_name(e.second));
  }
  maps["group-edge"] = edge_cox;

  GenMap hecke_f;
  for (int i = 1; i < mat.n; ++i)
    hecke_f.images[Y_name(i)] = gen(f_name(0)) * gen(f_name(i));
  maps["hecke-bourbaki"] = hecke_f;

  GenMap real;
  for (const auto& [e, label] : g.edges) {
    (void)label;
    auto [i, j] = e;
    real.images[y_name(i, j)] =
        i == 0 ? gen(Y_name(j)) : gen(Y_name(i), -1) * gen(Y_name(j));
  }
  maps["hecke-edge-to-bourbaki"] = real;

  GenMap inv_real;
  for (int i = 1; i < mat.n; ++i)
    inv_real.images[Y_name(i)] = detail::walk_word("y", tree_path(parent, i));
  maps["hecke-bourbaki-to-edge"] = inv_real;

  GenMap iso_braid;
  for (int i = 0; i < mat.n; ++i) {
    iso_braid.images[R_name(i)] = gen(g_name(0)) * gen(g_name(i));
    iso_braid.images[Rp_name(i)] = gen(g_name(i)) * gen(g_name(0), -1);
  }
  maps["braid-bourbaki"] = iso_braid;

  GenMap iso_braid2;
  for (const auto& [e, label] : g.edges) {
    (void)label;
    iso_braid2.images[r_name(e.first, e.second)] =
        gen(g_name(e.first)) * gen(g_name(e.second), -1);
  }
  for (int i = 0; i < mat.n; ++i)
    iso_braid2.images[t_name(i)] = gen(g_name(i), 2);
  maps["braid-edge"] = iso_braid2;

  GenMap edge_to_bourbaki;
  for (const auto& [e, label] : g.edges) {
    (void)label;
    auto [i, j] = e;
    edge_to_bourbaki.images[r_name(i, j)] =
        gen(Rp_name(i)) * gen(Rp_name(j), -1);
  }
  for (int i = 0; i < mat.n; ++i)
    edge_to_bourbaki.images[t_name(i)] = gen(Rp_name(i)) * gen(R_name(i));
  maps["braid-edge-to-bourbaki"] = edge_to_bourbaki;

  GenMap bourbaki_to_edge;
  bourbaki_to_edge.images[R_name(0)] = gen(t_name(0));
  bourbaki_to_edge.images[Rp_name(0)] = FreeWord{};
  for (int i = 1; i < mat.n; ++i) {
    FreeWord path = detail::walk_word("r", tree_path(parent, i));
    bourbaki_to_edge.images[R_name(i)] = path * gen(t_name(i));
    bourbaki_to_edge.images[Rp_name(i)] = inverse(path);
  }
  maps["braid-bourbaki-to-edge"] = bourbaki_to_edge;

  GenMap omega;
  for (int i = 0; i < mat.n; ++i) {
    omega.images[R_name(i)] = gen(Rp_name(i)) * gen(R_name(0));
    omega.images[Rp_name(i)] = gen(R_name(0), -1) * gen(R_name(i));
  }
  maps["omega"] = omega;
  // The reversal anti-automorphism acts on generators by the same images as
  // omega; callers apply it with word reversal.
  maps["tau-bourbaki"] = omega;

  GenMap tau_edge;
  for (const auto& [e, label] : g.edges) {
    (void)label;
    auto [i, j] = e;
    tau_edge.images[r_name(i, j)] =
        gen(t_name(j), -1) * gen(r_name(i, j), -1) * gen(t_name(i));
  }
  for (int i = 0; i < mat.n; ++i) tau_edge.images[t_name(i)] = gen(t_name(i));
  maps["tau-edge"] = tau_edge;

  return maps;
}

// Quotient checks: the braid-level presentations collapse onto the group
// presentations under the expected specializations.
inline bool bourbaki_quotient_check(const CoxeterMatrix& mat) {
  GenMap q;
  q.images[R_name(0)] = FreeWord{};
  q.images[Rp_name(0)] = FreeWord{};
  for (int i = 1; i < mat.n; ++i) {
    q.images[R_name(i)] = gen(R_name(i));
    q.images[Rp_name(i)] = gen(R_name(i), -1);
  }
  GroupPresentation reduced =
      substitute(bourbaki_braid(mat), q, bourbaki_group(mat).generators);
  return relation_set(reduced) == relation_set(bourbaki_group(mat));
}

inline bool edge_quotient_check(const CoxeterMatrix& mat) {
  CoxGraph g = connected_extension(mat);
  GenMap q;
  for (const auto& [e, label] : g.edges) {
    (void)label;
    q.images[r_name(e.first, e.second)] = gen(r_name(e.first, e.second));
  }
  for (int i = 0; i < mat.n; ++i) q.images[t_name(i)] = FreeWord{};
  GroupPresentation reduced =
      substitute(edge_braid(mat), q, edge_group(mat).generators);
  return relation_set(reduced) == relation_set(edge_group(mat));
}

}  // namespace alterna
