#pragma once
// Cross-check suites: every presentation is run against an independent model
// (permutations, integer matrices, free-group automorphisms, coset
// enumeration) and the coefficient machinery against its own recursions.

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "alterna/alpha.hpp"
#include "alterna/artin.hpp"
#include "alterna/dihedral.hpp"
#include "alterna/emitters.hpp"
#include "alterna/models.hpp"
#include "alterna/perm.hpp"
#include "alterna/schreier.hpp"
#include "alterna/toddcoxeter.hpp"

namespace alterna {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline void add(SuiteReport& rep, const std::string& name, bool pass,
                const std::string& note = "") {
  rep.checks.push_back({name, pass, note});
}

}  // namespace detail

inline std::vector<std::string> default_corpus() {
  std::vector<std::string> names{"A2", "A3", "A4", "B2", "B3", "D4", "H3"};
  for (int m = 2; m <= 12; ++m) names.push_back("I2(" + std::to_string(m) + ")");
  return names;
}

// ---------------------------------------------------------------------------
// Relation checking in an arbitrary model.

template <class T, class Inv>
std::vector<size_t> check_relations(const GroupPresentation& pres,
                                    const std::map<std::string, T>& assign,
                                    const T& one, Inv inv) {
  std::vector<size_t> failed;
  for (size_t i = 0; i < pres.relations.size(); ++i) {
    T lhs = eval_word(pres.relations[i].first, assign, one, inv);
    T rhs = eval_word(pres.relations[i].second, assign, one, inv);
    if (!(lhs == rhs)) failed.push_back(i);
  }
  return failed;
}

inline std::vector<size_t> check_relations(
    const GroupPresentation& pres,
    const std::map<std::string, Permutation>& assign) {
  if (assign.empty()) return {};
  int deg = assign.begin()->second.degree();
  return check_relations(pres, assign, Permutation::identity(deg),
                         [](const Permutation& p) { return p_inverse(p); });
}

inline std::vector<size_t> check_relations(
    const GroupPresentation& pres,
    const std::map<std::string, FreeGroupAuto>& assign,
    const std::vector<std::string>& basis) {
  return check_relations(pres, assign, FreeGroupAuto::identity(basis),
                         [](const FreeGroupAuto& a) { return a_inverse(a); });
}

// Generators of the named reflection group keyed s0, s1, ...
inline std::map<std::string, Permutation> coxeter_assignment(
    const std::string& name) {
  auto gens = coxeter_model(name);
  std::map<std::string, Permutation> out;
  for (size_t i = 0; i < gens.size(); ++i)
    out[s_name(static_cast<int>(i))] = gens[i];
  return out;
}

// Push a generator map through a base assignment, giving model elements for
// the mapped presentation's generators.
inline std::map<std::string, Permutation> perm_images(
    const GenMap& gm, const std::map<std::string, Permutation>& base) {
  std::map<std::string, Permutation> out;
  int deg = base.begin()->second.degree();
  for (const auto& [g, w] : gm.images) out[g] = eval_word(w, base, deg);
  return out;
}

inline std::map<std::string, FreeGroupAuto> auto_images(
    const GenMap& gm, const std::map<std::string, FreeGroupAuto>& rep,
    const std::vector<std::string>& basis) {
  std::map<std::string, FreeGroupAuto> out;
  for (const auto& [g, w] : gm.images) out[g] = eval_auto(w, rep, basis);
  return out;
}

// ---------------------------------------------------------------------------
// Words in the braid generators evaluated inside the dihedral algebra; the
// generators are invertible there, g^-1 = g - (q - q^-1).

template <class Field>
typename DihedralAlgebra<Field>::Elem dihedral_gen_inverse(
    const DihedralAlgebra<Field>& alg, int which) {
  return alg.sub(alg.gen(which),
                 alg.scale(alg.field.quad(which), alg.unit()));
}

template <class Field>
typename DihedralAlgebra<Field>::Elem eval_dihedral_word(
    const DihedralAlgebra<Field>& alg, const FreeWord& w) {
  auto acc = alg.unit();
  for (const auto& [name, exp] : w.letters) {
    int which = name == g_name(0) ? 0 : 1;
    acc = alg.mul(acc, exp > 0 ? alg.gen(which)
                               : dihedral_gen_inverse(alg, which));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Suites.

inline SuiteReport coeffs_suite() {
  SuiteReport rep{"coeffs", {}};
  CheckReport c = gen_check_C(12);
  detail::add(rep, "two-parameter series vs recursion, m<=12", c.ok, c.detail);
  CheckReport d = gen_check_D(30);
  detail::add(rep, "one-parameter series vs recursion, m<=30", d.ok, d.detail);
  CheckReport e = closed_form_check(30);
  detail::add(rep, "binomial closed form vs recursion, m<=30", e.ok, e.detail);
  bool spec_ok = true;
  std::string note;
  for (int m = 2; m <= 20; ++m) {
    AKVector one = a_one_param(m);
    AKVector two = a_vector(m, true);
    if (one.a != two.a) {
      spec_ok = false;
      note = "mismatch at m=" + std::to_string(m);
      break;
    }
  }
  detail::add(rep, "one-parameter specialization, m<=20", spec_ok, note);
  return rep;
}

inline SuiteReport dihedral_suite(int mmax = 12) {
  SuiteReport rep{"dihedral", {}};
  for (int m = 2; m <= mmax; ++m) {
    for (bool equal : {true, false}) {
      if (m % 2 == 1 && !equal) continue;
      std::string tag = "m=" + std::to_string(m) +
                        (equal ? " identified" : " two-parameter");
      auto alg = make_symbolic_dihedral(m, equal);
      detail::add(rep, "defining-relation residual " + tag,
                  alg.is_zero(relation_residual(m, equal)));

      FExpansion fx = braid_f_expansion(m, equal);
      AKVector ak = a_vector(m, equal);
      bool ok = fx.pairs.count(0) == 0;
      for (int k = 1; k <= m && ok; ++k) {
        LaurentPoly pos, neg;
        if (fx.pairs.count(k)) {
          pos = fx.pairs.at(k).first;
          neg = fx.pairs.at(k).second;
        }
        ok = pos == ak.a[k] && neg == -ak.a[k];
      }
      detail::add(rep, "braid difference expansion " + tag, ok);
    }
  }
  return rep;
}

// Residuals at seeded rational points, for the fast evaluation mode.
inline SuiteReport dihedral_eval_suite(int m, unsigned seed, int points = 3) {
  SuiteReport rep{"dihedral-eval", {}};
  std::mt19937 rng(seed);
  auto rand_q = [&]() {
    for (;;) {
      long long num = static_cast<long long>(rng() % 19) - 9;
      long long den = static_cast<long long>(rng() % 9) + 1;
      Rat q(num, den);
      if (q != 0 && q != 1 && q != -1) return q;
    }
  };
  for (int p = 0; p < points; ++p) {
    Rat qi = rand_q();
    Rat qj = m % 2 == 1 ? qi : rand_q();
    auto alg = make_numeric_dihedral(m, qi, qj);
    auto res = relation_residual_in(alg, a_vector(m, qi == qj));
    detail::add(rep, "residual at point " + std::to_string(p),
                alg.is_zero(res));
  }
  return rep;
}

inline SuiteReport group_presentations_suite(
    const std::vector<std::string>& corpus = default_corpus(),
    size_t cap = 50000) {
  SuiteReport rep{"group-presentations", {}};
  for (const auto& name : corpus) {
    CoxeterMatrix mat = named_matrix(name);
    auto base = coxeter_assignment(name);
    auto isos = iso_maps(mat);
    size_t half = coxeter_order(name) / 2;

    GroupPresentation bp = bourbaki_group(mat);
    auto bimg = perm_images(isos.at("group-bourbaki"), base);
    detail::add(rep, name + " bourbaki relations",
                check_relations(bp, bimg).empty());
    std::vector<Permutation> bgens;
    for (const auto& g : bp.generators) bgens.push_back(bimg.at(g));
    auto border = bfs_closure(bgens, 4 * half);
    detail::add(rep, name + " bourbaki image order",
                border.has_value() && *border == half);
    auto btc = todd_coxeter(bp, cap);
    detail::add(rep, name + " bourbaki coset count",
                btc.has_value() && *btc == half);

    GroupPresentation ep = edge_group(mat);
    auto eimg = perm_images(isos.at("group-edge"), base);
    detail::add(rep, name + " edge relations",
                check_relations(ep, eimg).empty());
    std::vector<Permutation> egens;
    for (const auto& g : ep.generators) egens.push_back(eimg.at(g));
    auto eorder = bfs_closure(egens, 4 * half);
    detail::add(rep, name + " edge image order",
                eorder.has_value() && *eorder == half);
    auto etc = todd_coxeter(ep, cap);
    detail::add(rep, name + " edge coset count",
                etc.has_value() && *etc == half);
  }

  // One infinite crystallographic case through the integer matrix model: the
  // triangle with all labels 3, whose graph has a genuine cycle.
  CoxeterMatrix tri = validate_matrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
  auto mats = matrix_model(tri);
  std::map<std::string, IntMatrix> mbase;
  for (size_t i = 0; i < mats.size(); ++i)
    mbase[s_name(static_cast<int>(i))] = mats[i];
  auto isos = iso_maps(tri);
  // Reflection matrices are involutions, so inversion is the identity map.
  auto minv = [](const IntMatrix& x) { return x; };
  auto meval = [&](const GenMap& gm) {
    std::map<std::string, IntMatrix> out;
    for (const auto& [g, w] : gm.images)
      out[g] = eval_word(w, mbase, IntMatrix::identity(tri.n), minv);
    return out;
  };
  auto tb = meval(isos.at("group-bourbaki"));
  auto te = meval(isos.at("group-edge"));
  auto iinv = [&](const IntMatrix& x) {
    // Every image here has order dividing 6; cycle to find the inverse.
    IntMatrix acc = IntMatrix::identity(tri.n);
    for (int k = 0; k < 6; ++k) {
      IntMatrix t = acc * x;
      if (t == IntMatrix::identity(tri.n)) return acc;
      acc = t;
    }
    throw std::logic_error("matrix image of unexpected order");
  };
  detail::add(rep, "triangle matrix bourbaki relations",
              check_relations(bourbaki_group(tri), tb,
                              IntMatrix::identity(tri.n), iinv)
                  .empty());
  detail::add(rep, "triangle matrix edge relations",
              check_relations(edge_group(tri), te,
                              IntMatrix::identity(tri.n), iinv)
                  .empty());
  return rep;
}

inline SuiteReport braid_presentations_suite(int nmax = 6, int nsmall = 4) {
  SuiteReport rep{"braid-presentations", {}};
  for (int n = 2; n <= nmax; ++n) {
    std::string tag = "A" + std::to_string(n) + " ";
    CoxeterMatrix mat = named_matrix("A" + std::to_string(n));
    auto arep = artin_rep(n);
    std::vector<std::string> basis = arep.begin()->second.basis;
    auto isos = iso_maps(mat);

    GroupPresentation bb = bourbaki_braid(mat);
    auto bimg = auto_images(isos.at("braid-bourbaki"), arep, basis);
    detail::add(rep, tag + "bourbaki braid relations",
                check_relations(bb, bimg, basis).empty());

    GroupPresentation eb = edge_braid(mat);
    auto eimg = auto_images(isos.at("braid-edge"), arep, basis);
    detail::add(rep, tag + "edge braid relations",
                check_relations(eb, eimg, basis).empty());

    auto [ta1, ta2] = typeA_presentations(n);
    GenMap g1;
    for (int i = 0; i < n; ++i)
      g1.images[R_name(i)] = gen(g_name(0)) * gen(g_name(i));
    detail::add(rep, tag + "typeA-braid relations",
                check_relations(ta1, auto_images(g1, arep, basis), basis)
                    .empty());
    GenMap g2;
    for (int i = 1; i < n; ++i)
      g2.images["r" + std::to_string(i)] =
          gen(g_name(i - 1)) * gen(g_name(i), -1);
    for (int i = 0; i < n; ++i)
      g2.images[t_name(i)] = gen(g_name(i)) * gen(g_name(i));
    detail::add(rep, tag + "typeA-edge-braid relations",
                check_relations(ta2, auto_images(g2, arep, basis), basis)
                    .empty());

    if (n <= nsmall) {
      const GenMap& psi = isos.at("braid-bourbaki");
      bool gen_ok = true;
      for (int i = 0; i < n && gen_ok; ++i)
        for (int j = 0; j < n && gen_ok; ++j) {
          FreeWord lhs = gen(g_name(i)) * gen(g_name(j));
          FreeWord rhs = substitute(gen(Rp_name(i)) * gen(R_name(j)), psi);
          gen_ok = eval_auto(lhs, arep, basis) == eval_auto(rhs, arep, basis);
        }
      detail::add(rep, tag + "pair products generated", gen_ok);

      bool tau_ok = true;
      for (int i = 0; i < n && tau_ok; ++i) {
        FreeWord lhs = reverse_word(substitute(gen(R_name(i)), psi));
        FreeWord rhs = substitute(gen(Rp_name(i)) * gen(R_name(0)), psi);
        tau_ok = eval_auto(lhs, arep, basis) == eval_auto(rhs, arep, basis);
      }
      detail::add(rep, tag + "reversal anti-automorphism", tau_ok);

      const GenMap& om = isos.at("omega");
      bool om_ok = true;
      for (const auto& x : bb.generators) {
        FreeWord twice = substitute(substitute(gen(x), om), om);
        FreeWord conj = gen(R_name(0), -1) * gen(x) * gen(R_name(0));
        if (eval_auto(substitute(twice, psi), arep, basis) !=
            eval_auto(substitute(conj, psi), arep, basis)) {
          om_ok = false;
          break;
        }
      }
      detail::add(rep, tag + "omega squared is conjugation", om_ok);
    }

    bool loc_ok = true;
    for (int i = 1; i < n && loc_ok; ++i)
      for (int j = 0; j < n && loc_ok; ++j) {
        if (i > j ? i - j <= 2 : j - i <= 2) continue;
        FreeGroupAuto ri =
            eval_auto(gen(g_name(i - 1)) * gen(g_name(i), -1), arep, basis);
        FreeGroupAuto tj =
            eval_auto(gen(g_name(j)) * gen(g_name(j)), arep, basis);
        loc_ok = ri * tj == tj * ri;
      }
    detail::add(rep, tag + "distant edge and torsion images commute", loc_ok);
  }

  bool bq = true, eq = true;
  std::vector<std::string> qcorpus{"A2", "A3", "A4", "B2", "B3", "D4"};
  for (int m = 2; m <= 8; ++m)
    qcorpus.push_back("I2(" + std::to_string(m) + ")");
  for (const auto& name : qcorpus) {
    CoxeterMatrix mat = named_matrix(name);
    if (!bourbaki_quotient_check(mat)) bq = false;
    if (!edge_quotient_check(mat)) eq = false;
  }
  detail::add(rep, "bourbaki braid quotient recovers the group presentation",
              bq);
  detail::add(rep, "edge braid quotient recovers the group presentation", eq);
  return rep;
}

inline SuiteReport rs_suite(const std::vector<std::string>& corpus =
                                default_corpus()) {
  SuiteReport rep{"rs", {}};
  for (const auto& name : corpus) {
    CoxeterMatrix mat = named_matrix(name);

    GroupPresentation cox = coxeter_group(mat);
    SchreierSetup setup{cox, all_minus(cox)};
    GroupPresentation simp = simplify(rs_rewrite(setup));
    GroupPresentation target = bourbaki_group(mat);
    detail::add(rep, name + " reflection rewrite simplifies to bourbaki",
                simp.generators == target.generators &&
                    same_relations(simp, target));

    GroupPresentation brd = braid_group(mat);
    SchreierSetup bsetup{brd, all_minus(brd)};
    GroupPresentation raw = rs_rewrite(bsetup);
    GroupPresentation bb = bourbaki_braid(mat);
    GenMap kill;
    for (const auto& g : bb.generators)
      kill.images[g] = g == Rp_name(0) ? FreeWord{} : gen(g);
    GroupPresentation bbsub = substitute(bb, kill, bb.generators);
    std::vector<std::string> expect_gens;
    for (const auto& g : bb.generators)
      if (g != Rp_name(0)) expect_gens.push_back(g);
    detail::add(rep, name + " braid rewrite matches the bourbaki braid set",
                raw.generators == expect_gens && same_relations(raw, bbsub));
  }
  return rep;
}

inline SuiteReport remark_iv_suite() {
  SuiteReport rep{"remark-iv", {}};

  // Label-2 pairs: with the trivial generator substituted away, the two
  // bracket relations pin R'_j as both R_j R0^-1 and R0^-1 R_j.
  bool even_ok = true;
  for (const auto& name : {"A3", "B3", "D4", "I2(2)"}) {
    CoxeterMatrix mat = named_matrix(name);
    for (int j = 1; j < mat.n && even_ok; ++j) {
      if (mat.at(0, j) != 2) continue;
      FreeWord sub1 = gen(R_name(j));                    // R'0 R_j with R'0 = 1
      FreeWord rhs1 = gen(Rp_name(j)) * gen(R_name(0));  // R'_j R0
      even_ok = canonical_relator(sub1, rhs1) ==
                canonical_relator(gen(Rp_name(j)),
                                  gen(R_name(j)) * gen(R_name(0), -1));
      if (!even_ok) break;
      FreeWord lhs2 = gen(R_name(0)) * gen(Rp_name(j));
      FreeWord rhs2 = gen(R_name(j));  // R_j R'0 with R'0 = 1
      even_ok = canonical_relator(lhs2, rhs2) ==
                canonical_relator(gen(Rp_name(j)),
                                  gen(R_name(0), -1) * gen(R_name(j)));
    }
  }
  detail::add(rep, "label-2 columns express the primed generator", even_ok);

  // Odd labels: R'_1 = R_1^-(m+1)/2 R0 R_1^(m-1)/2, checked inside the
  // dihedral algebra where the braid generators are invertible.
  bool odd_ok = true;
  for (int m : {3, 5, 7}) {
    auto alg = make_symbolic_dihedral(m, true);
    int h = (m - 1) / 2;
    FreeWord r0 = gen(g_name(0)) * gen(g_name(0));
    FreeWord r1 = gen(g_name(0)) * gen(g_name(1));
    FreeWord lhs = gen(g_name(1)) * gen(g_name(0), -1);
    FreeWord rhs = w_pow(r1, -(h + 1)) * r0 * w_pow(r1, h);
    auto diff = alg.sub(eval_dihedral_word(alg, lhs),
                        eval_dihedral_word(alg, rhs));
    if (!alg.is_zero(diff)) odd_ok = false;
  }
  detail::add(rep, "odd-label conjugation formula in the dihedral algebra",
              odd_ok);

  {
    auto arep = artin_rep(2);
    std::vector<std::string> basis = arep.begin()->second.basis;
    FreeWord r0 = gen(g_name(0)) * gen(g_name(0));
    FreeWord r1 = gen(g_name(0)) * gen(g_name(1));
    FreeWord lhs = gen(g_name(1)) * gen(g_name(0), -1);
    FreeWord rhs = w_pow(r1, -2) * r0 * w_pow(r1, 1);
    detail::add(rep, "odd-label conjugation formula in the artin model",
                eval_auto(lhs, arep, basis) == eval_auto(rhs, arep, basis));
  }

  // The label-4 obstruction: in (Z^2) x| S2 the braid relation of length four
  // holds, yet g1 g0^-1 lies outside the subgroup generated by g0^2 and g0 g1.
  auto assign = metabelian_assignment();
  FreeWord b4l = bracket(gen("g0"), gen("g1"), 4);
  FreeWord b4r = bracket(gen("g1"), gen("g0"), 4);
  detail::add(rep, "metabelian model satisfies the length-4 braid relation",
              eval_meta(b4l, assign) == eval_meta(b4r, assign));

  MetaElt target = eval_meta(gen("g1") * gen("g0", -1), assign);
  MetaElt sq = eval_meta(gen("g0") * gen("g0"), assign);
  MetaElt h = eval_meta(gen("g0") * gen("g1"), assign);
  bool non_member = sq == MetaElt{};  // the square collapses, leaving <h>
  // Powers of h alternate (id,(k,k)) and (swap,(k,k+1)); the target's flip
  // part forces an odd power, whose offset never matches (1,0).
  MetaElt pow = h;
  for (int j = 1; j <= 64 && non_member; ++j) {
    if (pow == target || meta_inverse(pow) == target) non_member = false;
    if (pow.flip && pow.v1 != pow.v0 + 1) non_member = false;
    pow = pow * h;
  }
  if (target.flip && target.v1 == target.v0 + 1) non_member = false;
  non_member = non_member && !meta_in_subgroup(target, {sq, h}, 24);
  detail::add(rep, "metabelian model rejects g1 g0^-1 from the R-subgroup",
              non_member);
  return rep;
}

inline SuiteReport run_suite(const std::string& name,
                             const std::vector<std::string>& corpus =
                                 default_corpus(),
                             size_t cap = 50000) {
  if (name == "coeffs") return coeffs_suite();
  if (name == "dihedral") return dihedral_suite();
  if (name == "group-presentations")
    return group_presentations_suite(corpus, cap);
  if (name == "braid-presentations") return braid_presentations_suite();
  if (name == "rs") return rs_suite(corpus);
  if (name == "remark-iv") return remark_iv_suite();
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace alterna
