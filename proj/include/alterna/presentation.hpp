#pragma once
// Group and algebra presentations, generator maps, and substitution.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "alterna/laurent.hpp"
#include "alterna/word.hpp"

namespace alterna {

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::pair<FreeWord, FreeWord>> relations;
};

inline void validate(const GroupPresentation& p) {
  std::set<std::string> declared(p.generators.begin(), p.generators.end());
  for (const auto& [lhs, rhs] : p.relations)
    for (const auto* side : {&lhs, &rhs})
      for (const auto& [name, exp] : side->letters)
        if (!declared.count(name))
          throw std::invalid_argument("relation uses undeclared generator: " +
                                      name);
}

// Formal sum  sum_i coeff_i * word_i = 0  with Laurent-polynomial
// coefficients; words may use negative exponents on invertible generators.
struct AlgebraTerm {
  LaurentPoly coeff;
  FreeWord word;
};

struct AlgebraRelation {
  std::vector<AlgebraTerm> terms;
};

struct AlgebraPresentation {
  std::vector<std::string> generators;
  std::vector<AlgebraRelation> relations;
};

// Collect like words and drop zero coefficients; result sorted by word.
inline AlgebraRelation normalized(const AlgebraRelation& r) {
  std::map<FreeWord, LaurentPoly> acc;
  for (const auto& t : r.terms) acc[t.word] = acc[t.word] + t.coeff;
  AlgebraRelation out;
  for (const auto& [w, c] : acc)
    if (!c.is_zero()) out.terms.push_back({c, w});
  return out;
}

inline bool same_relation(const AlgebraRelation& a, const AlgebraRelation& b) {
  auto na = normalized(a), nb = normalized(b);
  if (na.terms.size() != nb.terms.size()) return false;
  for (size_t i = 0; i < na.terms.size(); ++i)
    if (na.terms[i].word != nb.terms[i].word ||
        na.terms[i].coeff != nb.terms[i].coeff)
      return false;
  return true;
}

struct GenMap {
  std::map<std::string, FreeWord> images;
};

inline FreeWord substitute(const FreeWord& w, const GenMap& map) {
  FreeWord out;
  for (const auto& [name, exp] : w.letters) {
    auto it = map.images.find(name);
    if (it == map.images.end())
      throw std::invalid_argument("generator not in map: " + name);
    const FreeWord img = exp > 0 ? it->second : inverse(it->second);
    for (const auto& [n2, e2] : img.letters) out.push(n2, e2);
  }
  return out;
}

inline GroupPresentation substitute(const GroupPresentation& p,
                                    const GenMap& map,
                                    std::vector<std::string> new_gens) {
  GroupPresentation out;
  out.generators = std::move(new_gens);
  for (const auto& [lhs, rhs] : p.relations)
    out.relations.emplace_back(substitute(lhs, map), substitute(rhs, map));
  return out;
}

inline GroupPresentation rename(const GroupPresentation& p,
                                const std::map<std::string, std::string>& nm) {
  auto ren = [&](const FreeWord& w) {
    FreeWord out;
    for (const auto& [name, exp] : w.letters) {
      auto it = nm.find(name);
      out.push(it == nm.end() ? name : it->second, exp);
    }
    return out;
  };
  GroupPresentation out;
  for (const auto& g : p.generators) {
    auto it = nm.find(g);
    out.generators.push_back(it == nm.end() ? g : it->second);
  }
  for (const auto& [lhs, rhs] : p.relations)
    out.relations.emplace_back(ren(lhs), ren(rhs));
  return out;
}

using RelatorSet = std::set<std::vector<std::pair<std::string, int>>>;

// Canonical relators of all relations, tautologies dropped.
inline RelatorSet relation_set(const GroupPresentation& p) {
  RelatorSet out;
  for (const auto& [lhs, rhs] : p.relations) {
    auto c = canonical_relator(lhs, rhs);
    if (!c.empty()) out.insert(c);
  }
  return out;
}

inline bool same_relations(const GroupPresentation& a,
                           const GroupPresentation& b) {
  return relation_set(a) == relation_set(b);
}

}  // namespace alterna
