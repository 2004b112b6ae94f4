#pragma once
// Index-2 Reidemeister-Schreier rewriting for the kernel of a sign character,
// with the transversal {1, g0} and the light simplification pass used to
// match printed presentations.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alterna/presentation.hpp"
#include "alterna/word.hpp"

namespace alterna {

struct SignCharacter {
  std::map<std::string, int> sign;  // generator -> +1 or -1
};

inline SignCharacter all_minus(const GroupPresentation& p) {
  SignCharacter chi;
  for (const auto& g : p.generators) chi.sign[g] = -1;
  return chi;
}

inline int sign_of(const SignCharacter& chi, const FreeWord& w) {
  int s = 1;
  for (const auto& [name, exp] : w.letters) {
    (void)exp;
    auto it = chi.sign.find(name);
    if (it == chi.sign.end())
      throw std::invalid_argument("character undefined on generator: " + name);
    s *= it->second;
  }
  return s;
}

struct SchreierSetup {
  GroupPresentation presentation;
  SignCharacter character;
};

// Kernel generators are named R{i} for the coset-g0 row and R'{i} for the
// coset-1 row, indexed by the generator's position; the trivial one in the
// coset-1 row of g0 itself is pruned and contributes nothing to rewritten
// words.
inline GroupPresentation rs_rewrite(const SchreierSetup& setup) {
  const GroupPresentation& p = setup.presentation;
  const SignCharacter& chi = setup.character;
  validate(p);
  for (const auto& g : p.generators)
    if (!chi.sign.count(g))
      throw std::invalid_argument("character undefined on generator: " + g);

  int idx0 = -1;
  for (size_t i = 0; i < p.generators.size(); ++i)
    if (chi.sign.at(p.generators[i]) == -1) {
      idx0 = static_cast<int>(i);
      break;
    }
  if (idx0 < 0)
    throw std::invalid_argument("character has no generator of sign -1");

  std::map<std::string, int> index;
  for (size_t i = 0; i < p.generators.size(); ++i)
    index[p.generators[i]] = static_cast<int>(i);

  for (size_t r = 0; r < p.relations.size(); ++r)
    if (sign_of(chi, p.relations[r].first) !=
        sign_of(chi, p.relations[r].second))
      throw std::invalid_argument(
          "relation " + std::to_string(r) +
          " has mismatched sign character on its two sides");

  // gamma(coset, generator) as an output letter; coset 0 is the identity
  // representative, coset 1 is g0.
  auto gamma_name = [&](int coset, int gidx) {
    return (coset == 1 ? "R" : "R'") + std::to_string(gidx);
  };

  auto rewrite = [&](const FreeWord& w, int start) {
    FreeWord out;
    int state = start;
    for (const auto& [name, exp] : w.letters) {
      int gi = index.at(name);
      bool flips = chi.sign.at(name) == -1;
      if (exp > 0) {
        if (!(state == 0 && gi == idx0)) out.push(gamma_name(state, gi), 1);
        if (flips) state ^= 1;
      } else {
        if (flips) state ^= 1;
        if (!(state == 0 && gi == idx0)) out.push(gamma_name(state, gi), -1);
      }
    }
    return out;
  };

  GroupPresentation out;
  for (size_t i = 0; i < p.generators.size(); ++i)
    out.generators.push_back("R" + std::to_string(i));
  for (size_t i = 0; i < p.generators.size(); ++i)
    if (static_cast<int>(i) != idx0)
      out.generators.push_back("R'" + std::to_string(i));
  for (const auto& [lhs, rhs] : p.relations)
    for (int a : {0, 1})
      out.relations.emplace_back(rewrite(lhs, a), rewrite(rhs, a));
  return out;
}

// Tietze-light cleanup: repeatedly drop tautologies and eliminate a generator
// that occurs exactly once in some relator, solving that relator for it.  The
// eliminated generator is the largest candidate name by (length, lex), so
// primed generators go before unprimed ones.
inline GroupPresentation simplify(const GroupPresentation& p) {
  std::vector<std::string> gens = p.generators;
  std::vector<FreeWord> relators;
  for (const auto& [lhs, rhs] : p.relations) {
    FreeWord rel = lhs * inverse(rhs);
    if (!rel.empty()) relators.push_back(rel);
  }

  auto name_rank = [](const std::string& a, const std::string& b) {
    return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
  };

  for (;;) {
    int found_rel = -1;
    std::string victim;
    for (size_t r = 0; r < relators.size() && found_rel < 0; ++r) {
      std::map<std::string, int> count;
      for (const auto& [name, exp] : relators[r].letters) {
        (void)exp;
        ++count[name];
      }
      for (const auto& [name, c] : count)
        if (c == 1 && (found_rel != static_cast<int>(r) ||
                       name_rank(victim, name))) {
          found_rel = static_cast<int>(r);
          victim = name;
        }
    }
    if (found_rel < 0) break;

    const FreeWord& rel = relators[found_rel];
    size_t pos = 0;
    while (rel.letters[pos].first != victim) ++pos;
    FreeWord u, v;
    for (size_t i = 0; i < pos; ++i)
      u.push(rel.letters[i].first, rel.letters[i].second);
    for (size_t i = pos + 1; i < rel.letters.size(); ++i)
      v.push(rel.letters[i].first, rel.letters[i].second);
    // u x^e v = 1  =>  x = (u^-1 v^-1)^e
    FreeWord image = inverse(u) * inverse(v);
    if (rel.letters[pos].second < 0) image = inverse(image);

    GenMap sub;
    for (const auto& g : gens)
      sub.images[g] = g == victim ? image : gen(g);
    std::vector<FreeWord> next;
    for (const auto& w : relators) {
      FreeWord img = substitute(w, sub);
      if (!img.empty()) next.push_back(img);
    }
    relators = std::move(next);
    gens.erase(std::find(gens.begin(), gens.end(), victim));
  }

  GroupPresentation out;
  out.generators = gens;
  std::set<std::vector<std::pair<std::string, int>>> seen;
  for (const auto& w : relators)
    if (seen.insert(canonical_relator(w, FreeWord{})).second)
      out.relations.emplace_back(w, FreeWord{});
  return out;
}

}  // namespace alterna
