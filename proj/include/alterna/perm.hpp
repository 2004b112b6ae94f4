#pragma once
// Permutations on {0..N-1} and breadth-first subgroup closure.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "alterna/word.hpp"

namespace alterna {

struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n) {
    Permutation p;
    p.images.resize(n);
    for (int i = 0; i < n; ++i) p.images[i] = i;
    return p;
  }

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[x]; }

  bool operator==(const Permutation& o) const { return images == o.images; }
  bool operator!=(const Permutation& o) const { return images != o.images; }
  bool operator<(const Permutation& o) const { return images < o.images; }
};

inline Permutation validated_permutation(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
      throw std::invalid_argument("not a bijection");
    seen[v] = 1;
  }
  return Permutation{std::move(images)};
}

// (a * b)(x) = a(b(x))
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation c;
  c.images.resize(b.images.size());
  for (size_t x = 0; x < b.images.size(); ++x)
    c.images[x] = a.images[b.images[x]];
  return c;
}

inline Permutation p_inverse(const Permutation& a) {
  Permutation c;
  c.images.resize(a.images.size());
  for (size_t x = 0; x < a.images.size(); ++x) c.images[a.images[x]] = x;
  return c;
}

inline Permutation transposition(int n, int a, int b) {
  Permutation p = Permutation::identity(n);
  p.images[a] = b;
  p.images[b] = a;
  return p;
}

inline int perm_order(const Permutation& p) {
  Permutation x = p;
  Permutation id = Permutation::identity(p.degree());
  int k = 1;
  while (!(x == id)) {
    x = x * p;
    ++k;
  }
  return k;
}

// Evaluate a free word under an assignment into any group-like type that has
// operator*, an inverse function, and a supplied identity.
template <class T, class Inv>
inline T eval_word(const FreeWord& w, const std::map<std::string, T>& assign,
                   const T& one, Inv inv) {
  T acc = one;
  for (const auto& [name, exp] : w.letters) {
    auto it = assign.find(name);
    if (it == assign.end())
      throw std::invalid_argument("assignment missing generator: " + name);
    acc = acc * (exp > 0 ? it->second : inv(it->second));
  }
  return acc;
}

inline Permutation eval_word(const FreeWord& w,
                             const std::map<std::string, Permutation>& assign,
                             int degree) {
  return eval_word(w, assign, Permutation::identity(degree),
                   [](const Permutation& p) { return p_inverse(p); });
}

// Exact order of the generated subgroup, or nullopt once it exceeds cap.
inline std::optional<size_t> bfs_closure(const std::vector<Permutation>& gens,
                                         size_t cap) {
  if (gens.empty()) return size_t{1};
  std::set<Permutation> seen;
  std::vector<Permutation> frontier{Permutation::identity(gens[0].degree())};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Permutation y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > cap) return std::nullopt;
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace alterna
