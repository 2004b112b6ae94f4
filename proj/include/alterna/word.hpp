#pragma once
// Freely reduced words over named generators, and the cyclic canonical form
// used to compare relation sets up to rotation and inversion.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alterna {

// A letter is (generator name, exponent) with exponent +1 or -1; runs like
// R^3 are stored as three letters.  The word is kept freely reduced at all
// times: push() cancels against the current last letter.
struct FreeWord {
  std::vector<std::pair<std::string, int>> letters;

  void push(const std::string& name, int exp) {
    if (exp == 0) return;
    int step = exp > 0 ? 1 : -1;
    for (int c = 0; c != exp; c += step) {
      if (!letters.empty() && letters.back().first == name &&
          letters.back().second == -step)
        letters.pop_back();
      else
        letters.emplace_back(name, step);
    }
  }

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }

  bool operator==(const FreeWord& o) const { return letters == o.letters; }
  bool operator!=(const FreeWord& o) const { return letters != o.letters; }
  bool operator<(const FreeWord& o) const { return letters < o.letters; }
};

inline FreeWord word(std::initializer_list<std::pair<std::string, int>> ls) {
  FreeWord w;
  for (const auto& [name, exp] : ls) w.push(name, exp);
  return w;
}

inline FreeWord word_from(const std::vector<std::pair<std::string, int>>& ls) {
  FreeWord w;
  for (const auto& [name, exp] : ls) w.push(name, exp);
  return w;
}

inline FreeWord gen(const std::string& name, int exp = 1) {
  FreeWord w;
  w.push(name, exp);
  return w;
}

inline FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  for (const auto& [name, exp] : b.letters) w.push(name, exp);
  return w;
}

inline FreeWord inverse(const FreeWord& a) {
  FreeWord w;
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    w.push(it->first, -it->second);
  return w;
}

inline FreeWord w_pow(const FreeWord& a, int k) {
  FreeWord base = k < 0 ? inverse(a) : a;
  int n = k < 0 ? -k : k;
  FreeWord w;
  for (int i = 0; i < n; ++i) w = w * base;
  return w;
}

// Anti-automorphism on words: reverse the letter order, keep exponents.
inline FreeWord reverse_word(const FreeWord& a) {
  FreeWord w;
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    w.push(it->first, it->second);
  return w;
}

// Re-reduce an arbitrary letter sequence.  Idempotent.
inline FreeWord free_reduce(const FreeWord& a) {
  FreeWord w;
  for (const auto& [name, exp] : a.letters) w.push(name, exp);
  return w;
}

// a b a b ... with m factors, starting from a.
inline FreeWord bracket(const FreeWord& a, const FreeWord& b, int m) {
  FreeWord w;
  for (int i = 0; i < m; ++i) w = w * (i % 2 == 0 ? a : b);
  return w;
}

namespace detail {
inline std::vector<std::pair<std::string, int>> cyclic_reduce(
    std::vector<std::pair<std::string, int>> v) {
  while (v.size() >= 2 && v.front().first == v.back().first &&
         v.front().second == -v.back().second) {
    v.erase(v.begin());
    v.pop_back();
  }
  return v;
}

inline std::vector<std::pair<std::string, int>> min_rotation(
    const std::vector<std::pair<std::string, int>>& v) {
  auto best = v;
  for (size_t s = 1; s < v.size(); ++s) {
    std::vector<std::pair<std::string, int>> rot(v.begin() + s, v.end());
    rot.insert(rot.end(), v.begin(), v.begin() + s);
    if (rot < best) best = rot;
  }
  return best;
}
}  // namespace detail

// Canonical representative of the relator lhs * rhs^-1 up to cyclic rotation
// and inversion.  The empty result means the relation is a tautology.
inline std::vector<std::pair<std::string, int>> canonical_relator(
    const FreeWord& lhs, const FreeWord& rhs) {
  FreeWord rel = lhs * inverse(rhs);
  auto v = detail::cyclic_reduce(rel.letters);
  if (v.empty()) return v;
  auto fwd = detail::min_rotation(v);
  auto bwd = detail::min_rotation(inverse(free_reduce(FreeWord{v})).letters);
  return std::min(fwd, bwd);
}

}  // namespace alterna
