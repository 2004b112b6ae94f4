#pragma once
// The braid group action on a free group: generator g_i sends x_i to
// x_i x_{i+1} x_i^-1 and x_{i+1} to x_i.  Automorphisms are stored with
// their inverses so words with negative letters evaluate exactly.

#include <map>
#include <string>
#include <vector>

#include "alterna/perm.hpp"
#include "alterna/word.hpp"

namespace alterna {

inline std::string x_name(int a) { return "x" + std::to_string(a); }

struct FreeGroupAuto {
  std::vector<std::string> basis;
  std::map<std::string, FreeWord> images;
  std::map<std::string, FreeWord> inv_images;

  static FreeGroupAuto identity(const std::vector<std::string>& basis) {
    FreeGroupAuto a;
    a.basis = basis;
    for (const auto& x : basis) {
      a.images[x] = gen(x);
      a.inv_images[x] = gen(x);
    }
    return a;
  }

  FreeWord apply(const FreeWord& w) const {
    FreeWord out;
    for (const auto& [name, exp] : w.letters) {
      const FreeWord& img = images.at(name);
      if (exp > 0)
        for (const auto& [n2, e2] : img.letters) out.push(n2, e2);
      else
        for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it)
          out.push(it->first, -it->second);
    }
    return out;
  }

  FreeWord apply_inverse(const FreeWord& w) const {
    FreeWord out;
    for (const auto& [name, exp] : w.letters) {
      const FreeWord& img = inv_images.at(name);
      if (exp > 0)
        for (const auto& [n2, e2] : img.letters) out.push(n2, e2);
      else
        for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it)
          out.push(it->first, -it->second);
    }
    return out;
  }

  bool operator==(const FreeGroupAuto& o) const { return images == o.images; }
  bool operator!=(const FreeGroupAuto& o) const { return images != o.images; }

  bool is_identity() const {
    for (const auto& [x, img] : images)
      if (img != gen(x)) return false;
    return true;
  }
};

// (a * b)(x) = a(b(x)), matching the permutation convention.
inline FreeGroupAuto operator*(const FreeGroupAuto& a, const FreeGroupAuto& b) {
  FreeGroupAuto c;
  c.basis = a.basis;
  for (const auto& x : c.basis) {
    c.images[x] = a.apply(b.images.at(x));
    c.inv_images[x] = b.apply_inverse(a.inv_images.at(x));
  }
  return c;
}

inline FreeGroupAuto a_inverse(const FreeGroupAuto& a) {
  FreeGroupAuto c;
  c.basis = a.basis;
  c.images = a.inv_images;
  c.inv_images = a.images;
  return c;
}

// Generators g_0..g_{n-1} of the rank-n type A braid group acting on the free
// group on x_0..x_n.
inline std::map<std::string, FreeGroupAuto> artin_rep(int n) {
  std::vector<std::string> basis;
  for (int a = 0; a <= n; ++a) basis.push_back(x_name(a));
  std::map<std::string, FreeGroupAuto> rep;
  for (int i = 0; i < n; ++i) {
    FreeGroupAuto s = FreeGroupAuto::identity(basis);
    s.images[x_name(i)] = gen(x_name(i)) * gen(x_name(i + 1)) * gen(x_name(i), -1);
    s.images[x_name(i + 1)] = gen(x_name(i));
    s.inv_images[x_name(i)] = gen(x_name(i + 1));
    s.inv_images[x_name(i + 1)] =
        gen(x_name(i + 1), -1) * gen(x_name(i)) * gen(x_name(i + 1));
    rep["g" + std::to_string(i)] = s;
  }
  return rep;
}

inline FreeGroupAuto eval_auto(const FreeWord& w,
                               const std::map<std::string, FreeGroupAuto>& rep,
                               const std::vector<std::string>& basis) {
  return eval_word(w, rep, FreeGroupAuto::identity(basis),
                   [](const FreeGroupAuto& a) { return a_inverse(a); });
}

}  // namespace alterna
