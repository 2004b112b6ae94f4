#pragma once
// HLT-style Todd-Coxeter coset enumeration over the trivial subgroup, with
// union-find coincidence handling and a hard coset cap.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alterna/presentation.hpp"

namespace alterna {

class CosetTable {
 public:
  explicit CosetTable(int ngens) : ncols_(2 * ngens) { new_coset(); }

  int new_coset() {
    rows_.emplace_back(ncols_, -1);
    rep_.push_back(static_cast<int>(rep_.size()));
    return static_cast<int>(rep_.size()) - 1;
  }

  int find(int x) {
    while (rep_[x] != x) x = rep_[x] = rep_[rep_[x]];
    return x;
  }

  int get(int coset, int col) const { return rows_[coset][col]; }
  void set(int coset, int col, int v) { rows_[coset][col] = v; }

  size_t size() const { return rows_.size(); }
  int cols() const { return ncols_; }

  bool live(int x) { return find(x) == x; }

  size_t live_count() {
    size_t n = 0;
    for (size_t x = 0; x < rows_.size(); ++x)
      if (live(static_cast<int>(x))) ++n;
    return n;
  }

  static int inv_col(int c) { return c ^ 1; }

  void merge(int a, int b) {
    std::vector<std::pair<int, int>> queue{{a, b}};
    for (size_t h = 0; h < queue.size(); ++h) {
      int x = find(queue[h].first), y = find(queue[h].second);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      rep_[y] = x;
      for (int c = 0; c < ncols_; ++c) {
        int d = rows_[y][c];
        if (d == -1) continue;
        d = find(d);
        int xc = rows_[x][c] == -1 ? -1 : find(rows_[x][c]);
        if (xc == -1) {
          rows_[x][c] = d;
          int back = rows_[d][inv_col(c)];
          if (back == -1)
            rows_[d][inv_col(c)] = x;
          else if (find(back) != x)
            queue.emplace_back(find(back), x);
        } else if (xc != d) {
          queue.emplace_back(xc, d);
        }
      }
    }
  }

 private:
  int ncols_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> rep_;
};

namespace detail {

// Trace the relator cycle from alpha, defining cosets to close any gap wider
// than one and deducing or coinciding otherwise.
inline bool scan_and_fill(CosetTable& t, int alpha,
                          const std::vector<int>& relator, size_t cap) {
  if (relator.empty()) return true;
  int f = alpha, b = alpha;
  int i = 0, j = static_cast<int>(relator.size()) - 1;
  for (;;) {
    while (i <= j && t.get(f, relator[i]) != -1) {
      f = t.find(t.get(f, relator[i]));
      ++i;
    }
    if (i > j) {
      if (f != b) t.merge(f, b);
      return true;
    }
    while (j >= i && t.get(b, CosetTable::inv_col(relator[j])) != -1) {
      b = t.find(t.get(b, CosetTable::inv_col(relator[j])));
      --j;
    }
    if (j < i) {
      if (f != b) t.merge(f, b);
      return true;
    }
    if (j == i) {
      t.set(f, relator[i], b);
      t.set(b, CosetTable::inv_col(relator[i]), f);
      return true;
    }
    if (t.size() >= cap) return false;
    int d = t.new_coset();
    t.set(f, relator[i], d);
    t.set(d, CosetTable::inv_col(relator[i]), f);
    f = d;
    ++i;
  }
}

}  // namespace detail

// Order of the presented group, or nullopt if enumeration does not close
// within the coset cap.
inline std::optional<size_t> todd_coxeter(const GroupPresentation& pres,
                                          size_t cap = 50000) {
  validate(pres);
  std::map<std::string, int> index;
  for (size_t i = 0; i < pres.generators.size(); ++i)
    index[pres.generators[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> relators;
  for (const auto& [lhs, rhs] : pres.relations) {
    FreeWord rel = lhs * inverse(rhs);
    if (rel.empty()) continue;
    std::vector<int> cols;
    for (const auto& [name, exp] : rel.letters)
      cols.push_back(2 * index.at(name) + (exp > 0 ? 0 : 1));
    relators.push_back(std::move(cols));
  }

  CosetTable t(static_cast<int>(pres.generators.size()));
  for (int alpha = 0; alpha < static_cast<int>(t.size()); ++alpha) {
    if (!t.live(alpha)) continue;
    for (const auto& rel : relators) {
      if (!detail::scan_and_fill(t, alpha, rel, cap)) return std::nullopt;
      if (!t.live(alpha)) break;
    }
    if (!t.live(alpha)) continue;
    for (int c = 0; c < t.cols(); ++c) {
      if (t.get(alpha, c) != -1) continue;
      if (t.size() >= cap) return std::nullopt;
      int d = t.new_coset();
      t.set(alpha, c, d);
      t.set(d, CosetTable::inv_col(c), alpha);
    }
  }
  return t.live_count();
}

}  // namespace alterna
