#pragma once
// Coxeter matrices and the graph-level structure built on them: connected
// extensions, spanning trees, fundamental cycles, parameter classes.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace alterna {

// Entry 0 encodes an infinite label throughout.
struct CoxeterMatrix {
  int n = 0;
  std::vector<std::vector<int>> m;

  int at(int i, int j) const { return m[i][j]; }
  bool finite(int i, int j) const { return m[i][j] != 0; }
};

inline CoxeterMatrix validate_matrix(const std::vector<std::vector<int>>& raw) {
  CoxeterMatrix cm;
  cm.n = static_cast<int>(raw.size());
  for (const auto& row : raw)
    if (static_cast<int>(row.size()) != cm.n)
      throw std::invalid_argument("matrix is not square");
  for (int i = 0; i < cm.n; ++i) {
    if (raw[i][i] != 1)
      throw std::invalid_argument("diagonal entry (" + std::to_string(i) + "," +
                                  std::to_string(i) + ") must be 1");
    for (int j = 0; j < cm.n; ++j) {
      if (raw[i][j] != raw[j][i])
        throw std::invalid_argument("entries (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") and (" +
                                    std::to_string(j) + "," +
                                    std::to_string(i) + ") differ");
      if (i != j && raw[i][j] != 0 && raw[i][j] < 2)
        throw std::invalid_argument("entry (" + std::to_string(i) + "," +
                                    std::to_string(j) +
                                    ") must be at least 2, or 0 for infinity");
    }
  }
  cm.m = raw;
  return cm;
}

// Standard matrices by name: A{n}, B{n}, D{n}, E6, E7, E8, F4, H3, H4, I2({m}).
inline CoxeterMatrix named_matrix(const std::string& name) {
  auto path = [](int n, const std::vector<int>& labels) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = labels[i];
    return m;
  };
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B' || name[0] == 'D')) {
    int n = std::stoi(name.substr(1));
    if (name[0] == 'A' && n >= 1)
      return validate_matrix(path(n, std::vector<int>(n, 3)));
    if (name[0] == 'B' && n >= 2) {
      std::vector<int> labels(n, 3);
      labels[0] = 4;
      return validate_matrix(path(n, labels));
    }
    if (name[0] == 'D' && n >= 4) {
      // Fork at the low indices: 0 and 1 both join 2, then a path onwards.
      std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
      for (int i = 0; i < n; ++i) m[i][i] = 1;
      m[0][2] = m[2][0] = 3;
      m[1][2] = m[2][1] = 3;
      for (int i = 2; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
      return validate_matrix(m);
    }
  }
  if (name == "E6" || name == "E7" || name == "E8") {
    int n = name[1] - '0';
    // Path 0-2-3-...-(n-1) with vertex 1 attached to vertex 3.
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    m[0][2] = m[2][0] = 3;
    m[1][3] = m[3][1] = 3;
    for (int i = 2; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
    return validate_matrix(m);
  }
  if (name == "F4") return validate_matrix(path(4, {3, 4, 3}));
  if (name == "H3") return validate_matrix(path(3, {5, 3}));
  if (name == "H4") return validate_matrix(path(4, {5, 3, 3}));
  if (name.rfind("I2(", 0) == 0 && name.back() == ')') {
    int m = std::stoi(name.substr(3, name.size() - 4));
    if (m == 0 || m >= 2) return validate_matrix({{1, m}, {m, 1}});
  }
  throw std::invalid_argument("unknown type name: " + name);
}

// Edges keyed by ordered pair (i, j) with i < j; added edges are the label-2
// ones inserted to make the graph connected.
struct CoxGraph {
  int n = 0;
  std::map<std::pair<int, int>, int> edges;
  std::set<std::pair<int, int>> added;

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [e, label] : edges) {
      (void)label;
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
  }
};

inline CoxGraph connected_extension(const CoxeterMatrix& mat) {
  CoxGraph g;
  g.n = mat.n;
  for (int i = 0; i < mat.n; ++i)
    for (int j = i + 1; j < mat.n; ++j)
      if (mat.at(i, j) >= 3 || mat.at(i, j) == 0) g.edges[{i, j}] = mat.at(i, j);

  // Components in order of their smallest vertex.
  std::vector<int> comp(mat.n, -1);
  std::vector<int> reps;
  auto adj = g.adjacency();
  for (int v = 0; v < mat.n; ++v) {
    if (comp[v] != -1) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(v);
    std::vector<int> stack{v};
    comp[v] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (comp[y] == -1) {
          comp[y] = c;
          stack.push_back(y);
        }
    }
  }
  for (size_t l = 0; l + 1 < reps.size(); ++l) {
    int a = reps[l], b = reps[l + 1];
    if (a > b) std::swap(a, b);
    g.edges[{a, b}] = 2;
    g.added.insert({a, b});
  }
  return g;
}

// Breadth-first spanning tree rooted at 0, neighbors visited in increasing
// order; parent[0] = -1.
inline std::vector<int> spanning_tree(const CoxGraph& g) {
  std::vector<int> parent(g.n, -2);
  auto adj = g.adjacency();
  std::vector<int> queue{0};
  parent[0] = -1;
  for (size_t h = 0; h < queue.size(); ++h) {
    int x = queue[h];
    for (int y : adj[x])
      if (parent[y] == -2) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  if (std::count(parent.begin(), parent.end(), -2) > 0)
    throw std::invalid_argument("graph is not connected");
  return parent;
}

struct CycleBasis {
  // Closed walks; each starts and ends at the meeting point of the two tree
  // branches and crosses its non-tree edge in the middle.
  std::vector<std::vector<int>> cycles;
};

inline CycleBasis cycle_basis(const CoxGraph& g) {
  std::vector<int> parent = spanning_tree(g);
  std::vector<int> depth(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    int d = 0;
    for (int x = v; parent[x] != -1; x = parent[x]) ++d;
    depth[v] = d;
  }
  std::set<std::pair<int, int>> tree;
  for (int v = 0; v < g.n; ++v)
    if (parent[v] != -1)
      tree.insert({std::min(v, parent[v]), std::max(v, parent[v])});

  CycleBasis basis;
  for (const auto& [e, label] : g.edges) {
    (void)label;
    if (tree.count(e)) continue;
    auto [i, j] = e;
    std::vector<int> up_i{i}, up_j{j};
    int a = i, b = j;
    while (depth[a] > depth[b]) up_i.push_back(a = parent[a]);
    while (depth[b] > depth[a]) up_j.push_back(b = parent[b]);
    while (a != b) {
      up_i.push_back(a = parent[a]);
      up_j.push_back(b = parent[b]);
    }
    // up_i ends at the common ancestor; walk anc -> i -> j -> anc.
    std::vector<int> walk(up_i.rbegin(), up_i.rend());
    walk.insert(walk.end(), up_j.begin(), up_j.end());
    basis.cycles.push_back(std::move(walk));
  }
  return basis;
}

struct ParamClass {
  std::vector<int> class_of;               // vertex -> class index
  std::vector<std::vector<int>> classes;   // ordered by smallest member
};

inline ParamClass parameter_classes(const CoxeterMatrix& mat) {
  std::vector<int> up(mat.n);
  for (int i = 0; i < mat.n; ++i) up[i] = i;
  auto find = [&](int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  };
  for (int i = 0; i < mat.n; ++i)
    for (int j = i + 1; j < mat.n; ++j) {
      int mij = mat.at(i, j);
      if (mij != 0 && mij % 2 == 1) up[find(i)] = find(j);
    }
  ParamClass pc;
  pc.class_of.assign(mat.n, -1);
  for (int v = 0; v < mat.n; ++v) {
    int r = find(v);
    if (pc.class_of[r] == -1) {
      pc.class_of[r] = static_cast<int>(pc.classes.size());
      pc.classes.emplace_back();
    }
    pc.class_of[v] = pc.class_of[r];
    pc.classes[pc.class_of[v]].push_back(v);
  }
  return pc;
}

}  // namespace alterna
