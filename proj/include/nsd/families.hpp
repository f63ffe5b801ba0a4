#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsd/coloring.hpp"
#include "nsd/errors.hpp"
#include "nsd/exact_solver.hpp"
#include "nsd/fixtures.hpp"
#include "nsd/generators.hpp"
#include "nsd/graph.hpp"
#include "nsd/qm_base.hpp"
#include "nsd/verify.hpp"

namespace nsd {

/// A constructed coloring together with the palette size it certifies.
struct FamilyColoring {
  int k = 0;
  EdgeColoring coloring;
};

// ---------------------------------------------------------------- paths, cycles

inline FamilyColoring color_path(int n) {
  if (n < 3) throw InputError("color_path needs n >= 3");
  const Graph g = path_graph(n);
  if (n == 3) return {2, EdgeColoring(g, 2, {1, 2})};
  std::vector<Color> cols;
  for (int i = 0; i < n - 1; ++i) cols.push_back(i % 3 + 1);
  return {3, EdgeColoring(g, 3, cols)};
}

inline FamilyColoring color_cycle(int n) {
  if (n < 3) throw InputError("color_cycle needs n >= 3");
  const Graph g = cycle_graph(n);
  // Edge i joins i and i+1 (mod n).
  std::vector<EdgeId> ring;
  for (int i = 0; i < n; ++i) ring.push_back(*g.edge_id(i, (i + 1) % n));
  if (n % 3 == 0) {
    EdgeColoring c(g, 3);
    for (int i = 0; i < n; ++i) c.set(ring[static_cast<std::size_t>(i)], i % 3 + 1);
    return {3, c};
  }
  const int k = n == 5 ? 5 : 4;
  for (int frozen = std::max(0, n - 6); frozen >= 0; --frozen) {
    EdgeColoring partial(g, k);
    for (int i = 0; i < frozen; ++i) partial.set(ring[static_cast<std::size_t>(i)], i % 3 + 1);
    auto r = complete_partial(partial, Mode::QuasiMajority, k);
    if (r.found()) return {k, *r.coloring};
  }
  throw InternalError("color_cycle: tail completion failed");
}

// ---------------------------------------------------------------- complete graphs

namespace detail {

/// Colors K_n on vertices 0..n-1 into `c` (which is a coloring of K_N, N >= n).
inline void color_complete_into(EdgeColoring& c, int n) {
  const Graph& g = c.graph();
  auto set = [&](Vertex a, Vertex b, Color x) { c.set(*g.edge_id(a, b), x); };
  if (n == 3) {
    set(0, 1, 1);
    set(0, 2, 2);
    set(1, 2, 3);
    return;
  }
  if (n == 4) {
    const std::array<Color, 6> fig{1, 2, 2, 1, 2, 3};
    int i = 0;
    for (Vertex a = 0; a < 4; ++a)
      for (Vertex b = a + 1; b < 4; ++b) set(a, b, fig[static_cast<std::size_t>(i++)]);
    return;
  }
  color_complete_into(c, n - 2);
  const Vertex x = n - 2;  // receives color 1 on the "free" side
  const Vertex y = n - 1;  // receives color 3 on the "free" side
  const int m = n - 2;     // order of the recursive part
  // Odd n = 2k+1 needs the k-1 vertices with k-2 color-2 edges; even n = 2k
  // needs k-2 vertices with at most k-2 color-2 edges.
  const int kk = n / 2;
  const int want = n % 2 == 1 ? kk - 1 : kk - 2;
  const int bound = kk - 2;
  auto color2 = [&](Vertex v) {
    int cnt = 0;
    for (Vertex w = 0; w < m; ++w)
      if (w != v && c[*g.edge_id(v, w)] == 2) ++cnt;
    return cnt;
  };
  std::vector<char> heavy(static_cast<std::size_t>(m), 0);
  int picked = 0;
  for (Vertex v = 0; v < m && picked < want; ++v) {
    if (color2(v) <= bound) {
      heavy[static_cast<std::size_t>(v)] = 1;
      ++picked;
    }
  }
  if (picked < want) throw InternalError("color_complete: induction hypothesis failed");
  set(x, y, 2);
  for (Vertex v = 0; v < m; ++v) {
    if (heavy[static_cast<std::size_t>(v)]) {
      set(x, v, 2);
      set(y, v, 2);
    } else {
      set(x, v, 1);
      set(y, v, 3);
    }
  }
}

}  // namespace detail

/// Three-coloring of K_n built by the two-vertex recursion from K_3 / K_4.
inline FamilyColoring color_complete(int n) {
  if (n < 3) throw InputError("color_complete needs n >= 3");
  EdgeColoring c(complete_graph(n), 3);
  detail::color_complete_into(c, n);
  return {3, c};
}

/// Number of color-2 edges at each vertex.
inline std::vector<int> color_profile(const EdgeColoring& c, Color color) {
  std::vector<int> out(static_cast<std::size_t>(c.graph().order()));
  for (Vertex v = 0; v < c.graph().order(); ++v) out[static_cast<std::size_t>(v)] = c.count(v, color);
  return out;
}

// ---------------------------------------------------------------- complete bipartite

/// K_{n,m} with sides a_i = i-1 and b_j = n+j-1.
inline FamilyColoring color_complete_bipartite(int n, int m) {
  if (n < 1 || m < 1) throw InputError("color_complete_bipartite needs n, m >= 1");
  if (n == 1 && m == 1) throw InputError("K_{1,1} is not nice");
  const Graph g = complete_bipartite_graph(n, m);
  if (n != m) {
    auto c = qm_two_coloring(g);
    if (!c) throw InternalError("color_complete_bipartite: bipartite graph without a QM 2-coloring");
    return {2, *c};
  }
  if (n == 2) return {4, fixture_k22_qmnsd4().coloring()};
  EdgeColoring c(g, 3);
  const int h = (n + 1) / 2;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Color col;
      if ((i <= h && j <= h) || (i > h && j > h)) {
        col = 1;
      } else if (n % 2 == 1) {
        col = i <= h ? 2 : 3;
      } else {
        col = i % 2 == 1 ? 2 : 3;
      }
      c.set(*g.edge_id(i - 1, n + j - 1), col);
    }
  }
  return {3, c};
}

// ---------------------------------------------------------------- trees

enum class TreeType { None, T1, T2, T3, E1, E2, E3, O1, O2, O3 };

inline std::string_view tree_type_name(TreeType t) {
  switch (t) {
    case TreeType::None: return "-";
    case TreeType::T1: return "(1)";
    case TreeType::T2: return "(2)";
    case TreeType::T3: return "(3)";
    case TreeType::E1: return "E1";
    case TreeType::E2: return "E2";
    case TreeType::E3: return "E3";
    case TreeType::O1: return "O1";
    case TreeType::O2: return "O2";
    case TreeType::O3: return "O3";
  }
  return "?";
}

/// Residue of the vertex sum mod 3 forced by a type.
inline int tree_type_residue(TreeType t) {
  switch (t) {
    case TreeType::T1: case TreeType::E1: case TreeType::O1: return 1;
    case TreeType::T2: case TreeType::E2: case TreeType::O2: return 2;
    case TreeType::T3: case TreeType::E3: case TreeType::O3: return 0;
    case TreeType::None: return -1;
  }
  return -1;
}

/// Color multiplicities (of colors 1, 2, 3) prescribed by a type at degree d.
inline std::array<int, 3> tree_type_counts(TreeType t, int d) {
  switch (t) {
    case TreeType::T1: return {(d + 1) / 2, (d - 1) / 2, 0};
    case TreeType::T2: return {(d - 1) / 2, (d + 1) / 2, 0};
    case TreeType::T3: return {d / 2, d / 2, 0};
    case TreeType::E1: return {d / 2, d / 2 - 1, 1};
    case TreeType::E2: return {d / 2 - 1, d / 2, 1};
    case TreeType::E3: return {d / 2, d / 2, 0};
    case TreeType::O1: return {(d - 1) / 2, (d - 3) / 2, 2};
    case TreeType::O2: return {(d - 3) / 2, (d - 1) / 2, 2};
    case TreeType::O3: return {(d - 1) / 2, (d - 1) / 2, 1};
    case TreeType::None: break;
  }
  return {0, 0, 0};
}

/// Table of child types in the three-color regime: row c(xy), column the
/// parent's type; the first entry is for even d(y), the second for odd.
/// Where two options are listed the first one is used.
inline std::optional<TreeType> tree_table(Color cxy, TreeType parent, bool child_even) {
  using T = TreeType;
  auto pick = [&](T e, T o) { return child_even ? e : o; };
  switch (cxy) {
    case 1:
      switch (parent) {
        case T::E1: case T::O1: return pick(T::E3, T::O3);
        case T::E2: case T::O2: return pick(T::E1, T::O1);
        case T::E3: case T::O3: return pick(T::E1, T::O1);
        default: return std::nullopt;
      }
    case 2:
      switch (parent) {
        case T::E1: case T::O1: return pick(T::E2, T::O2);
        case T::E2: case T::O2: return pick(T::E3, T::O3);
        case T::E3: case T::O3: return pick(T::E2, T::O2);
        default: return std::nullopt;
      }
    case 3:
      switch (parent) {
        case T::E1: case T::O1: return pick(T::E2, T::O2);
        case T::E2: case T::O2: return pick(T::E1, T::O1);
        case T::O3: return pick(T::E1, T::O1);
        default: return std::nullopt;
      }
    default: return std::nullopt;
  }
}

/// True iff some edge joins two vertices of the same even degree.
inline bool has_equal_even_adjacency(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (g.degree(u) == g.degree(v) && g.degree(u) % 2 == 0) return true;
  }
  return false;
}

struct TreeColoring {
  int k = 0;
  EdgeColoring coloring;
  Vertex root = -1;
  std::vector<Vertex> parent;    // -1 for the root
  std::vector<TreeType> types;   // None for leaves
};

inline TreeColoring color_tree_detailed(const Graph& t) {
  if (!is_tree(t)) throw InputError("color_tree needs a tree");
  if (t.order() < 3) throw InputError("color_tree needs n >= 3");
  const bool three = has_equal_even_adjacency(t);
  TreeColoring out;
  out.k = three ? 3 : 2;
  out.coloring = EdgeColoring(t, out.k);
  out.parent.assign(static_cast<std::size_t>(t.order()), -1);
  out.types.assign(static_cast<std::size_t>(t.order()), TreeType::None);
  Vertex root = 0;
  for (Vertex v = 1; v < t.order(); ++v)
    if (t.degree(v) > t.degree(root)) root = v;
  out.root = root;

  // Colors the uncolored edges at v (in ascending neighbor order) so that v
  // ends up with the color multiset of `type`.
  auto realize = [&](Vertex v, TreeType type) {
    auto want = tree_type_counts(type, t.degree(v));
    for (EdgeId e : t.incident(v)) {
      const Color c = out.coloring[e];
      if (c != 0) --want[static_cast<std::size_t>(c - 1)];
    }
    for (EdgeId e : t.incident(v)) {
      if (out.coloring[e] != 0) continue;
      Color c = 1;
      while (want[static_cast<std::size_t>(c - 1)] == 0) ++c;
      --want[static_cast<std::size_t>(c - 1)];
      out.coloring.set(e, c);
    }
    out.types[static_cast<std::size_t>(v)] = type;
  };

  const bool root_even = t.degree(root) % 2 == 0;
  if (three) {
    realize(root, root_even ? TreeType::E3 : TreeType::O3);
  } else {
    realize(root, root_even ? TreeType::T3 : TreeType::T1);
  }
  std::deque<Vertex> queue{root};
  std::vector<char> seen(static_cast<std::size_t>(t.order()), 0);
  seen[static_cast<std::size_t>(root)] = 1;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : t.neighbors(x)) {
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      out.parent[static_cast<std::size_t>(y)] = x;
      queue.push_back(y);
      if (t.degree(y) == 1) continue;
      const bool even = t.degree(y) % 2 == 0;
      const TreeType tx = out.types[static_cast<std::size_t>(x)];
      TreeType ty;
      if (three) {
        const Color cxy = out.coloring[*t.edge_id(x, y)];
        auto entry = tree_table(cxy, tx, even);
        if (!entry) throw InternalError("color_tree: empty table cell reached");
        ty = *entry;
      } else if (even) {
        ty = TreeType::T3;
      } else {
        ty = tx == TreeType::T1 ? TreeType::T2 : TreeType::T1;
      }
      realize(y, ty);
    }
  }
  return out;
}

inline FamilyColoring color_tree(const Graph& t) {
  auto d = color_tree_detailed(t);
  return {d.k, std::move(d.coloring)};
}

// ---------------------------------------------------------------- two-color shortcuts

inline bool has_equal_degree_adjacency(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (g.degree(u) == g.degree(v)) return true;
  }
  return false;
}

/// A quasi-majority 2-coloring is automatically NSD when adjacent vertices
/// always have different degrees.
inline std::optional<FamilyColoring> qmnsd_from_qm2(const Graph& g) {
  if (has_equal_degree_adjacency(g)) throw PreconditionError("qmnsd_from_qm2: two adjacent vertices share a degree");
  auto c = qm_two_coloring(g);
  if (!c) return std::nullopt;
  return FamilyColoring{2, *c};
}

/// True iff the colors at every vertex are distinct and consecutive.
inline bool is_interval_coloring(const EdgeColoring& c) {
  const Graph& g = c.graph();
  if (!c.is_total()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) continue;
    std::vector<Color> cols;
    for (EdgeId e : g.incident(v)) cols.push_back(c[e]);
    std::sort(cols.begin(), cols.end());
    for (std::size_t i = 1; i < cols.size(); ++i)
      if (cols[i] != cols[i - 1] + 1) return false;
  }
  return true;
}

/// Parity reduction of an interval coloring: odd colors become 1, even become 2.
inline FamilyColoring qmnsd_from_interval(const EdgeColoring& interval) {
  const Graph& g = interval.graph();
  if (!is_interval_coloring(interval)) throw InputError("qmnsd_from_interval: not an interval coloring");
  if (has_equal_degree_adjacency(g)) {
    throw PreconditionError("qmnsd_from_interval: two adjacent vertices share a degree");
  }
  EdgeColoring c(g, 2);
  for (EdgeId e = 0; e < g.size(); ++e) c.set(e, interval[e] % 2 == 1 ? 1 : 2);
  return {2, c};
}

/// The interval coloring c'(a_i b_j) = i + j - 1 of K_{n,m}.
inline EdgeColoring complete_bipartite_interval(int n, int m) {
  const Graph g = complete_bipartite_graph(n, m);
  EdgeColoring c(g, n + m - 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) c.set(*g.edge_id(i - 1, n + j - 1), i + j - 1);
  return c;
}

}  // namespace nsd
