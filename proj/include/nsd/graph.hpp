#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nsd/errors.hpp"

namespace nsd {

using Vertex = int;
using EdgeId = int;

/// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted by (min endpoint, max endpoint); an EdgeId is the
/// position in that order. The graph is immutable and cheap to copy (the
/// adjacency data is shared).
class Graph {
 public:
  Graph() : data_(std::make_shared<Data>()) {}

  /// Builds a graph, dropping duplicate edges. Throws InputError on loops or
  /// out-of-range endpoints.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edge_list) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                         ") has an endpoint outside [0," + std::to_string(n) + ")");
      }
      if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
      edges.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edge_list) {
    return from_edges(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
  }

  /// Edges must already be canonical, sorted and unique.
  static Graph from_sorted_edges(int n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

  int order() const noexcept { return data_->n; }
  int size() const noexcept { return static_cast<int>(data_->edges.size()); }

  const std::vector<Edge>& edges() const noexcept { return data_->edges; }
  const Edge& edge(EdgeId e) const { return data_->edges[static_cast<std::size_t>(e)]; }

  std::span<const Vertex> neighbors(Vertex v) const { return data_->adj[static_cast<std::size_t>(v)]; }
  /// Incident edge ids, aligned with neighbors(v).
  std::span<const EdgeId> incident(Vertex v) const { return data_->inc[static_cast<std::size_t>(v)]; }

  int degree(Vertex v) const { return static_cast<int>(data_->adj[static_cast<std::size_t>(v)].size()); }
  int max_degree() const noexcept { return data_->max_degree; }
  int min_degree() const noexcept { return data_->min_degree; }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= order() || b >= order() || a == b) return std::nullopt;
    if (degree(a) > degree(b)) std::swap(a, b);
    auto nbrs = neighbors(a);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
    if (it == nbrs.end() || *it != b) return std::nullopt;
    return incident(a)[static_cast<std::size_t>(it - nbrs.begin())];
  }

  bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

  Vertex other(EdgeId e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges() == b.edges();
  }

 private:
  struct Data {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> adj;
    std::vector<std::vector<EdgeId>> inc;
    int max_degree = 0;
    int min_degree = 0;
  };

  Graph(int n, std::vector<Edge> edges) {
    auto d = std::make_shared<Data>();
    d->n = n;
    d->edges = std::move(edges);
    d->adj.resize(static_cast<std::size_t>(n));
    d->inc.resize(static_cast<std::size_t>(n));
    // Edges are sorted by (u, v), so pushing in order keeps every list sorted.
    for (std::size_t i = 0; i < d->edges.size(); ++i) {
      const auto [u, v] = d->edges[i];
      d->adj[static_cast<std::size_t>(u)].push_back(v);
      d->inc[static_cast<std::size_t>(u)].push_back(static_cast<EdgeId>(i));
    }
    for (std::size_t i = 0; i < d->edges.size(); ++i) {
      const auto [u, v] = d->edges[i];
      d->adj[static_cast<std::size_t>(v)].push_back(u);
      d->inc[static_cast<std::size_t>(v)].push_back(static_cast<EdgeId>(i));
    }
    for (int v = 0; v < n; ++v) {
      auto& a = d->adj[static_cast<std::size_t>(v)];
      auto& in = d->inc[static_cast<std::size_t>(v)];
      std::vector<std::size_t> perm(a.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return a[x] < a[y]; });
      std::vector<Vertex> a2;
      std::vector<EdgeId> in2;
      for (auto p : perm) {
        a2.push_back(a[p]);
        in2.push_back(in[p]);
      }
      a = std::move(a2);
      in = std::move(in2);
    }
    if (n > 0) {
      d->max_degree = 0;
      d->min_degree = static_cast<int>(d->adj[0].size());
      for (const auto& a : d->adj) {
        d->max_degree = std::max(d->max_degree, static_cast<int>(a.size()));
        d->min_degree = std::min(d->min_degree, static_cast<int>(a.size()));
      }
    }
    data_ = std::move(d);
  }

  std::shared_ptr<const Data> data_;
};

inline Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list) {
  return Graph::from_edges(n, edge_list);
}

inline std::vector<int> degrees(const Graph& g) {
  std::vector<int> out(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = g.degree(v);
  return out;
}

/// Connected components, each sorted ascending; the list is ordered by smallest member.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// Component index of every vertex, matching the order of components(g).
inline std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (const auto& comp : components(g)) {
    for (Vertex v : comp) label[static_cast<std::size_t>(v)] = next;
    ++next;
  }
  return label;
}

/// True iff no connected component is a single edge (K2).
inline bool is_nice(const Graph& g) {
  for (const auto& comp : components(g)) {
    if (comp.size() == 2) return false;
  }
  return true;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

inline bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

inline bool is_regular(const Graph& g) { return g.order() == 0 || g.min_degree() == g.max_degree(); }

inline bool all_degrees_even(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return true;
}

/// True iff some vertex has degree exactly one (isolated vertices are allowed).
inline bool has_pendant_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) return true;
  }
  return false;
}

struct Bipartition {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
  std::vector<int> side;  // 0 for first, 1 for second
};

/// BFS two-coloring: each component starts at its smallest vertex, which goes
/// to the first side. Returns nullopt for non-bipartite graphs.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition bp;
  bp.side.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (bp.side[static_cast<std::size_t>(s)] != -1) continue;
    bp.side[static_cast<std::size_t>(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        auto& sw = bp.side[static_cast<std::size_t>(w)];
        const int sv = bp.side[static_cast<std::size_t>(v)];
        if (sw == -1) {
          sw = 1 - sv;
          queue.push_back(w);
        } else if (sw == sv) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    (bp.side[static_cast<std::size_t>(v)] == 0 ? bp.first : bp.second).push_back(v);
  }
  return bp;
}

/// A subgraph with maps back into its parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> parent_vertex;  // local vertex -> parent vertex
  std::vector<EdgeId> parent_edge;    // local edge -> parent edge
};

/// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<std::pair<Edge, EdgeId>> picked;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.edge(e);
    const int lu = local[static_cast<std::size_t>(u)];
    const int lv = local[static_cast<std::size_t>(v)];
    if (lu >= 0 && lv >= 0) picked.push_back({Edge{std::min(lu, lv), std::max(lu, lv)}, e});
  }
  std::sort(picked.begin(), picked.end());
  Subgraph sub;
  std::vector<Edge> edges;
  for (const auto& [ed, pe] : picked) {
    edges.push_back(ed);
    sub.parent_edge.push_back(pe);
  }
  sub.graph = Graph::from_sorted_edges(static_cast<int>(vertices.size()), std::move(edges));
  sub.parent_vertex.assign(vertices.begin(), vertices.end());
  return sub;
}

/// Spanning subgraph keeping only the listed edges (vertex labels unchanged).
inline Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> keep) {
  std::vector<EdgeId> ids(keep.begin(), keep.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Subgraph sub;
  std::vector<Edge> edges;
  edges.reserve(ids.size());
  for (EdgeId e : ids) edges.push_back(g.edge(e));
  sub.graph = Graph::from_sorted_edges(g.order(), std::move(edges));
  sub.parent_edge = std::move(ids);
  sub.parent_vertex.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) sub.parent_vertex[static_cast<std::size_t>(v)] = v;
  return sub;
}

/// Spanning subgraph with the listed edges removed.
inline Subgraph remove_edges(const Graph& g, std::span<const EdgeId> drop) {
  std::vector<char> gone(static_cast<std::size_t>(g.size()), 0);
  for (EdgeId e : drop) gone[static_cast<std::size_t>(e)] = 1;
  std::vector<EdgeId> keep;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!gone[static_cast<std::size_t>(e)]) keep.push_back(e);
  }
  return edge_subgraph(g, keep);
}

/// Relabels vertices so that new label i is old vertex order[i].
inline Subgraph relabel(const Graph& g, std::span<const Vertex> order) {
  if (static_cast<int>(order.size()) != g.order()) throw InputError("relabel order must be a permutation");
  return induced_subgraph(g, order);
}

}  // namespace nsd
