#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "nsd/coloring.hpp"
#include "nsd/errors.hpp"
#include "nsd/graph.hpp"
#include "nsd/verify.hpp"

namespace nsd {

/// Closed walk given as an edge sequence; consecutive edges share a vertex.
struct EulerTour {
  Vertex start = -1;
  std::vector<EdgeId> edges;
};

/// Hierholzer's algorithm over the edges reachable from `start`, always
/// leaving a vertex by its smallest unused incident edge. Every vertex reached
/// must have even degree.
inline EulerTour euler_circuit(const Graph& g, Vertex start, std::vector<char>& used) {
  EulerTour tour;
  tour.start = start;
  std::vector<std::size_t> next(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::pair<Vertex, EdgeId>> stack{{start, -1}};
  while (!stack.empty()) {
    const Vertex v = stack.back().first;
    auto inc = g.incident(v);
    auto& p = next[static_cast<std::size_t>(v)];
    while (p < inc.size() && used[static_cast<std::size_t>(inc[p])]) ++p;
    if (p < inc.size()) {
      const EdgeId e = inc[p];
      used[static_cast<std::size_t>(e)] = 1;
      stack.emplace_back(g.other(e, v), e);
    } else {
      if (stack.back().second >= 0) tour.edges.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(tour.edges.begin(), tour.edges.end());
  return tour;
}

/// Outcome of splitting E(G) into two classes by Euler-tour alternation.
struct TwoSplit {
  std::vector<Color> side;  // 1 or 2 per edge
  /// One entry per component with all degrees even and an odd number of
  /// edges: the tour's start vertex, which carries d/2 + 1 edges of class 1.
  std::vector<Vertex> exceptional;
  /// First tour edge at each exceptional vertex (class 1).
  std::vector<EdgeId> exceptional_edge;
  std::vector<EulerTour> tours;
};

/// Picks the tour start of an all-even component (vertices sorted ascending).
using StartChooser = std::function<Vertex(const Graph&, const std::vector<Vertex>&)>;

inline Vertex smallest_non_isolated(const Graph& g, const std::vector<Vertex>& comp) {
  for (Vertex v : comp) {
    if (g.degree(v) > 0) return v;
  }
  return comp.front();
}

/// Colors edges alternately 1, 2 along Euler circuits. Odd-degree vertices are
/// joined to one virtual vertex, whose circuit is started first; afterwards
/// every remaining (all-even) component gets its own circuit from `choose`.
inline TwoSplit alternating_split(const Graph& g, const StartChooser& choose = smallest_non_isolated) {
  const int n = g.order();
  TwoSplit out;
  out.side.assign(static_cast<std::size_t>(g.size()), 0);
  std::vector<std::pair<int, int>> aug;
  aug.reserve(static_cast<std::size_t>(g.size()) + static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges()) aug.emplace_back(u, v);
  bool has_odd = false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) % 2 == 1) {
      aug.emplace_back(v, n);
      has_odd = true;
    }
  }
  const Graph h = Graph::from_edges(n + 1, aug);
  // Map augmented edge ids back; virtual edges map to -1.
  std::vector<EdgeId> real(static_cast<std::size_t>(h.size()), -1);
  for (EdgeId e = 0; e < h.size(); ++e) {
    const auto [u, v] = h.edge(e);
    if (v < n) real[static_cast<std::size_t>(e)] = *g.edge_id(u, v);
  }
  std::vector<char> used(static_cast<std::size_t>(h.size()), 0);
  auto paint = [&](const EulerTour& t) {
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      const EdgeId r = real[static_cast<std::size_t>(t.edges[i])];
      if (r >= 0) out.side[static_cast<std::size_t>(r)] = (i % 2 == 0) ? 1 : 2;
    }
  };
  if (has_odd) {
    auto t = euler_circuit(h, n, used);
    paint(t);
    out.tours.push_back(std::move(t));
  }
  for (const auto& comp : components(g)) {
    bool pending = false;
    for (Vertex v : comp) {
      for (EdgeId e : g.incident(v)) {
        if (out.side[static_cast<std::size_t>(e)] == 0) pending = true;
      }
    }
    if (!pending) continue;
    const Vertex s = choose(g, comp);
    auto t = euler_circuit(h, s, used);
    for (auto& e : t.edges) e = real[static_cast<std::size_t>(e)];
    t.start = s;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      out.side[static_cast<std::size_t>(t.edges[i])] = (i % 2 == 0) ? 1 : 2;
    }
    if (t.edges.size() % 2 == 1) {
      out.exceptional.push_back(s);
      out.exceptional_edge.push_back(t.edges.front());
    }
    out.tours.push_back(std::move(t));
  }
  if (!out.tours.empty() && has_odd) {
    auto& first = out.tours.front();
    std::vector<EdgeId> mapped;
    for (EdgeId e : first.edges) {
      if (real[static_cast<std::size_t>(e)] >= 0) mapped.push_back(real[static_cast<std::size_t>(e)]);
    }
    first.edges = std::move(mapped);
  }
  return out;
}

/// Quasi-majority 2-coloring, absent iff some component has all degrees even
/// and an odd number of edges.
inline std::optional<EdgeColoring> qm_two_coloring(const Graph& g) {
  auto split = alternating_split(g);
  if (!split.exceptional.empty()) return std::nullopt;
  return EdgeColoring(g, 2, split.side);
}

/// Quasi-majority coloring with at most three colors. Color 3 is used on one
/// edge per component that has no quasi-majority 2-coloring.
inline EdgeColoring qm_three_coloring(const Graph& g) {
  auto split = alternating_split(g);
  const int k = split.exceptional.empty() ? 2 : 3;
  EdgeColoring c(g, k, split.side);
  for (EdgeId e : split.exceptional_edge) c.set(e, 3);
  return c;
}

/// Majority 2-coloring: exists iff every component has all degrees even and
/// an even number of edges; each vertex then sees d/2 edges of each color.
inline std::optional<EdgeColoring> majority_two_coloring(const Graph& g) {
  if (!all_degrees_even(g)) return std::nullopt;
  auto split = alternating_split(g);
  if (!split.exceptional.empty()) return std::nullopt;
  return EdgeColoring(g, 2, split.side);
}

inline void require_min_degree_two(const Graph& g, const char* who) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) {
      throw PreconditionError(std::string(who) + ": vertex " + std::to_string(v) + " has degree 1");
    }
  }
}

/// Majority coloring with at most four colors for graphs without degree-1
/// vertices: split E into classes A, B, then split A into colors {1,2} and B
/// into {3,4}.
inline EdgeColoring majority_four_coloring(const Graph& g) {
  require_min_degree_two(g, "majority_four_coloring");
  auto top = alternating_split(g, [](const Graph& h, const std::vector<Vertex>& comp) {
    Vertex best = comp.front();
    for (Vertex v : comp) {
      if (h.degree(v) > h.degree(best)) best = v;
    }
    return best;
  });
  EdgeColoring c(g, 4);
  struct BadCycle {
    std::vector<EdgeId> edges;  // parent edge ids, in cycle order
    Color low;                  // first color of this class's palette
  };
  std::vector<BadCycle> bad;
  for (Color cls = 1; cls <= 2; ++cls) {
    std::vector<EdgeId> keep;
    for (EdgeId e = 0; e < g.size(); ++e) {
      if (top.side[static_cast<std::size_t>(e)] == cls) keep.push_back(e);
    }
    const auto sub = edge_subgraph(g, keep);
    const Graph& h = sub.graph;
    // Slack left at v if it ends up with d_h/2 + 1 edges of one color.
    auto slack = [&](Vertex v) { return g.degree(v) / 2 - (h.degree(v) / 2 + 1); };
    auto split = alternating_split(h, [&](const Graph& hh, const std::vector<Vertex>& comp) {
      Vertex best = -1;
      for (Vertex v : comp) {
        if (hh.degree(v) == 0) continue;
        if (best < 0 || slack(v) > slack(best)) best = v;
      }
      return best < 0 ? comp.front() : best;
    });
    const Color low = cls == 1 ? 1 : 3;
    for (EdgeId e = 0; e < h.size(); ++e) {
      c.set(sub.parent_edge[static_cast<std::size_t>(e)], low + split.side[static_cast<std::size_t>(e)] - 1);
    }
    for (std::size_t i = 0; i < split.exceptional.size(); ++i) {
      if (slack(split.exceptional[i]) >= 0) continue;
      // Only an odd cycle of degree-3 vertices gets here.
      for (const auto& t : split.tours) {
        if (t.start != split.exceptional[i]) continue;
        BadCycle bc{{}, low};
        for (EdgeId e : t.edges) bc.edges.push_back(sub.parent_edge[static_cast<std::size_t>(e)]);
        bad.push_back(std::move(bc));
      }
    }
  }
  for (const auto& bc : bad) {
    const std::size_t len = bc.edges.size();
    // Vertex shared by cycle edges i and i+1.
    auto joint = [&](std::size_t i) {
      const Edge& a = g.edge(bc.edges[i]);
      const Edge& b = g.edge(bc.edges[(i + 1) % len]);
      return (a.u == b.u || a.u == b.v) ? a.u : a.v;
    };
    auto outside = [&](Vertex v) {
      for (EdgeId e : g.incident(v)) {
        if (std::find(bc.edges.begin(), bc.edges.end(), e) == bc.edges.end()) return c[e];
      }
      throw InternalError("majority_four_coloring: cycle vertex without an outside edge");
    };
    bool fixed = false;
    for (std::size_t i = 0; i < len && !fixed; ++i) {
      // Edge i joins joint(i-1) and joint(i).
      const Vertex x = joint((i + len - 1) % len);
      const Vertex y = joint(i);
      const Color gx = outside(x);
      if (gx != outside(y)) continue;
      const Color other_low = bc.low == 1 ? 3 : 1;
      c.set(bc.edges[i], gx == other_low ? other_low + 1 : other_low);
      for (std::size_t j = 1; j < len; ++j) {
        c.set(bc.edges[(i + j) % len], bc.low + static_cast<Color>((j - 1) % 2));
      }
      fixed = true;
    }
    if (!fixed) throw InternalError("majority_four_coloring: no repair edge on an odd class cycle");
  }
  return c;
}

}  // namespace nsd
