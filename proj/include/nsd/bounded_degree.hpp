#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <initializer_list>
#include <optional>
#include <vector>

#include "nsd/coloring.hpp"
#include "nsd/errors.hpp"
#include "nsd/exact_solver.hpp"
#include "nsd/graph.hpp"
#include "nsd/verify.hpp"

namespace nsd {

inline constexpr int kMaxDeg4Palette = 7;

/// Candidate colors for one pending edge.
using ColorSet = std::vector<Color>;

/// Sums (in the reduced graph) around a degree-4 vertex v whose edges to v1, v2
/// are pending; v3, v4 are the other neighbors.
struct Case1Context {
  Sum v = 0;
  std::array<Sum, 4> nb{};  // sigma(v1) .. sigma(v4)
};

/// Sums of the four neighbors of a deleted vertex v.
struct Case2Context {
  std::array<Sum, 4> nb{};
};

inline bool case1_ok(Color x1, Color x2, const Case1Context& ctx) {
  const Sum v = ctx.v;
  return x1 + x2 + v != ctx.nb[2] && x1 + x2 + v != ctx.nb[3] && x2 + v != ctx.nb[0] && x1 + v != ctx.nb[1] &&
         x1 + ctx.nb[0] != x2 + ctx.nb[1] && x1 != x2;
}

inline bool case2_ok(const std::array<Color, 4>& x, const Case2Context& ctx) {
  const Sum total = static_cast<Sum>(x[0]) + x[1] + x[2] + x[3];
  for (std::size_t i = 0; i < 4; ++i)
    if (total - x[i] == ctx.nb[i]) return false;
  return x[0] != x[1] && x[2] != x[3];
}

/// First pair (lexicographic over F1 x F2) meeting all Case 1 constraints.
inline std::optional<std::pair<Color, Color>> select_case1_pair(const ColorSet& f1, const ColorSet& f2,
                                                                const Case1Context& ctx) {
  for (Color x1 : f1)
    for (Color x2 : f2)
      if (case1_ok(x1, x2, ctx)) return std::pair{x1, x2};
  return std::nullopt;
}

/// First tuple (lexicographic over F1 x .. x F4) meeting all Case 2 constraints.
inline std::optional<std::array<Color, 4>> select_case2_tuple(const std::array<ColorSet, 4>& f,
                                                              const Case2Context& ctx) {
  for (Color a : f[0])
    for (Color b : f[1])
      for (Color c : f[2])
        for (Color d : f[3]) {
          const std::array<Color, 4> x{a, b, c, d};
          if (case2_ok(x, ctx)) return x;
        }
  return std::nullopt;
}

/// Colors that would push w past its quasi-majority cap once one more edge
/// is added at w (final degree final_degree).
inline ColorSet qm_forbidden(const EdgeColoring& c, Vertex w, int final_degree) {
  ColorSet out;
  const int cap = color_cap(Mode::QuasiMajority, final_degree);
  for (Color x = 1; x <= c.k(); ++x)
    if (c.count(w, x) + 1 > cap) out.push_back(x);
  return out;
}

/// Colors x for which sigma(w) + x would equal the (unchanged) sum of a
/// neighbor of w not listed in `skip`.
inline ColorSet sum_forbidden(const EdgeColoring& c, Vertex w, std::initializer_list<Vertex> skip) {
  ColorSet out;
  for (Vertex u : c.graph().neighbors(w)) {
    if (std::find(skip.begin(), skip.end(), u) != skip.end()) continue;
    const Sum x = c.sum(u) - c.sum(w);
    if (x >= 1 && x <= c.k()) out.push_back(static_cast<Color>(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// [k] minus both forbidden lists.
inline ColorSet admissible(int k, const ColorSet& qm, const ColorSet& sums) {
  ColorSet out;
  for (Color x = 1; x <= k; ++x) {
    if (std::find(qm.begin(), qm.end(), x) == qm.end() && std::find(sums.begin(), sums.end(), x) == sums.end()) {
      out.push_back(x);
    }
  }
  return out;
}

struct MaxDeg4Stats {
  int case1 = 0;
  int case2 = 0;
  int base_components = 0;
  int empty_scans = 0;
  int min_f_case1 = kMaxDeg4Palette;
  int min_f_case2 = kMaxDeg4Palette;
};

namespace detail {

/// Base case: each non-K2 component solved exactly at k=7 after a BFS
/// relabel (keeps the solver's edge order local). K2 components get color 1.
inline EdgeColoring maxdeg4_base(const Graph& g, MaxDeg4Stats& stats) {
  EdgeColoring c(g, kMaxDeg4Palette);
  for (const auto& comp : components(g)) {
    if (comp.size() == 1) continue;
    if (comp.size() == 2) {
      c.set(g.incident(comp.front())[0], 1);
      continue;
    }
    std::vector<Vertex> order{comp.front()};
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    seen[static_cast<std::size_t>(comp.front())] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Vertex w : g.neighbors(order[i])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          order.push_back(w);
        }
      }
    }
    const auto sub = induced_subgraph(g, order);
    auto r = find_coloring(sub.graph, Mode::QuasiMajority, kMaxDeg4Palette);
    if (!r.found()) throw InternalError("qmnsd_maxdeg4: base case search failed");
    for (EdgeId e = 0; e < sub.graph.size(); ++e) c.set(sub.parent_edge[static_cast<std::size_t>(e)], (*r.coloring)[e]);
    ++stats.base_components;
  }
  return c;
}

/// Lifts a coloring of a spanning subgraph back onto g.
inline EdgeColoring lift(const Graph& g, const Subgraph& sub, const EdgeColoring& c) {
  EdgeColoring out(g, c.k());
  for (EdgeId e = 0; e < sub.graph.size(); ++e) out.set(sub.parent_edge[static_cast<std::size_t>(e)], c[e]);
  return out;
}

inline EdgeColoring maxdeg4_rec(const Graph& g, MaxDeg4Stats& stats) {
  Vertex v = -1;
  for (Vertex u = 0; u < g.order() && v < 0; ++u)
    if (g.degree(u) == 4) v = u;
  if (v < 0) return maxdeg4_base(g, stats);

  const auto nb = g.neighbors(v);
  std::array<Vertex, 4> n{nb[0], nb[1], nb[2], nb[3]};
  std::optional<std::pair<int, int>> pair;
  for (int i = 0; i < 4 && !pair; ++i)
    for (int j = i + 1; j < 4 && !pair; ++j)
      if (g.adjacent(n[static_cast<std::size_t>(i)], n[static_cast<std::size_t>(j)])) pair = std::pair{i, j};

  if (pair) {
    // Case 1: v1 v2 adjacent; drop vv1 and vv2.
    std::array<Vertex, 4> o{};
    o[0] = n[static_cast<std::size_t>(pair->first)];
    o[1] = n[static_cast<std::size_t>(pair->second)];
    int next = 2;
    for (int i = 0; i < 4; ++i)
      if (i != pair->first && i != pair->second) o[static_cast<std::size_t>(next++)] = n[static_cast<std::size_t>(i)];
    const std::array<EdgeId, 2> drop{*g.edge_id(v, o[0]), *g.edge_id(v, o[1])};
    const auto sub = remove_edges(g, drop);
    auto c = lift(g, sub, maxdeg4_rec(sub.graph, stats));
    std::array<ColorSet, 2> f;
    for (std::size_t i = 0; i < 2; ++i) {
      const Vertex w = o[i];
      f[i] = admissible(kMaxDeg4Palette, qm_forbidden(c, w, g.degree(w)), sum_forbidden(c, w, {v, o[1 - i]}));
      stats.min_f_case1 = std::min(stats.min_f_case1, static_cast<int>(f[i].size()));
      if (f[i].size() < 4) throw InternalError("qmnsd_maxdeg4: admissible set below 4 in the two-edge case");
    }
    Case1Context ctx{c.sum(v), {c.sum(o[0]), c.sum(o[1]), c.sum(o[2]), c.sum(o[3])}};
    auto pick = select_case1_pair(f[0], f[1], ctx);
    ++stats.case1;
    if (!pick) {
      ++stats.empty_scans;
      throw InternalError("qmnsd_maxdeg4: empty scan in the two-edge case");
    }
    c.set(drop[0], pick->first);
    c.set(drop[1], pick->second);
    return c;
  }

  // Case 2: independent neighborhood; drop all four edges at v.
  const std::array<EdgeId, 4> drop{*g.edge_id(v, n[0]), *g.edge_id(v, n[1]), *g.edge_id(v, n[2]),
                                   *g.edge_id(v, n[3])};
  const auto sub = remove_edges(g, drop);
  auto c = lift(g, sub, maxdeg4_rec(sub.graph, stats));
  std::array<ColorSet, 4> f;
  Case2Context ctx;
  for (std::size_t i = 0; i < 4; ++i) {
    const Vertex w = n[i];
    f[i] = admissible(kMaxDeg4Palette, qm_forbidden(c, w, g.degree(w)), sum_forbidden(c, w, {v}));
    ctx.nb[i] = c.sum(w);
    stats.min_f_case2 = std::min(stats.min_f_case2, static_cast<int>(f[i].size()));
    if (f[i].size() < 3) throw InternalError("qmnsd_maxdeg4: admissible set below 3 in the vertex case");
  }
  auto pick = select_case2_tuple(f, ctx);
  ++stats.case2;
  if (!pick) {
    ++stats.empty_scans;
    throw InternalError("qmnsd_maxdeg4: empty scan in the vertex case");
  }
  for (std::size_t i = 0; i < 4; ++i) c.set(drop[i], (*pick)[i]);
  return c;
}

}  // namespace detail

/// Quasi-majority NSD coloring with at most 7 colors for nice graphs of
/// maximum degree at most 4.
inline EdgeColoring qmnsd_maxdeg4(const Graph& g, MaxDeg4Stats* stats = nullptr) {
  if (!is_nice(g)) throw InputError("qmnsd_maxdeg4: graph has a K2 component");
  if (g.max_degree() > 4) throw InputError("qmnsd_maxdeg4: maximum degree exceeds 4");
  MaxDeg4Stats local;
  auto c = detail::maxdeg4_rec(g, stats ? *stats : local);
  ensure_verified(c, Mode::QuasiMajority, "qmnsd_maxdeg4");
  return c;
}

}  // namespace nsd
