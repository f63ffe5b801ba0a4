#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <vector>

#include "nsd/coloring.hpp"
#include "nsd/errors.hpp"
#include "nsd/graph.hpp"
#include "nsd/qm_base.hpp"
#include "nsd/verify.hpp"

namespace nsd {

/// Residue targets used by the mod-3 coloring, one entry per vertex.
struct ResiduePlan {
  std::vector<int> target;          // required sigma(v) mod 3, -1 for isolated vertices
  std::vector<Vertex> root;         // one per component, in component order
  std::vector<int> uniform_side;    // 0 or 1 per component: side holding a single residue
  std::vector<int> uniform_residue; // residue of that side
  std::vector<Vertex> parent;       // spanning forest, -1 at roots
  std::vector<EdgeId> parent_edge;  // edge to parent, -1 at roots
};

inline int residue(Sum s) { return static_cast<int>(((s % 3) + 3) % 3); }

/// True iff in every component the residues on one side never occur on the other.
inline bool residues_separated(const Graph& g, const Bipartition& bp, const std::vector<Sum>& sums) {
  const auto labels = component_labels(g);
  const int comps = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::array<std::array<char, 3>, 2>> seen(static_cast<std::size_t>(comps));
  for (auto& s : seen) s = {};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) continue;
    seen[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])][static_cast<std::size_t>(
        bp.side[static_cast<std::size_t>(v)])][static_cast<std::size_t>(residue(sums[static_cast<std::size_t>(v)]))] = 1;
  }
  for (const auto& s : seen) {
    for (int r = 0; r < 3; ++r)
      if (s[0][static_cast<std::size_t>(r)] && s[1][static_cast<std::size_t>(r)]) return false;
  }
  return true;
}

namespace detail {

inline Bipartition require_nice_bipartite(const Graph& g, const char* who) {
  if (!is_nice(g)) throw InputError(std::string(who) + ": graph has a K2 component");
  auto bp = bipartition(g);
  if (!bp) throw InputError(std::string(who) + ": graph is not bipartite");
  return *bp;
}

}  // namespace detail

/// Chooses residue targets with sum over one side congruent to the sum over
/// the other side, so that a spanning-tree pass can realize all of them.
inline ResiduePlan plan_residues(const Graph& g, const Bipartition& bp) {
  ResiduePlan plan;
  plan.target.assign(static_cast<std::size_t>(g.order()), -1);
  plan.parent.assign(static_cast<std::size_t>(g.order()), -1);
  plan.parent_edge.assign(static_cast<std::size_t>(g.order()), -1);
  for (const auto& comp : components(g)) {
    if (comp.size() == 1) continue;
    std::array<std::vector<Vertex>, 2> sides;
    for (Vertex v : comp) sides[static_cast<std::size_t>(bp.side[static_cast<std::size_t>(v)])].push_back(v);
    // The two-residue side needs at least two vertices.
    const int uni = sides[1].size() >= 2 ? 0 : 1;
    const auto& a = sides[static_cast<std::size_t>(uni)];
    const auto& b = sides[static_cast<std::size_t>(1 - uni)];
    const int r = 1;
    const int s1 = 2;
    const int s2 = 0;
    const int need = residue(static_cast<Sum>(r) * static_cast<Sum>(a.size()));
    // x vertices of b take s1 and the rest s2: total s2*|b| + (s1-s2)*x.
    int x = 0;
    while (residue(static_cast<Sum>(s2) * static_cast<Sum>(b.size()) + static_cast<Sum>(s1 - s2) * x) != need) ++x;
    if (x > static_cast<int>(b.size())) throw InternalError("plan_residues: side too small");
    for (Vertex v : a) plan.target[static_cast<std::size_t>(v)] = r;
    for (std::size_t i = 0; i < b.size(); ++i) plan.target[static_cast<std::size_t>(b[i])] = static_cast<int>(i) < x ? s1 : s2;
    plan.root.push_back(comp.front());
    plan.uniform_side.push_back(uni);
    plan.uniform_residue.push_back(r);
  }
  return plan;
}

/// 3-edge-coloring whose vertex sums separate the two sides of every
/// component mod 3, hence neighbor-sum-distinguishing.
inline EdgeColoring z3_nsd_coloring(const Graph& g) {
  const auto bp = detail::require_nice_bipartite(g, "z3_nsd_coloring");
  auto plan = plan_residues(g, bp);
  EdgeColoring c(g, 3);
  std::vector<char> tree(static_cast<std::size_t>(g.size()), 0);
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex root : plan.root) {
    std::deque<Vertex> queue{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      order.push_back(v);
      const auto nb = g.neighbors(v);
      const auto inc = g.incident(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        const Vertex w = nb[i];
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        plan.parent[static_cast<std::size_t>(w)] = v;
        plan.parent_edge[static_cast<std::size_t>(w)] = inc[i];
        tree[static_cast<std::size_t>(inc[i])] = 1;
        queue.push_back(w);
      }
    }
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!tree[static_cast<std::size_t>(e)]) c.set(e, 1);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const EdgeId pe = plan.parent_edge[static_cast<std::size_t>(v)];
    if (pe < 0) continue;
    const int want = plan.target[static_cast<std::size_t>(v)];
    Color col = 1;
    while (residue(c.sum(v) + col) != want) ++col;
    c.set(pe, col);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0 && residue(c.sum(v)) != plan.target[static_cast<std::size_t>(v)]) {
      throw InternalError("z3_nsd_coloring: root residue mismatch at vertex " + std::to_string(v));
    }
  }
  if (!residues_separated(g, bp, c.sums()) || !is_nsd(g, c)) {
    throw InternalError("z3_nsd_coloring: residue check failed");
  }
  return c;
}

/// Quasi-majority NSD coloring with at most six colors: each class of the
/// mod-3 coloring is split by a quasi-majority 2-coloring, and the second half
/// of class i moves to color i+3 (same residue).
inline EdgeColoring qmnsd_six(const Graph& g) {
  const auto z3 = z3_nsd_coloring(g);
  EdgeColoring c(g, 6);
  for (Color i = 1; i <= 3; ++i) {
    std::vector<EdgeId> keep;
    for (EdgeId e = 0; e < g.size(); ++e) {
      if (z3[e] == i) keep.push_back(e);
    }
    const auto sub = edge_subgraph(g, keep);
    auto split = qm_two_coloring(sub.graph);
    if (!split) throw InternalError("qmnsd_six: color class without a quasi-majority 2-coloring");
    for (EdgeId le = 0; le < sub.graph.size(); ++le) {
      c.set(sub.parent_edge[static_cast<std::size_t>(le)], (*split)[le] == 1 ? i : i + 3);
    }
  }
  ensure_verified(c, Mode::QuasiMajority, "qmnsd_six");
  return c;
}

}  // namespace nsd
