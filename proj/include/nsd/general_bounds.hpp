#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "nsd/coloring.hpp"
#include "nsd/errors.hpp"
#include "nsd/families.hpp"
#include "nsd/graph.hpp"
#include "nsd/qm_base.hpp"
#include "nsd/verify.hpp"

namespace nsd {

// ---------------------------------------------------------------- window algorithms

struct KalkowskiParams {
  Mode mode = Mode::QuasiMajority;
  Color base_low = 5;     // base colors are base_low .. base_low + base_colors - 1
  Color forward_low = 5;  // forward recolors land in forward_low .. forward_low + offset - 1
  int offset = 4;         // toggle step; windows live mod 2 * offset
  int bound = 12;         // final palette

  static KalkowskiParams quasi_majority() { return {Mode::QuasiMajority, 5, 5, 4, 12}; }
  static KalkowskiParams majority() { return {Mode::Majority, 7, 7, 6, 18}; }
};

inline constexpr Sum kNoWindow = std::numeric_limits<Sum>::min();

struct KalkowskiRun {
  EdgeColoring coloring;
  EdgeColoring base;                 // base coloring shifted into the working palette
  std::vector<Vertex> order;         // processing order, the last vertex of each component is its final vertex
  std::vector<Sum> window;           // w(v), or kNoWindow for final and isolated vertices
  std::vector<EdgeId> forward_edge;  // edge recolored at v's step, -1 if none
  int checked_mutations = 0;         // mutations checked in paranoid mode
};

namespace detail {

inline Sum floor_mod(Sum a, Sum m) { return ((a % m) + m) % m; }

/// Lower end of the window {w, w + offset} containing s.
inline Sum window_of(Sum s, int offset) { return floor_mod(s, 2 * offset) < offset ? s : s - offset; }

/// Mode predicate on color classes mod offset. It implies the predicate on
/// the actual colors and is invariant under +-offset toggles.
class ClassCounts {
 public:
  ClassCounts(const Graph& g, Mode mode, int offset)
      : g_(&g), mode_(mode), offset_(offset), counts_(static_cast<std::size_t>(g.order() * offset), 0) {}

  int& at(Vertex v, Color c) {
    return counts_[static_cast<std::size_t>(v * offset_ + static_cast<int>(floor_mod(c, offset_)))];
  }
  void add(Vertex v, Color c, int delta) { at(v, c) += delta; }
  bool fits(Vertex v, Color c) { return at(v, c) <= color_cap(mode_, g_->degree(v)); }

  /// True if recoloring e from `from` to `to` keeps both endpoints within cap.
  bool can_move(EdgeId e, Color from, Color to) {
    if (floor_mod(from, offset_) == floor_mod(to, offset_)) return true;
    const auto [u, v] = g_->edge(e);
    return at(u, to) + 1 <= color_cap(mode_, g_->degree(u)) && at(v, to) + 1 <= color_cap(mode_, g_->degree(v));
  }
  void move(EdgeId e, Color from, Color to) {
    const auto [u, v] = g_->edge(e);
    add(u, from, -1);
    add(v, from, -1);
    add(u, to, 1);
    add(v, to, 1);
  }

 private:
  const Graph* g_;
  Mode mode_;
  int offset_;
  std::vector<int> counts_;
};

inline std::vector<Vertex> reverse_bfs_order(const Graph& g, const std::vector<Vertex>& comp) {
  Vertex top = comp.front();
  for (Vertex v : comp) {
    if (g.degree(v) > g.degree(top)) top = v;
  }
  std::vector<Vertex> order{top};
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  seen[static_cast<std::size_t>(top)] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : g.neighbors(order[i])) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        order.push_back(w);
      }
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace detail

/// Runs the window algorithm on every component, starting from `base`
/// (colors 1..b, shifted up to start at params.base_low).
inline KalkowskiRun kalkowski_run(const Graph& g, const EdgeColoring& base, const KalkowskiParams& p,
                                  bool paranoid = false) {
  const int o = p.offset;
  KalkowskiRun run;
  run.coloring = EdgeColoring(g, p.bound);
  for (EdgeId e = 0; e < g.size(); ++e) run.coloring.set(e, base[e] + p.base_low - 1);
  run.base = run.coloring;
  run.window.assign(static_cast<std::size_t>(g.order()), kNoWindow);
  run.forward_edge.assign(static_cast<std::size_t>(g.order()), -1);
  EdgeColoring& c = run.coloring;
  detail::ClassCounts counts(g, p.mode, o);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.edge(e);
    counts.add(u, c[e], 1);
    counts.add(v, c[e], 1);
  }
  auto check = [&]() {
    if (!paranoid) return;
    ++run.checked_mutations;
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Color x = 1; x <= c.k(); ++x) {
        if (c.count(v, x) > color_cap(p.mode, g.degree(v))) throw InternalError("kalkowski: mode predicate broken");
      }
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Color x = 0; x < o; ++x) {
      if (!counts.fits(v, x)) throw InputError("kalkowski: base coloring violates the mode predicate");
    }
  }
  check();

  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (const auto& comp : components(g)) {
    if (comp.size() == 1) continue;
    const auto order = detail::reverse_bfs_order(g, comp);
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    run.order.insert(run.order.end(), order.begin(), order.end());

    // Direction in which the back edge e may be toggled given the earlier endpoint u.
    auto toggle_dir = [&](Vertex u) {
      return c.sum(u) == run.window[static_cast<std::size_t>(u)] ? 1 : -1;
    };

    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      const Vertex vk = order[k];
      std::vector<EdgeId> plus;
      std::vector<EdgeId> minus;
      std::vector<Sum> forbidden;
      EdgeId fwd = -1;
      int fwd_pos = std::numeric_limits<int>::max();
      const auto nb = g.neighbors(vk);
      const auto inc = g.incident(vk);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        const Vertex u = nb[i];
        const int pu = pos[static_cast<std::size_t>(u)];
        if (pu < static_cast<int>(k)) {
          (toggle_dir(u) > 0 ? plus : minus).push_back(inc[i]);
          const Sum w = run.window[static_cast<std::size_t>(u)];
          forbidden.push_back(w);
          forbidden.push_back(w + o);
        } else if (pu < fwd_pos) {
          fwd_pos = pu;
          fwd = inc[i];
        }
      }
      if (fwd < 0) throw InternalError("kalkowski: vertex without a later neighbor");
      const Color current = c[fwd];
      std::vector<Color> fwd_options{current};
      for (Color x = p.forward_low; x < p.forward_low + o; ++x) {
        if (x != current && counts.can_move(fwd, current, x)) fwd_options.push_back(x);
      }
      const Sum s0 = c.sum(vk);
      const int np = static_cast<int>(plus.size());
      const int nm = static_cast<int>(minus.size());
      std::optional<std::pair<Color, int>> pick;  // forward color, net toggle count
      for (Color x : fwd_options) {
        for (int t = 0; t <= std::max(np, nm) && !pick; ++t) {
          for (int sgn : {1, -1}) {
            const int net = sgn * t;
            if (net > np || -net > nm || (t == 0 && sgn < 0)) continue;
            const Sum s = s0 + (x - current) + static_cast<Sum>(o) * net;
            if (std::find(forbidden.begin(), forbidden.end(), s) == forbidden.end()) {
              pick = std::pair{x, net};
              break;
            }
          }
        }
        if (pick) break;
      }
      if (!pick) throw InternalError("kalkowski: no admissible sum at vertex " + std::to_string(vk));
      if (pick->first != current) {
        counts.move(fwd, current, pick->first);
        c.set(fwd, pick->first);
        run.forward_edge[static_cast<std::size_t>(vk)] = fwd;
        check();
      }
      const int net = pick->second;
      const auto& flip = net >= 0 ? plus : minus;
      for (int i = 0; i < std::abs(net); ++i) {
        const EdgeId e = flip[static_cast<std::size_t>(i)];
        c.set(e, c[e] + (net > 0 ? o : -o));
        check();
      }
      run.window[static_cast<std::size_t>(vk)] = detail::window_of(c.sum(vk), o);
    }

    // Final vertex: push every neighbor to the low end of its window, then
    // raise one or two edges as needed.
    const Vertex vn = order.back();
    const auto inc = g.incident(vn);
    const auto nb = g.neighbors(vn);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex u = nb[i];
      if (c.sum(u) != run.window[static_cast<std::size_t>(u)]) {
        c.set(inc[i], c[inc[i]] - o);
        check();
      }
    }
    const Sum s = c.sum(vn);
    std::vector<std::size_t> raise;
    if (detail::floor_mod(s, 2 * o) >= o) {
      // s is in a high half; every neighbor sits at a low end.
    } else {
      std::optional<std::size_t> other;
      for (std::size_t i = 0; i < nb.size() && !other; ++i)
        if (c.sum(nb[i]) != s) other = i;
      if (other) {
        raise.push_back(*other);
      } else {
        raise = {0, 1};
      }
    }
    for (std::size_t i : raise) {
      c.set(inc[i], c[inc[i]] + o);
      check();
    }
    for (Vertex u : nb) {
      if (c.sum(u) == c.sum(vn)) throw InternalError("kalkowski: final vertex collides with a neighbor");
    }
  }
  return run;
}

/// Quasi-majority NSD coloring with at most 12 colors.
inline EdgeColoring kalkowski_qmnsd12(const Graph& g) {
  if (!is_nice(g)) throw InputError("kalkowski_qmnsd12: graph has a K2 component");
  auto run = kalkowski_run(g, qm_three_coloring(g), KalkowskiParams::quasi_majority());
  ensure_verified(run.coloring, Mode::QuasiMajority, "kalkowski_qmnsd12");
  return run.coloring;
}

/// Majority NSD coloring with at most 18 colors for graphs without degree-1
/// vertices. For all-even degrees the 12-color quasi-majority run is also
/// majority; the smaller palette wins.
inline EdgeColoring kalkowski_mnsd18(const Graph& g) {
  require_min_degree_two(g, "kalkowski_mnsd18");
  if (!is_nice(g)) throw InputError("kalkowski_mnsd18: graph has a K2 component");
  auto run = kalkowski_run(g, majority_four_coloring(g), KalkowskiParams::majority());
  EdgeColoring best = run.coloring;
  if (all_degrees_even(g)) {
    auto qm = kalkowski_qmnsd12(g);
    if (qm.max_color() <= best.max_color()) best = qm.with_palette(18);
  }
  ensure_verified(best, Mode::Majority, "kalkowski_mnsd18");
  return best;
}

// ---------------------------------------------------------------- degree bound

inline int delta_palette(int max_degree) { return (3 * max_degree + 4 + 1) / 2; }

struct DeltaBoundStats {
  int steps = 0;
  int complete_bases = 0;
  int min_list = std::numeric_limits<int>::max();
  int full_scans = 0;  // pair choices that needed more than the designated pairs
};

namespace detail {

struct PathTriple {
  Vertex x;
  Vertex y;
  Vertex z;
};

inline std::optional<PathTriple> find_open_triple(const Graph& g) {
  for (Vertex y = 0; y < g.order(); ++y) {
    const auto nb = g.neighbors(y);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.adjacent(nb[i], nb[j])) return PathTriple{nb[i], y, nb[j]};
  }
  return std::nullopt;
}

/// Colors for the new edge at `end` (other endpoint y, sibling endpoint `far`)
/// that keep `end` quasi-majority, separate `end` from its old neighbors, and
/// keep y and `far` apart.
inline std::vector<Color> delta_free_list(const EdgeColoring& c, const Graph& g, Vertex end, Vertex y, Vertex far, int k) {
  std::vector<Color> out;
  const int cap = color_cap(Mode::QuasiMajority, g.degree(end));
  for (Color a = 1; a <= k; ++a) {
    if (c.count(end, a) + 1 > cap) continue;
    bool ok = c.sum(y) + a != c.sum(far);
    for (Vertex u : g.neighbors(end)) {
      if (u != y && c.sum(end) + a == c.sum(u)) ok = false;
    }
    if (ok) out.push_back(a);
  }
  return out;
}

inline EdgeColoring delta_rec(const Graph& g, int k, DeltaBoundStats& stats) {
  auto triple = find_open_triple(g);
  if (!triple) {
    EdgeColoring c(g, k);
    for (const auto& comp : components(g)) {
      if (comp.size() < 2) continue;
      if (comp.size() == 2) {
        c.set(g.incident(comp.front())[0], 1);
        continue;
      }
      const auto sub = induced_subgraph(g, comp);
      const auto kc = color_complete(static_cast<int>(comp.size()));
      // Both sides are K_n with edges in the same sorted order.
      for (EdgeId e = 0; e < sub.graph.size(); ++e) c.set(sub.parent_edge[static_cast<std::size_t>(e)], kc.coloring[e]);
      ++stats.complete_bases;
    }
    return c;
  }
  const auto [x, y, z] = *triple;
  const EdgeId exy = *g.edge_id(x, y);
  const EdgeId eyz = *g.edge_id(y, z);
  const std::array<EdgeId, 2> drop{exy, eyz};
  const auto sub = remove_edges(g, drop);
  const auto inner = delta_rec(sub.graph, k, stats);
  EdgeColoring c(g, k);
  for (EdgeId e = 0; e < sub.graph.size(); ++e) c.set(sub.parent_edge[static_cast<std::size_t>(e)], inner[e]);
  ++stats.steps;

  const auto a_list = delta_free_list(c, g, x, y, z, k);
  const auto b_list = delta_free_list(c, g, z, y, x, k);
  stats.min_list = std::min({stats.min_list, static_cast<int>(a_list.size()), static_cast<int>(b_list.size())});
  auto good = [&](Color a, Color b) {
    if (a == b) return false;
    const Sum sy = c.sum(y) + a + b;
    for (Vertex u : g.neighbors(y)) {
      if (u != x && u != z && c.sum(u) == sy) return false;
    }
    return true;
  };
  std::optional<std::pair<Color, Color>> pick;
  if (!a_list.empty() && !b_list.empty()) {
    const Color a0 = a_list.front();
    const Color b0 = b_list.back();
    for (Color b : b_list) {
      if (b != a0 && good(a0, b)) {
        pick = std::pair{a0, b};
        break;
      }
    }
    for (std::size_t i = 0; i < a_list.size() && !pick; ++i) {
      const Color a = a_list[i];
      if (a != a0 && a != b0 && good(a, b0)) pick = std::pair{a, b0};
    }
  }
  if (!pick) {
    ++stats.full_scans;
    for (Color a : a_list) {
      for (Color b : b_list) {
        if (!pick && good(a, b)) pick = std::pair{a, b};
      }
    }
  }
  if (!pick) throw InternalError("qmnsd_delta_bound: no admissible pair");
  c.set(exy, pick->first);
  c.set(eyz, pick->second);
  return c;
}

}  // namespace detail

/// Quasi-majority NSD coloring with at most ceil((3 Delta + 4) / 2) colors.
inline EdgeColoring qmnsd_delta_bound(const Graph& g, DeltaBoundStats* stats = nullptr) {
  if (!is_nice(g)) throw InputError("qmnsd_delta_bound: graph has a K2 component");
  DeltaBoundStats local;
  auto c = detail::delta_rec(g, delta_palette(g.max_degree()), stats ? *stats : local);
  ensure_verified(c, Mode::QuasiMajority, "qmnsd_delta_bound");
  return c;
}

}  // namespace nsd
