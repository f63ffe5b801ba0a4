#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsd/bipartite.hpp"
#include "nsd/bounded_degree.hpp"
#include "nsd/coloring.hpp"
#include "nsd/errors.hpp"
#include "nsd/exact_solver.hpp"
#include "nsd/families.hpp"
#include "nsd/general_bounds.hpp"
#include "nsd/majority.hpp"
#include "nsd/qm_base.hpp"
#include "nsd/verify.hpp"

namespace nsd {

enum class Strategy { Auto, Family, Bipartite6, MaxDeg4, Kalkowski, DeltaBound, Exact };

inline std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Family: return "family";
    case Strategy::Bipartite6: return "bipartite6";
    case Strategy::MaxDeg4: return "maxdeg4";
    case Strategy::Kalkowski: return "kalkowski";
    case Strategy::DeltaBound: return "delta-bound";
    case Strategy::Exact: return "exact";
  }
  return "?";
}

inline std::optional<Strategy> strategy_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Strategy::Exact); ++i) {
    const auto s = static_cast<Strategy>(i);
    if (strategy_name(s) == name) return s;
  }
  return std::nullopt;
}

/// A connected graph identified as one of the closed families. `labels[i]` is
/// the input vertex playing the role of vertex i of the canonical graph.
struct FamilyMatch {
  Family family = Family::Path;
  int n = 0;
  int m = 0;
  std::vector<Vertex> labels;
};

namespace detail {

/// Walk from `start` along a graph of maximum degree 2.
inline std::vector<Vertex> walk(const Graph& g, Vertex start) {
  std::vector<Vertex> out{start};
  Vertex prev = -1;
  Vertex cur = start;
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur))
      if (w != prev && w != start) next = w;
    if (next < 0) return out;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
}

}  // namespace detail

inline std::optional<FamilyMatch> recognize_family(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return std::nullopt;
  const long long m = g.size();
  std::vector<Vertex> identity(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) identity[static_cast<std::size_t>(v)] = v;
  if (m == static_cast<long long>(n) * (n - 1) / 2) return FamilyMatch{Family::Complete, n, 0, identity};
  if (g.max_degree() <= 2) {
    if (m == n) return FamilyMatch{Family::Cycle, n, 0, detail::walk(g, 0)};
    Vertex end = 0;
    while (g.degree(end) != 1) ++end;
    return FamilyMatch{Family::Path, n, 0, detail::walk(g, end)};
  }
  if (auto bp = bipartition(g)) {
    const long long a = static_cast<long long>(bp->first.size());
    if (m == a * (n - a)) {
      auto labels = bp->first;
      labels.insert(labels.end(), bp->second.begin(), bp->second.end());
      return FamilyMatch{Family::CompleteBipartite, static_cast<int>(a), n - static_cast<int>(a), labels};
    }
  }
  if (is_tree(g)) return FamilyMatch{Family::RandomTree, n, 0, identity};
  return std::nullopt;
}

/// Copies a coloring of the canonical family graph onto g through match.labels.
inline EdgeColoring transfer(const Graph& g, const FamilyMatch& match, const EdgeColoring& canon) {
  EdgeColoring out(g, canon.k());
  const Graph& h = canon.graph();
  for (EdgeId e = 0; e < h.size(); ++e) {
    const auto [u, v] = h.edge(e);
    out.set(*g.edge_id(match.labels[static_cast<std::size_t>(u)], match.labels[static_cast<std::size_t>(v)]), canon[e]);
  }
  return out;
}

/// Family construction for g, or nullopt if g is not a recognized family
/// (majority mode covers complete and complete bipartite graphs only).
inline std::optional<FamilyColoring> color_family(const Graph& g, Mode mode) {
  auto match = recognize_family(g);
  if (!match) return std::nullopt;
  std::optional<FamilyColoring> canon;
  if (mode == Mode::QuasiMajority) {
    switch (match->family) {
      case Family::Path: canon = color_path(match->n); break;
      case Family::Cycle: canon = color_cycle(match->n); break;
      case Family::Complete: canon = color_complete(match->n); break;
      case Family::CompleteBipartite: canon = color_complete_bipartite(match->n, match->m); break;
      case Family::RandomTree: return color_tree(g);
      default: return std::nullopt;
    }
  } else {
    switch (match->family) {
      case Family::Complete: canon = mnsd_complete(match->n); break;
      case Family::CompleteBipartite:
        if (match->n < 2 || match->m < 2) return std::nullopt;
        canon = mnsd_complete_bipartite(match->n, match->m);
        break;
      default: return std::nullopt;
    }
  }
  return FamilyColoring{canon->k, transfer(g, *match, canon->coloring)};
}

struct ColorRequest {
  Mode mode = Mode::QuasiMajority;
  Strategy strategy = Strategy::Auto;
  SearchBudget budget{};
};

struct ColorOutcome {
  Strategy used = Strategy::Auto;
  int k = 0;  // certified palette size
  EdgeColoring coloring;
  VerificationReport report;
};

namespace detail {

inline void require_qm_strategy(const ColorRequest& req) {
  if (req.mode != Mode::QuasiMajority)
    throw InputError("strategy " + std::string(strategy_name(req.strategy)) + " is quasi-majority only");
}

inline std::optional<ColorOutcome> run_strategy(const Graph& g, const ColorRequest& req, Strategy s) {
  ColorOutcome out;
  out.used = s;
  switch (s) {
    case Strategy::Family: {
      auto f = color_family(g, req.mode);
      if (!f) return std::nullopt;
      out.k = f->k;
      out.coloring = std::move(f->coloring);
      break;
    }
    case Strategy::Bipartite6:
      out.coloring = qmnsd_six(g);
      out.k = 6;
      break;
    case Strategy::MaxDeg4:
      out.coloring = qmnsd_maxdeg4(g);
      out.k = kMaxDeg4Palette;
      break;
    case Strategy::Kalkowski:
      if (req.mode == Mode::QuasiMajority) {
        out.coloring = kalkowski_qmnsd12(g);
        out.k = 12;
      } else {
        out.coloring = kalkowski_mnsd18(g);
        out.k = 18;
      }
      break;
    case Strategy::DeltaBound:
      out.coloring = qmnsd_delta_bound(g);
      out.k = delta_palette(g.max_degree());
      break;
    case Strategy::Exact: {
      auto r = min_index(g, req.mode, req.budget);
      if (r.status != SearchStatus::Found) return std::nullopt;
      out.k = r.k;
      out.coloring = std::move(*r.witness);
      break;
    }
    case Strategy::Auto: return std::nullopt;
  }
  return out;
}

}  // namespace detail

/// Colors g with the requested strategy. The result is always verified;
/// a failed verification is reported, never hidden. Strategies that do not
/// apply (family on an unrecognized graph, exact out of budget) throw
/// PreconditionError.
inline ColorOutcome color_graph(const Graph& g, const ColorRequest& req) {
  if (!is_nice(g)) throw InputError("graph has a K2 component; no NSD coloring exists");
  if (req.mode == Mode::Majority) require_min_degree_two(g, "majority coloring");
  std::optional<ColorOutcome> out;
  if (g.size() == 0) {
    out = ColorOutcome{req.strategy, 1, EdgeColoring(g, 1), {}};
  } else if (req.strategy != Strategy::Auto) {
    if (req.strategy == Strategy::Bipartite6 || req.strategy == Strategy::MaxDeg4 ||
        req.strategy == Strategy::DeltaBound) {
      detail::require_qm_strategy(req);
    }
    out = detail::run_strategy(g, req, req.strategy);
    if (!out) {
      throw PreconditionError("strategy " + std::string(strategy_name(req.strategy)) + " does not apply to this graph");
    }
  } else {
    out = detail::run_strategy(g, req, Strategy::Family);
    if (!out && req.mode == Mode::QuasiMajority) {
      if (bipartition(g)) {
        out = detail::run_strategy(g, req, Strategy::Bipartite6);
      } else if (g.max_degree() <= 4) {
        out = detail::run_strategy(g, req, Strategy::MaxDeg4);
      } else if (delta_palette(g.max_degree()) <= 12) {
        out = detail::run_strategy(g, req, Strategy::DeltaBound);
      } else {
        out = detail::run_strategy(g, req, Strategy::Kalkowski);
      }
    }
    if (!out) out = detail::run_strategy(g, req, Strategy::Kalkowski);
  }
  out->report = verify(out->coloring, req.mode, out->k);
  return *out;
}

}  // namespace nsd
