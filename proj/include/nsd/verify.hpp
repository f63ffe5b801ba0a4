#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nsd/coloring.hpp"
#include "nsd/errors.hpp"
#include "nsd/graph.hpp"

namespace nsd {

namespace detail {

inline void require_total(const Graph& g, const EdgeColoring& c) {
  if (!(c.graph() == g)) throw InputError("coloring belongs to a different graph");
  if (!c.is_total()) throw InputError("coloring is partial");
}

/// Recounts color multiplicities at v from scratch.
inline std::vector<int> recount(const EdgeColoring& c, Vertex v) {
  std::vector<int> counts(static_cast<std::size_t>(c.max_color() + 1), 0);
  for (EdgeId e : c.graph().incident(v)) ++counts[static_cast<std::size_t>(c[e])];
  return counts;
}

inline bool within_cap(const Graph& g, const EdgeColoring& c, Mode mode) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const int cap = color_cap(mode, g.degree(v));
    for (int x : recount(c, v)) {
      if (x > cap) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Vertex sums recomputed from the colors (isolated vertices get 0).
inline std::vector<Sum> vertex_sums(const Graph& g, const EdgeColoring& c) {
  detail::require_total(g, c);
  std::vector<Sum> out(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    out[static_cast<std::size_t>(g.edge(e).u)] += c[e];
    out[static_cast<std::size_t>(g.edge(e).v)] += c[e];
  }
  return out;
}

inline bool is_quasi_majority(const Graph& g, const EdgeColoring& c) {
  detail::require_total(g, c);
  return detail::within_cap(g, c, Mode::QuasiMajority);
}

inline bool is_majority(const Graph& g, const EdgeColoring& c) {
  detail::require_total(g, c);
  return detail::within_cap(g, c, Mode::Majority);
}

inline bool is_nsd(const Graph& g, const EdgeColoring& c) {
  const auto sums = vertex_sums(g, c);
  for (const auto& [u, v] : g.edges()) {
    if (sums[static_cast<std::size_t>(u)] == sums[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

inline bool satisfies_mode(const Graph& g, const EdgeColoring& c, Mode mode) {
  return mode == Mode::QuasiMajority ? is_quasi_majority(g, c) : is_majority(g, c);
}

struct Witness {
  enum class Kind { NotNice, QuasiMajority, Majority, Nsd, Palette, Uncolored };
  Kind kind = Kind::Nsd;
  Vertex vertex = -1;  // offending vertex (color-count and nice witnesses)
  Color color = 0;     // offending color
  int count = 0;       // multiplicity of `color` at `vertex`
  EdgeId edge = -1;    // offending edge (NSD, palette, uncolored witnesses)
};

inline std::string_view witness_kind_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::NotNice: return "not_nice";
    case Witness::Kind::QuasiMajority: return "quasi_majority";
    case Witness::Kind::Majority: return "majority";
    case Witness::Kind::Nsd: return "nsd";
    case Witness::Kind::Palette: return "palette";
    case Witness::Kind::Uncolored: return "uncolored";
  }
  return "?";
}

struct VerificationReport {
  Mode mode = Mode::QuasiMajority;
  int k = 0;
  bool total = true;
  bool nice = true;
  bool quasi_majority = true;
  bool majority = true;
  bool nsd = true;
  bool within_palette = true;
  std::vector<Witness> witnesses;
  std::vector<Sum> sums;

  bool mode_ok() const { return mode == Mode::QuasiMajority ? quasi_majority : majority; }
  bool passed() const { return total && nice && mode_ok() && nsd && within_palette; }
};

/// Checks every predicate independently of the incremental tables kept by
/// EdgeColoring. Never throws on a bad coloring; failures are reported.
inline VerificationReport verify(const Graph& g, const EdgeColoring& c, Mode mode, int k) {
  if (!(c.graph() == g)) throw InputError("coloring belongs to a different graph");
  VerificationReport r;
  r.mode = mode;
  r.k = k;
  for (const auto& comp : components(g)) {
    if (comp.size() == 2) {
      r.nice = false;
      r.witnesses.push_back({Witness::Kind::NotNice, comp[0], 0, 0, *g.edge_id(comp[0], comp[1])});
    }
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (c[e] == 0) {
      r.total = false;
      r.witnesses.push_back({Witness::Kind::Uncolored, -1, 0, 0, e});
    } else if (c[e] > k) {
      r.within_palette = false;
      r.witnesses.push_back({Witness::Kind::Palette, -1, c[e], 0, e});
    }
  }
  if (!r.total) {
    r.quasi_majority = r.majority = r.nsd = false;
    return r;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    const auto counts = detail::recount(c, v);
    for (Color col = 1; col < static_cast<Color>(counts.size()); ++col) {
      const int x = counts[static_cast<std::size_t>(col)];
      if (x > color_cap(Mode::QuasiMajority, d)) {
        r.quasi_majority = false;
        r.witnesses.push_back({Witness::Kind::QuasiMajority, v, col, x, -1});
      }
      if (x > color_cap(Mode::Majority, d)) {
        r.majority = false;
        r.witnesses.push_back({Witness::Kind::Majority, v, col, x, -1});
      }
    }
  }
  r.sums = vertex_sums(g, c);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.edge(e);
    if (r.sums[static_cast<std::size_t>(u)] == r.sums[static_cast<std::size_t>(v)]) {
      r.nsd = false;
      r.witnesses.push_back({Witness::Kind::Nsd, u, 0, 0, e});
    }
  }
  return r;
}

inline VerificationReport verify(const EdgeColoring& c, Mode mode, int k) { return verify(c.graph(), c, mode, k); }

inline VerificationReport verify(const EdgeColoring& c, Mode mode) { return verify(c.graph(), c, mode, c.k()); }

/// Throws InternalError unless c passes verify in `mode` with palette c.k().
inline const EdgeColoring& ensure_verified(const EdgeColoring& c, Mode mode, std::string_view who) {
  const auto report = verify(c, mode);
  if (!report.passed()) {
    std::string what(who);
    what += ": produced coloring failed verification";
    if (!report.witnesses.empty()) {
      const auto& w = report.witnesses.front();
      what += " (";
      what += witness_kind_name(w.kind);
      what += " at vertex " + std::to_string(w.vertex) + ", edge " + std::to_string(w.edge) + ")";
    }
    throw InternalError(what);
  }
  return c;
}

}  // namespace nsd
