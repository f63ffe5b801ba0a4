#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsd/coloring.hpp"
#include "nsd/errors.hpp"
#include "nsd/graph.hpp"
#include "nsd/verify.hpp"

namespace nsd {

struct SearchBudget {
  int max_k = 20;
  std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
  double time_limit = std::numeric_limits<double>::infinity();  // seconds
  int threads = 1;
};

enum class SearchStatus { Found, Infeasible, Unknown };

inline std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Infeasible: return "infeasible";
    case SearchStatus::Unknown: return "unknown";
  }
  return "?";
}

/// Extra requirement on the final sum at v: never in `forbidden`, and inside
/// `allowed` when that list is present.
struct SumConstraint {
  Vertex v = 0;
  std::vector<Sum> forbidden;
  std::optional<std::vector<Sum>> allowed;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<EdgeColoring> coloring;
  std::uint64_t nodes = 0;
  double seconds = 0;

  bool found() const { return status == SearchStatus::Found; }
};

namespace detail {

class Search {
 public:
  using Clock = std::chrono::steady_clock;

  Search(const Graph& g, Mode mode, int k, const std::vector<Color>& fixed, const std::vector<SumConstraint>& cons,
         std::atomic<std::uint64_t>& nodes, std::uint64_t node_limit, Clock::time_point deadline)
      : g_(g), k_(k), nodes_(nodes), node_limit_(node_limit), deadline_(deadline) {
    const int n = g.order();
    caps_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) caps_[static_cast<std::size_t>(v)] = color_cap(mode, g.degree(v));
    colors_ = fixed;
    counts_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(k + 1), 0);
    sums_.assign(static_cast<std::size_t>(n), 0);
    rem_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) rem_[static_cast<std::size_t>(v)] = g.degree(v);
    forbidden_.resize(static_cast<std::size_t>(n));
    allowed_.resize(static_cast<std::size_t>(n));
    for (const auto& c : cons) {
      auto& f = forbidden_[static_cast<std::size_t>(c.v)];
      f.insert(f.end(), c.forbidden.begin(), c.forbidden.end());
      if (c.allowed) {
        auto& a = allowed_[static_cast<std::size_t>(c.v)];
        if (!a) {
          a = *c.allowed;
        } else {
          std::vector<Sum> keep;
          for (Sum s : *a)
            if (std::find(c.allowed->begin(), c.allowed->end(), s) != c.allowed->end()) keep.push_back(s);
          a = std::move(keep);
        }
      }
    }
    for (EdgeId e = 0; e < g.size(); ++e) {
      if (colors_[static_cast<std::size_t>(e)] == 0) order_.push_back(e);
    }
    limit_.assign(static_cast<std::size_t>(g.size()), k);
  }

  /// Restricts the color range of edge e (symmetry breaking).
  void restrict(EdgeId e, int max_color) { limit_[static_cast<std::size_t>(e)] = max_color; }

  /// Applies the fixed colors; false if they already violate a constraint.
  bool init() {
    for (EdgeId e = 0; e < g_.size(); ++e) {
      const Color c = colors_[static_cast<std::size_t>(e)];
      if (c == 0) continue;
      if (c < 1 || c > k_) return false;
      const auto [u, v] = g_.edge(e);
      if (count(u, c) >= caps_[static_cast<std::size_t>(u)] || count(v, c) >= caps_[static_cast<std::size_t>(v)]) {
        return false;
      }
      apply(e, c);
    }
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (rem_[static_cast<std::size_t>(v)] == 0 && !vertex_ok(v)) return false;
      if (!sum_range_ok(v)) return false;
    }
    return true;
  }

  /// Runs the search; the first solution is lexicographically smallest in
  /// edge order.
  bool run() { return dfs(0); }

  bool aborted() const { return aborted_; }
  const std::vector<Color>& colors() const { return colors_; }
  const std::vector<EdgeId>& order() const { return order_; }

 private:
  int& count(Vertex v, Color c) {
    return counts_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(c)];
  }

  void apply(EdgeId e, Color c) {
    const auto [u, v] = g_.edge(e);
    colors_[static_cast<std::size_t>(e)] = c;
    ++count(u, c);
    ++count(v, c);
    sums_[static_cast<std::size_t>(u)] += c;
    sums_[static_cast<std::size_t>(v)] += c;
    --rem_[static_cast<std::size_t>(u)];
    --rem_[static_cast<std::size_t>(v)];
  }

  void undo(EdgeId e, Color c) {
    const auto [u, v] = g_.edge(e);
    colors_[static_cast<std::size_t>(e)] = 0;
    --count(u, c);
    --count(v, c);
    sums_[static_cast<std::size_t>(u)] -= c;
    sums_[static_cast<std::size_t>(v)] -= c;
    ++rem_[static_cast<std::size_t>(u)];
    ++rem_[static_cast<std::size_t>(v)];
  }

  /// Checks a saturated vertex against saturated neighbors and its constraints.
  bool vertex_ok(Vertex v) const {
    const Sum s = sums_[static_cast<std::size_t>(v)];
    for (Vertex w : g_.neighbors(v)) {
      if (rem_[static_cast<std::size_t>(w)] == 0 && sums_[static_cast<std::size_t>(w)] == s) return false;
    }
    const auto& f = forbidden_[static_cast<std::size_t>(v)];
    if (std::find(f.begin(), f.end(), s) != f.end()) return false;
    const auto& a = allowed_[static_cast<std::size_t>(v)];
    if (a && std::find(a->begin(), a->end(), s) == a->end()) return false;
    return true;
  }

  /// For vertices with an allowed list, the reachable sum interval must meet it.
  bool sum_range_ok(Vertex v) const {
    const auto& a = allowed_[static_cast<std::size_t>(v)];
    if (!a) return true;
    const Sum r = rem_[static_cast<std::size_t>(v)];
    const Sum lo = sums_[static_cast<std::size_t>(v)] + r;
    const Sum hi = sums_[static_cast<std::size_t>(v)] + r * k_;
    for (Sum s : *a)
      if (s >= lo && s <= hi) return true;
    return false;
  }

  /// When a vertex has one uncolored edge left and that edge's far end is
  /// saturated, the last color is pinned by nothing but still must avoid
  /// making the sums equal; this catches it one level early.
  bool last_edge_ok(Vertex v) {
    if (rem_[static_cast<std::size_t>(v)] != 1) return true;
    // Find the pending edge at v.
    EdgeId pending = -1;
    for (EdgeId e : g_.incident(v)) {
      if (colors_[static_cast<std::size_t>(e)] == 0) {
        pending = e;
        break;
      }
    }
    const Vertex w = g_.other(pending, v);
    const int lim = limit_[static_cast<std::size_t>(pending)];
    for (Color c = 1; c <= lim; ++c) {
      if (count(v, c) >= caps_[static_cast<std::size_t>(v)] || count(w, c) >= caps_[static_cast<std::size_t>(w)]) continue;
      const Sum s = sums_[static_cast<std::size_t>(v)] + c;
      bool ok = true;
      for (Vertex x : g_.neighbors(v)) {
        if (x != w && rem_[static_cast<std::size_t>(x)] == 0 && sums_[static_cast<std::size_t>(x)] == s) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const auto& f = forbidden_[static_cast<std::size_t>(v)];
      if (std::find(f.begin(), f.end(), s) != f.end()) continue;
      const auto& a = allowed_[static_cast<std::size_t>(v)];
      if (a && std::find(a->begin(), a->end(), s) == a->end()) continue;
      return true;
    }
    return false;
  }

  bool out_of_budget() {
    const auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > node_limit_) return true;
    if ((++local_ & 1023) == 0 && Clock::now() > deadline_) return true;
    return false;
  }

  bool dfs(std::size_t idx) {
    if (idx == order_.size()) return true;
    const EdgeId e = order_[idx];
    const auto [u, v] = g_.edge(e);
    const int lim = limit_[static_cast<std::size_t>(e)];
    for (Color c = 1; c <= lim; ++c) {
      if (count(u, c) >= caps_[static_cast<std::size_t>(u)] || count(v, c) >= caps_[static_cast<std::size_t>(v)]) continue;
      if (out_of_budget()) {
        aborted_ = true;
        return false;
      }
      apply(e, c);
      bool ok = true;
      for (Vertex x : {u, v}) {
        if (rem_[static_cast<std::size_t>(x)] == 0) {
          ok = ok && vertex_ok(x);
        } else {
          ok = ok && sum_range_ok(x) && last_edge_ok(x);
        }
        if (!ok) break;
      }
      if (ok && dfs(idx + 1)) return true;
      undo(e, c);
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> caps_;
  std::vector<Color> colors_;
  std::vector<int> counts_;
  std::vector<Sum> sums_;
  std::vector<int> rem_;
  std::vector<std::vector<Sum>> forbidden_;
  std::vector<std::optional<std::vector<Sum>>> allowed_;
  std::vector<EdgeId> order_;
  std::vector<int> limit_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t node_limit_;
  Clock::time_point deadline_;
  std::uint64_t local_ = 0;
  bool aborted_ = false;
};

inline void check_search_input(const Graph& g, Mode mode, int k) {
  if (k < 0) throw InputError("palette size must be nonnegative");
  if (!is_nice(g)) throw InputError("graph has a K2 component; no NSD coloring exists");
  if (mode == Mode::Majority) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 1) throw InputError("majority colorings need minimum degree 2 (vertex " + std::to_string(v) + ")");
    }
  }
}

}  // namespace detail

/// Searches for a coloring extending the nonzero entries of `fixed` (aligned
/// with g.edges()) that passes verify(g, c, mode, k) and meets `constraints`.
inline SearchResult search_coloring(const Graph& g, Mode mode, int k, const std::vector<Color>& fixed,
                                    const std::vector<SumConstraint>& constraints, const SearchBudget& budget = {}) {
  detail::check_search_input(g, mode, k);
  if (static_cast<int>(fixed.size()) != g.size()) throw InputError("fixed color list has the wrong length");
  const auto start = detail::Search::Clock::now();
  auto deadline = detail::Search::Clock::time_point::max();
  if (budget.time_limit < 1e9) {
    deadline = start + std::chrono::duration_cast<detail::Search::Clock::duration>(
                           std::chrono::duration<double>(budget.time_limit));
  }
  std::atomic<std::uint64_t> nodes{0};
  SearchResult result;
  auto finish = [&](SearchStatus s, const std::vector<Color>* colors) {
    result.status = s;
    if (colors) result.coloring = EdgeColoring(g, k, *colors);
    result.nodes = nodes.load();
    result.seconds = std::chrono::duration<double>(detail::Search::Clock::now() - start).count();
    return result;
  };

  // Regular components without fixed edges or constraints are closed under
  // c -> k + 1 - c, so their first edge may be limited to the lower half.
  std::vector<std::pair<EdgeId, int>> restrictions;
  {
    std::vector<char> pinned(static_cast<std::size_t>(g.order()), 0);
    for (const auto& c : constraints) pinned[static_cast<std::size_t>(c.v)] = 1;
    for (EdgeId e = 0; e < g.size(); ++e) {
      if (fixed[static_cast<std::size_t>(e)] != 0) {
        pinned[static_cast<std::size_t>(g.edge(e).u)] = 1;
        pinned[static_cast<std::size_t>(g.edge(e).v)] = 1;
      }
    }
    for (const auto& comp : components(g)) {
      if (comp.size() < 2) continue;
      const int d = g.degree(comp.front());
      bool ok = d > 0;
      for (Vertex v : comp) ok = ok && g.degree(v) == d && !pinned[static_cast<std::size_t>(v)];
      if (!ok) continue;
      restrictions.emplace_back(g.incident(comp.front())[0], (k + 1) / 2);
    }
  }

  auto make = [&](const std::vector<Color>& base) {
    detail::Search s(g, mode, k, base, constraints, nodes, budget.node_limit, deadline);
    for (auto [e, lim] : restrictions) s.restrict(e, lim);
    return s;
  };

  EdgeId first = -1;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (fixed[static_cast<std::size_t>(e)] == 0) {
      first = e;
      break;
    }
  }

  if (budget.threads <= 1 || first < 0) {
    auto s = make(fixed);
    if (!s.init()) return finish(SearchStatus::Infeasible, nullptr);
    if (s.run()) return finish(SearchStatus::Found, &s.colors());
    return finish(s.aborted() ? SearchStatus::Unknown : SearchStatus::Infeasible, nullptr);
  }

  // Parallel: one branch per color of the first free edge, merged in color order.
  int first_limit = k;
  for (auto [e, lim] : restrictions)
    if (e == first) first_limit = lim;
  struct Branch {
    bool found = false;
    bool aborted = false;
    std::vector<Color> colors;
  };
  std::vector<std::future<Branch>> futures;
  std::vector<Branch> done;
  auto run_branch = [&](Color c) {
    auto base = fixed;
    base[static_cast<std::size_t>(first)] = c;
    auto s = make(base);
    Branch b;
    if (!s.init()) return b;
    b.found = s.run();
    b.aborted = s.aborted();
    if (b.found) b.colors = s.colors();
    return b;
  };
  const int workers = budget.threads;
  for (Color c = 1; c <= first_limit; ++c) {
    futures.push_back(std::async(std::launch::async, run_branch, c));
    if (static_cast<int>(futures.size()) >= workers) {
      for (auto& f : futures) done.push_back(f.get());
      futures.clear();
    }
  }
  for (auto& f : futures) done.push_back(f.get());
  bool any_aborted = false;
  for (const auto& b : done) {
    if (b.found) return finish(SearchStatus::Found, &b.colors);
    any_aborted = any_aborted || b.aborted;
  }
  return finish(any_aborted ? SearchStatus::Unknown : SearchStatus::Infeasible, nullptr);
}

inline SearchResult find_coloring(const Graph& g, Mode mode, int k, const SearchBudget& budget = {}) {
  return search_coloring(g, mode, k, std::vector<Color>(static_cast<std::size_t>(g.size()), 0), {}, budget);
}

/// Extends the colored edges of `partial` (uncolored edges are free).
inline SearchResult complete_partial(const EdgeColoring& partial, Mode mode, int k,
                                     const std::vector<SumConstraint>& constraints = {},
                                     const SearchBudget& budget = {}) {
  return search_coloring(partial.graph(), mode, k, partial.colors(), constraints, budget);
}

struct IndexResult {
  SearchStatus status = SearchStatus::Unknown;  // Found: k is exact
  int k = -1;
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes = 0;
  double seconds = 0;
};

/// Smallest k with a coloring, trying k = 2, 3, ... up to budget.max_k.
/// An edgeless graph has index 1. Node and time limits apply per k.
inline IndexResult min_index(const Graph& g, Mode mode, const SearchBudget& budget = {}) {
  detail::check_search_input(g, mode, 1);
  IndexResult out;
  if (g.size() == 0) {
    out.status = SearchStatus::Found;
    out.k = 1;
    out.witness = EdgeColoring(g, 1);
    return out;
  }
  for (int k = 2; k <= budget.max_k; ++k) {
    auto r = find_coloring(g, mode, k, budget);
    out.nodes += r.nodes;
    out.seconds += r.seconds;
    if (r.status == SearchStatus::Found) {
      out.status = SearchStatus::Found;
      out.k = k;
      out.witness = std::move(r.coloring);
      return out;
    }
    if (r.status == SearchStatus::Unknown) {
      out.status = SearchStatus::Unknown;
      return out;
    }
  }
  out.status = SearchStatus::Unknown;
  return out;
}

}  // namespace nsd
