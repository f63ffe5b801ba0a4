#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsd/errors.hpp"
#include "nsd/graph.hpp"

namespace nsd {

/// Seeded PRNG with a fixed, platform-independent contract: the raw stream is
/// std::mt19937_64 (fully specified by the standard) and every derived draw
/// uses the rejection sampling below rather than <random> distributions,
/// whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform integer in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class Family {
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  Star,
  Petersen,
  RandomTree,
  RandomGnp,
  RandomBipartite,
  RandomRegular,
  RandomMaxDegree,
};

/// Parametric family description. Field use per family:
///   path/cycle/complete: n
///   complete_bipartite: n, m (sides 0..n-1 and n..n+m-1)
///   star: n leaves around center 0
///   random_tree: n, seed
///   random_gnp: n, p_num/p_den, seed
///   random_bipartite: n, m, p_num/p_den, seed
///   random_regular: n, degree, seed
///   random_max_degree: n, degree (cap), p_num/p_den, seed
struct FamilySpec {
  Family family = Family::Path;
  int n = 0;
  int m = 0;
  int degree = 0;
  std::uint64_t p_num = 1;
  std::uint64_t p_den = 2;
  std::uint64_t seed = 0;
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "complete_bipartite";
    case Family::Star: return "star";
    case Family::Petersen: return "petersen";
    case Family::RandomTree: return "random_tree";
    case Family::RandomGnp: return "random_gnp";
    case Family::RandomBipartite: return "random_bipartite";
    case Family::RandomRegular: return "random_regular";
    case Family::RandomMaxDegree: return "random_max_degree";
  }
  return "?";
}

inline std::optional<Family> family_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Family::RandomMaxDegree); ++i) {
    const auto f = static_cast<Family>(i);
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

inline Graph path_graph(int n) {
  if (n < 1) throw InputError("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
  if (n < 0) throw InputError("complete graph needs n >= 0");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline Graph complete_bipartite_graph(int n, int m) {
  if (n < 0 || m < 0) throw InputError("complete bipartite graph needs n, m >= 0");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) e.emplace_back(i, n + j);
  return Graph::from_edges(n + m, e);
}

inline Graph star_graph(int leaves) {
  if (leaves < 0) throw InputError("star needs a nonnegative leaf count");
  return complete_bipartite_graph(1, leaves);
}

inline Graph petersen_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

/// Uniform labelled tree via a random Prüfer sequence.
inline Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw InputError("random tree needs n >= 1");
  if (n == 1) return Graph::from_edges(1, std::vector<std::pair<int, int>>{});
  if (n == 2) return Graph::from_edges(2, {{0, 1}});
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (auto& x : seq) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int x : seq) ++deg[static_cast<std::size_t>(x)];
  std::vector<std::pair<int, int>> e;
  for (int x : seq) {
    int leaf = 0;
    while (deg[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    e.emplace_back(leaf, x);
    --deg[static_cast<std::size_t>(leaf)];
    --deg[static_cast<std::size_t>(x)];
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        e.emplace_back(a, v);
        break;
      }
    }
  }
  return Graph::from_edges(n, e);
}

inline Graph random_gnp(int n, std::uint64_t num, std::uint64_t den, Rng& rng) {
  if (n < 0 || den == 0 || num > den) throw InputError("random_gnp needs n >= 0 and 0 <= p <= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(num, den)) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline Graph random_bipartite(int n, int m, std::uint64_t num, std::uint64_t den, Rng& rng) {
  if (n < 0 || m < 0 || den == 0 || num > den) throw InputError("random_bipartite needs n, m >= 0 and 0 <= p <= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (rng.chance(num, den)) e.emplace_back(i, n + j);
  return Graph::from_edges(n + m, e);
}

/// Random d-regular graph by the pairing model, retried until simple.
inline Graph random_regular(int n, int d, Rng& rng) {
  if (n < 0 || d < 0 || d >= std::max(n, 1) || (static_cast<long long>(n) * d) % 2 != 0) {
    if (!(n == 0 && d == 0)) throw InputError("random_regular needs 0 <= d < n and n*d even");
  }
  std::vector<int> points;
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) points.push_back(v);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    rng.shuffle(points);
    std::vector<std::pair<int, int>> e;
    bool ok = true;
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i + 1 < points.size() && ok; i += 2) {
      const int a = points[i];
      const int b = points[i + 1];
      if (a == b || seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
        ok = false;
        break;
      }
      seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
      seen[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
      e.emplace_back(a, b);
    }
    if (ok) return Graph::from_edges(n, e);
  }
  throw InputError("random_regular: no simple pairing found");
}

/// Each vertex pair is a candidate with probability p; candidates are added in
/// random order whenever both endpoints are still below the degree cap.
inline Graph random_max_degree(int n, int cap, std::uint64_t num, std::uint64_t den, Rng& rng) {
  if (n < 0 || cap < 0 || den == 0 || num > den) throw InputError("random_max_degree needs n, cap >= 0 and 0 <= p <= 1");
  std::vector<std::pair<int, int>> candidates;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(num, den)) candidates.emplace_back(i, j);
  rng.shuffle(candidates);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : candidates) {
    if (deg[static_cast<std::size_t>(a)] < cap && deg[static_cast<std::size_t>(b)] < cap) {
      ++deg[static_cast<std::size_t>(a)];
      ++deg[static_cast<std::size_t>(b)];
      e.emplace_back(a, b);
    }
  }
  return Graph::from_edges(n, e);
}

inline Graph generate(const FamilySpec& spec) {
  Rng rng(spec.seed);
  switch (spec.family) {
    case Family::Path: return path_graph(spec.n);
    case Family::Cycle: return cycle_graph(spec.n);
    case Family::Complete: return complete_graph(spec.n);
    case Family::CompleteBipartite: return complete_bipartite_graph(spec.n, spec.m);
    case Family::Star: return star_graph(spec.n);
    case Family::Petersen: return petersen_graph();
    case Family::RandomTree: return random_tree(spec.n, rng);
    case Family::RandomGnp: return random_gnp(spec.n, spec.p_num, spec.p_den, rng);
    case Family::RandomBipartite: return random_bipartite(spec.n, spec.m, spec.p_num, spec.p_den, rng);
    case Family::RandomRegular: return random_regular(spec.n, spec.degree, rng);
    case Family::RandomMaxDegree: return random_max_degree(spec.n, spec.degree, spec.p_num, spec.p_den, rng);
  }
  throw InputError("unknown family");
}

/// Drops every K2 component (both endpoints become isolated).
inline Graph make_nice(const Graph& g) {
  std::vector<EdgeId> drop;
  for (const auto& comp : components(g)) {
    if (comp.size() == 2) drop.push_back(*g.edge_id(comp[0], comp[1]));
  }
  return remove_edges(g, drop).graph;
}

/// Repeatedly drops edges at vertices of degree one until none remain.
inline Graph strip_pendant_edges(const Graph& g) {
  Graph cur = g;
  while (true) {
    std::vector<EdgeId> drop;
    for (Vertex v = 0; v < cur.order(); ++v) {
      if (cur.degree(v) == 1) drop.push_back(cur.incident(v)[0]);
    }
    if (drop.empty()) return cur;
    cur = remove_edges(cur, drop).graph;
  }
}

}  // namespace nsd
