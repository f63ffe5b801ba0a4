#pragma once

#include <algorithm>
#include <vector>

#include "nsd/coloring.hpp"
#include "nsd/errors.hpp"
#include "nsd/families.hpp"
#include "nsd/fixtures.hpp"
#include "nsd/generators.hpp"
#include "nsd/graph.hpp"
#include "nsd/verify.hpp"

namespace nsd {

// ---------------------------------------------------------------- complete graphs

/// One level of the even-order recursion K_{2k-2} -> K_{2k}.
struct MnsdLevel {
  int n = 0;                   // order after this level
  int branch = 0;              // 1: slack in color 2 at v_{k-1}, 2: slack in color 3 at v_k
  bool sums_increasing = false;
  bool slack_holds = false;    // the new order meets the slack condition for the next level
};

struct MnsdCompleteResult {
  int k = 0;
  EdgeColoring coloring;
  std::vector<Vertex> order;  // vertices by increasing sum (even n >= 6 only)
  std::vector<MnsdLevel> levels;
};

namespace detail {

/// Colors of K_N kept as a dense matrix while vertices are appended.
class CompleteMatrix {
 public:
  explicit CompleteMatrix(int n) : n_(n), cap_(n), m_(static_cast<std::size_t>(n * n), 0) {}

  int order() const { return n_; }
  Color get(Vertex a, Vertex b) const { return m_[static_cast<std::size_t>(a * cap_ + b)]; }
  void set(Vertex a, Vertex b, Color c) {
    m_[static_cast<std::size_t>(a * cap_ + b)] = c;
    m_[static_cast<std::size_t>(b * cap_ + a)] = c;
  }
  void grow(int n) {
    std::vector<Color> next(static_cast<std::size_t>(n * n), 0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) next[static_cast<std::size_t>(a * n + b)] = get(a, b);
    m_ = std::move(next);
    n_ = cap_ = n;
  }
  Sum sum(Vertex v) const {
    Sum s = 0;
    for (Vertex u = 0; u < n_; ++u) s += get(v, u);
    return s;
  }
  int count(Vertex v, Color c) const {
    int r = 0;
    for (Vertex u = 0; u < n_; ++u) r += u != v && get(v, u) == c;
    return r;
  }
  EdgeColoring to_coloring(int k) const {
    EdgeColoring c(complete_graph(n_), k);
    for (EdgeId e = 0; e < c.graph().size(); ++e) c.set(e, get(c.graph().edge(e).u, c.graph().edge(e).v));
    return c;
  }

 private:
  int n_;
  int cap_;
  std::vector<Color> m_;
};

}  // namespace detail

/// Majority NSD coloring of K_n with the least number of colors.
inline MnsdCompleteResult mnsd_complete_detailed(int n) {
  if (n < 3) throw InputError("mnsd_complete needs n >= 3");
  MnsdCompleteResult out;
  if (n % 2 == 1) {
    auto f = color_complete(n);
    out.k = 3;
    out.coloring = f.coloring;
  } else if (n == 4) {
    out.k = 5;
    out.coloring = fixture_k4_mnsd5().coloring();
  } else {
    const auto base = fixture_k6_mnsd4().coloring();
    detail::CompleteMatrix mat(6);
    for (EdgeId e = 0; e < base.graph().size(); ++e) mat.set(base.graph().edge(e).u, base.graph().edge(e).v, base[e]);
    std::vector<Vertex> order{0, 1, 2, 3, 4, 5};
    for (int size = 8; size <= n; size += 2) {
      const int k = size / 2;
      // v_i is order[i - 1].
      auto v = [&](int i) { return order[static_cast<std::size_t>(i - 1)]; };
      MnsdLevel level;
      level.n = size;
      level.branch = mat.count(v(k - 1), 2) <= k - 3 ? 1 : (mat.count(v(k), 3) <= k - 3 ? 2 : 0);
      if (level.branch == 0) throw InternalError("mnsd_complete: slack condition lost");
      const Vertex x = size - 2;
      const Vertex y = size - 1;
      mat.grow(size);
      mat.set(x, y, level.branch == 1 ? 3 : 2);
      for (int i = 1; i <= k - 2; ++i) {
        mat.set(x, v(i), 1);
        mat.set(y, v(i), 3);
      }
      for (int i = k + 1; i <= 2 * k - 2; ++i) {
        mat.set(x, v(i), 2);
        mat.set(y, v(i), 4);
      }
      if (level.branch == 1) {
        mat.set(x, v(k - 1), 2);
        mat.set(y, v(k - 1), 2);
        mat.set(x, v(k), 1);
        mat.set(y, v(k), 4);
      } else {
        mat.set(x, v(k - 1), 1);
        mat.set(y, v(k - 1), 4);
        mat.set(x, v(k), 3);
        mat.set(y, v(k), 3);
      }
      order.insert(order.begin(), x);
      order.push_back(y);
      level.sums_increasing = true;
      for (std::size_t i = 1; i < order.size(); ++i) {
        if (mat.sum(order[i - 1]) >= mat.sum(order[i])) level.sums_increasing = false;
      }
      // Slack for the next level: v_k with at most k-2 twos or v_{k+1} with at most k-2 threes.
      level.slack_holds = mat.count(v(k), 2) <= k - 2 || mat.count(v(k + 1), 3) <= k - 2;
      out.levels.push_back(level);
    }
    out.k = 4;
    out.coloring = mat.to_coloring(4);
    out.order = order;
  }
  ensure_verified(out.coloring, Mode::Majority, "mnsd_complete");
  return out;
}

inline FamilyColoring mnsd_complete(int n) {
  auto r = mnsd_complete_detailed(n);
  return {r.k, std::move(r.coloring)};
}

// ---------------------------------------------------------------- complete bipartite graphs

/// Residue map used for colorings taken mod 3: 0 becomes 3.
inline Color residue_color(int x) {
  const int r = ((x % 3) + 3) % 3;
  return r == 0 ? 3 : r;
}

/// c(a_i b_j) = (i + j - 1) mod 3 on K_{n,m}.
inline EdgeColoring interval_mod3(int n, int m) {
  const Graph g = complete_bipartite_graph(n, m);
  EdgeColoring c(g, 3);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) c.set(*g.edge_id(i - 1, n + j - 1), residue_color(i + j - 1));
  return c;
}

/// Coloring of K_{m,n} obtained from one of K_{n,m} by swapping the sides.
inline EdgeColoring swap_sides(const EdgeColoring& c, int n, int m) {
  const Graph g = complete_bipartite_graph(m, n);
  EdgeColoring out(g, c.k());
  const Graph& h = c.graph();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) out.set(*g.edge_id(j, m + i), c[*h.edge_id(i, n + j)]);
  return out;
}

/// Parity coloring of K_{2k+1,2k+1} followed by the five color-3 recoloring
/// steps. Not checked here; majority needs k >= 4.
inline EdgeColoring five_step_coloring(int k) {
  if (k < 1) throw InputError("five_step_coloring needs k >= 1");
  const int n = 2 * k + 1;
  const Graph g = complete_bipartite_graph(n, n);
  EdgeColoring c(g, 3);
  auto set = [&](int i, int j, Color x) { c.set(*g.edge_id(i - 1, n + j - 1), x); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) set(i, j, (i + j - 1) % 2 == 1 ? 1 : 2);
  for (int i = 1; i <= 2 * k - 1; i += 2) {
    set(i, i, 3);
    set(i, i + 1, 3);
    set(i + 1, i, 3);
    set(i + 1, i + 1, 3);
  }
  set(n, n, 3);
  for (int i = 2; i <= 2 * k - 2; i += 2) {
    set(i, i + 1, 3);
    set(i, i + 2, 3);
  }
  set(2 * k, 1, 3);
  set(2 * k, 2, 3);
  set(1, n, 3);
  return c;
}

/// Majority NSD coloring of K_{n,m} (n, m >= 2) with the least number of colors.
inline FamilyColoring mnsd_complete_bipartite(int n, int m) {
  if (n < 2 || m < 2) throw InputError("mnsd_complete_bipartite needs n, m >= 2");
  FamilyColoring out;
  if (n % 2 == 0 && m % 2 == 0) {
    out = color_complete_bipartite(n, m);
  } else if (n == m) {
    if (n == 3) {
      out = {5, fixture_k33_mnsd5().coloring()};
    } else if (n == 5) {
      out = {4, fixture_k55_mnsd4().coloring()};
    } else if (n == 7) {
      out = {3, fixture_k77_mnsd3().coloring()};
    } else {
      out = {3, five_step_coloring(n / 2)};
    }
  } else if (n % 3 == 2 && m % 3 == 1 && n / 3 == m / 3) {
    out = mnsd_complete_bipartite(m, n);
    out.coloring = swap_sides(out.coloring, m, n);
  } else {
    EdgeColoring c = interval_mod3(n, m);
    if (n % 3 == 1 && m % 3 == 2 && n / 3 == m / 3) {
      const Graph& g = c.graph();
      for (int i = 1; i <= n; i += 3) c.set(*g.edge_id(i - 1, n + i - 1), 3);
    }
    out = {3, c};
  }
  ensure_verified(out.coloring, Mode::Majority, "mnsd_complete_bipartite");
  return out;
}

}  // namespace nsd
