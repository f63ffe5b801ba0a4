#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nsd/errors.hpp"
#include "nsd/graph.hpp"

namespace nsd {

using Color = int;
using Sum = long long;

enum class Mode { QuasiMajority, Majority };

inline std::string_view mode_name(Mode m) { return m == Mode::QuasiMajority ? "quasi_majority" : "majority"; }

/// Largest number of same-colored edges allowed at a vertex of degree d.
inline int color_cap(Mode mode, int d) { return mode == Mode::QuasiMajority ? (d + 1) / 2 : d / 2; }

/// Edge coloring of a fixed graph with palette [k] = {1..k}. Color 0 marks an
/// uncolored edge. Per-vertex color counts and vertex sums are maintained on
/// every assignment.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  EdgeColoring(Graph g, int k) : graph_(std::move(g)), k_(k) {
    if (k < 0) throw InputError("palette size must be nonnegative");
    colors_.assign(static_cast<std::size_t>(graph_.size()), 0);
    counts_.assign(static_cast<std::size_t>(graph_.order()) * static_cast<std::size_t>(k + 1), 0);
    sums_.assign(static_cast<std::size_t>(graph_.order()), 0);
    for (Vertex v = 0; v < graph_.order(); ++v) counts_[index(v, 0)] = graph_.degree(v);
  }

  /// Builds a total coloring from colors aligned with g.edges().
  EdgeColoring(Graph g, int k, const std::vector<Color>& colors) : EdgeColoring(std::move(g), k) {
    if (static_cast<int>(colors.size()) != graph_.size()) {
      throw InputError("coloring has " + std::to_string(colors.size()) + " colors for " +
                       std::to_string(graph_.size()) + " edges");
    }
    for (EdgeId e = 0; e < graph_.size(); ++e) set(e, colors[static_cast<std::size_t>(e)]);
  }

  const Graph& graph() const noexcept { return graph_; }
  int k() const noexcept { return k_; }
  const std::vector<Color>& colors() const noexcept { return colors_; }
  Color color(EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
  Color operator[](EdgeId e) const { return color(e); }

  void set(EdgeId e, Color c) {
    if (c < 0 || c > k_) {
      throw InputError("color " + std::to_string(c) + " outside palette [1," + std::to_string(k_) + "]");
    }
    auto& slot = colors_[static_cast<std::size_t>(e)];
    const Color old = slot;
    if (old == c) return;
    const auto [u, v] = graph_.edge(e);
    for (Vertex x : {u, v}) {
      --counts_[index(x, old)];
      ++counts_[index(x, c)];
      sums_[static_cast<std::size_t>(x)] += c - old;
    }
    slot = c;
  }

  void clear(EdgeId e) { set(e, 0); }

  /// Number of edges at v with color c (c = 0 counts uncolored edges).
  int count(Vertex v, Color c) const {
    if (c < 0 || c > k_) return 0;
    return counts_[index(v, c)];
  }

  Sum sum(Vertex v) const { return sums_[static_cast<std::size_t>(v)]; }
  const std::vector<Sum>& sums() const noexcept { return sums_; }

  bool is_total() const {
    return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == 0; });
  }

  bool is_saturated(Vertex v) const { return count(v, 0) == 0; }

  Color max_color() const {
    Color best = 0;
    for (Color c : colors_) best = std::max(best, c);
    return best;
  }

  /// Number of distinct colors actually used.
  int colors_used() const {
    std::vector<char> used(static_cast<std::size_t>(k_ + 1), 0);
    for (Color c : colors_) used[static_cast<std::size_t>(c)] = 1;
    int total = 0;
    for (int c = 1; c <= k_; ++c) total += used[static_cast<std::size_t>(c)];
    return total;
  }

  /// Same colors, different palette bound. Throws if some color exceeds k.
  EdgeColoring with_palette(int k) const {
    EdgeColoring out(graph_, k);
    for (EdgeId e = 0; e < graph_.size(); ++e) out.set(e, colors_[static_cast<std::size_t>(e)]);
    return out;
  }

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.k_ == b.k_ && a.graph_ == b.graph_ && a.colors_ == b.colors_;
  }

 private:
  std::size_t index(Vertex v, Color c) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(c);
  }

  Graph graph_;
  int k_ = 0;
  std::vector<Color> colors_;
  std::vector<int> counts_;
  std::vector<Sum> sums_;
};

}  // namespace nsd
