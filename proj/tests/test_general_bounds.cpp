#include <gtest/gtest.h>

#include "nsd/general_bounds.hpp"
#include "nsd/generators.hpp"
#include "nsd/graph_io.hpp"

using namespace nsd;

namespace {

std::vector<Graph> nice_corpus(int count, int max_n) {
  std::vector<Graph> out;
  for (std::uint64_t seed = 0; out.size() < static_cast<std::size_t>(count); ++seed) {
    const int n = 3 + static_cast<int>(seed % static_cast<std::uint64_t>(max_n - 2));
    auto g = make_nice(generate({Family::RandomGnp, n, 0, 0, 1, 4 + static_cast<std::uint64_t>(seed % 3), seed}));
    if (g.size() > 0) out.push_back(g);
  }
  return out;
}

std::vector<Graph> min_degree_two_corpus(int count, int max_n) {
  std::vector<Graph> out;
  for (std::uint64_t seed = 0; out.size() < static_cast<std::size_t>(count); ++seed) {
    const int n = 3 + static_cast<int>(seed % static_cast<std::uint64_t>(max_n - 2));
    auto g = strip_pendant_edges(generate({Family::RandomGnp, n, 0, 0, 1, 3, seed}));
    if (g.size() > 0 && !has_pendant_vertex(g)) out.push_back(g);
  }
  return out;
}

// Window invariants plus the color-change shape of a finished run.
void expect_run_invariants(const Graph& g, const KalkowskiRun& run, int offset) {
  const auto& c = run.coloring;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Sum w = run.window[static_cast<std::size_t>(v)];
    if (w == kNoWindow) continue;
    EXPECT_TRUE(c.sum(v) == w || c.sum(v) == w + offset);
    EXPECT_LT(((w % (2 * offset)) + 2 * offset) % (2 * offset), offset);
    for (Vertex u : g.neighbors(v)) {
      const Sum wu = run.window[static_cast<std::size_t>(u)];
      if (wu != kNoWindow) {
        EXPECT_NE(w, wu);
      }
    }
  }
  std::vector<char> forward(static_cast<std::size_t>(g.size()), 0);
  for (EdgeId e : run.forward_edge) {
    if (e >= 0) forward[static_cast<std::size_t>(e)] = 1;
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    const int diff = c[e] - run.base[e];
    if (!forward[static_cast<std::size_t>(e)]) {
      EXPECT_TRUE(diff == 0 || diff == offset || diff == -offset) << diff;
    }
  }
}

}  // namespace

TEST(Kalkowski12, Examples) {
  for (const Graph& g : {path_graph(3), petersen_graph(),
                         make_nice(generate({Family::RandomGnp, 30, 0, 0, 1, 5, 3}))}) {
    auto c = kalkowski_qmnsd12(g);
    EXPECT_TRUE(verify(c, Mode::QuasiMajority, 12).passed()) << emit_graph6(g);
  }
  EXPECT_THROW(kalkowski_qmnsd12(complete_graph(2)), InputError);
}

TEST(Kalkowski12, InvariantsParanoid) {
  for (const auto& g : nice_corpus(120, 40)) {
    auto run = kalkowski_run(g, qm_three_coloring(g), KalkowskiParams::quasi_majority(), true);
    EXPECT_TRUE(verify(run.coloring, Mode::QuasiMajority, 12).passed()) << emit_graph6(g);
    expect_run_invariants(g, run, 4);
    EXPECT_GT(run.checked_mutations, 0);
  }
}

TEST(Kalkowski18, Examples) {
  for (const Graph& g : {cycle_graph(7), complete_graph(6), petersen_graph(), complete_bipartite_graph(2, 5)}) {
    auto c = kalkowski_mnsd18(g);
    EXPECT_TRUE(verify(c, Mode::Majority, 18).passed()) << emit_graph6(g);
  }
  EXPECT_THROW(kalkowski_mnsd18(path_graph(4)), PreconditionError);
}

TEST(Kalkowski18, EvenDegreesKeepSmallerPalette) {
  const Graph g = complete_graph(5);
  auto m = kalkowski_mnsd18(g);
  auto q = kalkowski_qmnsd12(g);
  EXPECT_LE(m.max_color(), std::max(q.max_color(), 18));
  EXPECT_TRUE(verify(q, Mode::Majority, 12).passed());
}

TEST(Kalkowski18, InvariantsParanoid) {
  for (const auto& g : min_degree_two_corpus(80, 30)) {
    auto run = kalkowski_run(g, majority_four_coloring(g), KalkowskiParams::majority(), true);
    EXPECT_TRUE(verify(run.coloring, Mode::Majority, 18).passed()) << emit_graph6(g);
    expect_run_invariants(g, run, 6);
  }
}

TEST(DeltaBound, Palette) {
  EXPECT_EQ(delta_palette(4), 8);
  EXPECT_EQ(delta_palette(5), 10);
  EXPECT_EQ(delta_palette(6), 11);
}

TEST(DeltaBound, CompleteDelegates) {
  DeltaBoundStats st;
  auto c = qmnsd_delta_bound(complete_graph(4), &st);
  EXPECT_EQ(st.complete_bases, 1);
  EXPECT_EQ(st.steps, 0);
  EXPECT_EQ(c.max_color(), 3);
  EXPECT_TRUE(verify(c, Mode::QuasiMajority).passed());
}

TEST(DeltaBound, RandomGraphs) {
  for (const auto& g : nice_corpus(120, 30)) {
    DeltaBoundStats st;
    auto c = qmnsd_delta_bound(g, &st);
    const int k = delta_palette(g.max_degree());
    EXPECT_EQ(c.k(), k);
    EXPECT_TRUE(verify(c, Mode::QuasiMajority, k).passed()) << emit_graph6(g);
    if (st.steps > 0) {
      EXPECT_GE(st.min_list, (g.max_degree() + 3) / 2);
    }
    EXPECT_EQ(st.full_scans, 0);
  }
}

TEST(DeltaBound, DegreeFiveAndSix) {
  for (int d : {5, 6}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Graph g = make_nice(generate({Family::RandomMaxDegree, 16, 0, d, 1, 1, seed}));
      ASSERT_EQ(g.max_degree(), d);
      auto c = qmnsd_delta_bound(g);
      EXPECT_LE(c.max_color(), d == 5 ? 10 : 11);
      EXPECT_TRUE(verify(c, Mode::QuasiMajority).passed());
    }
  }
}
