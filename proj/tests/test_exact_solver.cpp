#include <gtest/gtest.h>

#include "nsd/exact_solver.hpp"
#include "nsd/generators.hpp"
#include "nsd/graph_io.hpp"
#include "oracle.hpp"

using namespace nsd;

namespace {

std::vector<Graph> small_nice_graphs() {
  std::vector<Graph> out;
  for (int n = 3; n <= 8; ++n) {
    out.push_back(path_graph(n));
    if (n <= 8) out.push_back(cycle_graph(n));
  }
  out.push_back(complete_graph(3));
  out.push_back(complete_graph(4));
  out.push_back(complete_bipartite_graph(2, 2));
  out.push_back(complete_bipartite_graph(2, 3));
  out.push_back(complete_bipartite_graph(1, 4));
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto g = make_nice(generate({Family::RandomGnp, 4 + static_cast<int>(seed % 4), 0, 0, 1, 2, seed}));
    if (g.size() >= 1 && g.size() <= 8) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(FindColoring, CompleteFourQm) {
  auto g = complete_graph(4);
  EXPECT_EQ(find_coloring(g, Mode::QuasiMajority, 2).status, SearchStatus::Infeasible);
  auto r = find_coloring(g, Mode::QuasiMajority, 3);
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_TRUE(verify(*r.coloring, Mode::QuasiMajority, 3).passed());
}

TEST(FindColoring, CycleFive) {
  auto g = cycle_graph(5);
  EXPECT_EQ(find_coloring(g, Mode::QuasiMajority, 4).status, SearchStatus::Infeasible);
  EXPECT_EQ(find_coloring(g, Mode::QuasiMajority, 5).status, SearchStatus::Found);
}

TEST(FindColoring, RejectsBadInput) {
  EXPECT_THROW(find_coloring(complete_graph(2), Mode::QuasiMajority, 3), InputError);
  EXPECT_THROW(find_coloring(path_graph(4), Mode::Majority, 3), InputError);
}

TEST(FindColoring, BudgetGivesUnknown) {
  SearchBudget tiny;
  tiny.node_limit = 5;
  auto r = find_coloring(complete_graph(6), Mode::QuasiMajority, 2, tiny);
  EXPECT_EQ(r.status, SearchStatus::Unknown);
  EXPECT_FALSE(r.coloring.has_value());
  auto idx = min_index(complete_graph(6), Mode::QuasiMajority, tiny);
  EXPECT_EQ(idx.status, SearchStatus::Unknown);
}

TEST(FindColoring, AgreesWithBruteForce) {
  for (const auto& g : small_nice_graphs()) {
    for (int k = 2; k <= 4; ++k) {
      for (Mode mode : {Mode::QuasiMajority, Mode::Majority}) {
        if (mode == Mode::Majority && has_pendant_vertex(g)) continue;
        auto r = find_coloring(g, mode, k);
        ASSERT_NE(r.status, SearchStatus::Unknown);
        EXPECT_EQ(r.found(), oracle::exists(g, mode, k)) << emit_graph6(g) << " k=" << k;
        if (r.found()) {
          EXPECT_TRUE(verify(*r.coloring, mode, k).passed());
        }
      }
    }
  }
}

TEST(FindColoring, Monotone) {
  for (const auto& g : small_nice_graphs()) {
    auto idx = min_index(g, Mode::QuasiMajority);
    ASSERT_EQ(idx.status, SearchStatus::Found);
    for (int k = idx.k; k <= idx.k + 2; ++k) EXPECT_TRUE(find_coloring(g, Mode::QuasiMajority, k).found());
    EXPECT_TRUE(verify(idx.witness->with_palette(idx.k + 1), Mode::QuasiMajority).passed());
  }
}

TEST(FindColoring, ParallelMatchesSequential) {
  SearchBudget par;
  par.threads = 3;
  for (const auto& g : small_nice_graphs()) {
    for (int k = 2; k <= 4; ++k) {
      auto a = find_coloring(g, Mode::QuasiMajority, k);
      auto b = find_coloring(g, Mode::QuasiMajority, k, par);
      EXPECT_EQ(a.status, b.status);
      if (a.found() && b.found()) {
        EXPECT_EQ(*a.coloring, *b.coloring);
      }
    }
  }
}

TEST(MinIndex, KnownValues) {
  EXPECT_EQ(min_index(path_graph(4), Mode::QuasiMajority).k, 3);
  EXPECT_EQ(min_index(complete_bipartite_graph(3, 3), Mode::Majority).k, 5);
  EXPECT_EQ(min_index(complete_bipartite_graph(2, 2), Mode::QuasiMajority).k, 4);
  EXPECT_EQ(min_index(Graph::from_edges(3, {}), Mode::QuasiMajority).k, 1);
}

TEST(CompletePartial, PathMiddle) {
  EdgeColoring p(path_graph(3), 2);
  p.set(0, 1);
  auto r = complete_partial(p, Mode::QuasiMajority, 2);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.coloring->color(1), 2);
  p.set(1, 1);
  EXPECT_EQ(complete_partial(p, Mode::QuasiMajority, 2).status, SearchStatus::Infeasible);
}

TEST(CompletePartial, FigureOneLastEdgeForced) {
  EdgeColoring p(complete_graph(4), 3, {1, 2, 2, 1, 2, 3});
  p.clear(5);
  auto r = complete_partial(p, Mode::QuasiMajority, 3);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.coloring->color(5), 3);
  for (Color c = 1; c <= 2; ++c) {
    p.set(5, c);
    EXPECT_FALSE(verify(p, Mode::QuasiMajority).passed());
  }
}

TEST(CompletePartial, AgreesWithBruteForce) {
  Rng rng(17);
  for (const auto& g : small_nice_graphs()) {
    if (g.size() < 3) continue;
    for (int trial = 0; trial < 3; ++trial) {
      const int k = rng.between(2, 4);
      std::vector<Color> fixed(static_cast<std::size_t>(g.size()), 0);
      for (int i = 0; i < 2; ++i) fixed[rng.below(static_cast<std::uint64_t>(g.size()))] = rng.between(1, k);
      auto r = search_coloring(g, Mode::QuasiMajority, k, fixed, {});
      EXPECT_EQ(r.found(), oracle::exists_extending(g, Mode::QuasiMajority, k, fixed)) << emit_graph6(g);
      if (r.found()) {
        for (EdgeId e = 0; e < g.size(); ++e) {
          if (fixed[e]) {
            EXPECT_EQ(r.coloring->color(e), fixed[e]);
          }
        }
      }
    }
  }
}

TEST(CompletePartial, SumConstraints) {
  auto g = path_graph(4);
  // Middle vertices 1 and 2; forbid every sum 1 could take except 5.
  SumConstraint c{1, {2, 3, 4}, std::nullopt};
  auto r = search_coloring(g, Mode::QuasiMajority, 3, std::vector<Color>(3, 0), {c});
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.coloring->sum(1), 5);
  SumConstraint a{2, {}, std::vector<Sum>{4}};
  auto r2 = search_coloring(g, Mode::QuasiMajority, 3, std::vector<Color>(3, 0), {a});
  ASSERT_TRUE(r2.found());
  EXPECT_EQ(r2.coloring->sum(2), 4);
  SumConstraint impossible{2, {}, std::vector<Sum>{9}};
  EXPECT_EQ(search_coloring(g, Mode::QuasiMajority, 3, std::vector<Color>(3, 0), {impossible}).status,
            SearchStatus::Infeasible);
}

TEST(SymmetryBreak, NonRegularGraphsKeepFullRange) {
  // Path P4 at k=3: reflection would not preserve NSD, the solver must still
  // find witnesses whose first edge is colored 3 when that is forced.
  auto g = path_graph(4);
  std::vector<Color> fixed{0, 0, 1};
  auto r = search_coloring(g, Mode::QuasiMajority, 3, fixed, {});
  EXPECT_EQ(r.found(), oracle::exists_extending(g, Mode::QuasiMajority, 3, fixed));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto h = make_nice(generate({Family::RandomRegular, 6, 0, 3, 1, 2, seed}));
    for (int k = 2; k <= 3; ++k)
      EXPECT_EQ(find_coloring(h, Mode::QuasiMajority, k).found(), oracle::exists(h, Mode::QuasiMajority, k));
  }
}
