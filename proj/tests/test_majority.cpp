#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "nsd/fixtures.hpp"
#include "nsd/graph_io.hpp"
#include "nsd/majority.hpp"
#include "oracle.hpp"

using namespace nsd;

namespace {

void expect_majority(const FamilyColoring& f) {
  auto rep = verify(f.coloring, Mode::Majority, f.k);
  EXPECT_TRUE(rep.passed()) << emit_graph6(f.coloring.graph()) << " k=" << f.k;
}

std::vector<Sum> side_sums(const EdgeColoring& c, int from, int to) {
  std::vector<Sum> out;
  for (Vertex v = from; v < to; ++v) out.push_back(c.sum(v));
  return out;
}

}  // namespace

TEST(Fixtures, AllVerify) {
  for (const auto& f : all_fixtures()) {
    auto c = f.coloring();
    EXPECT_TRUE(verify(c, f.mode, f.k()).passed()) << f.name;
    EXPECT_EQ(c.max_color(), f.k()) << f.name;
    EXPECT_FALSE(f.provenance.empty());
  }
  EXPECT_EQ(fixture_by_name("K6-mnsd4").k(), 4);
  EXPECT_THROW(fixture_by_name("nope"), InputError);
}

TEST(Fixtures, StoredSums) {
  EXPECT_EQ(fixture_k4_qmnsd3().coloring().sums(), (std::vector<Sum>{5, 4, 6, 7}));
  EXPECT_EQ(fixture_k6_mnsd4().coloring().sums(), (std::vector<Sum>{9, 10, 11, 13, 14, 15}));
  const auto k33 = fixture_k33_mnsd5().coloring();
  EXPECT_EQ(side_sums(k33, 0, 3), (std::vector<Sum>{11, 10, 6}));
  EXPECT_EQ(side_sums(k33, 3, 6), (std::vector<Sum>{12, 8, 7}));
  const auto k77 = fixture_k77_mnsd3().coloring();
  EXPECT_EQ(side_sums(k77, 0, 7), (std::vector<Sum>{16, 16, 16, 13, 13, 13, 13}));
  EXPECT_EQ(side_sums(k77, 7, 14), (std::vector<Sum>{15, 15, 14, 14, 14, 14, 14}));
}

TEST(Fixtures, SmallIndicesMatchOracle) {
  EXPECT_EQ(oracle::index(complete_graph(4), Mode::QuasiMajority, 3), 3);
  EXPECT_EQ(oracle::index(complete_graph(4), Mode::Majority, 5), 5);
  EXPECT_EQ(oracle::index(complete_bipartite_graph(2, 2), Mode::QuasiMajority, 4), 4);
  EXPECT_EQ(oracle::index(complete_bipartite_graph(3, 3), Mode::Majority, 5), 5);
}

TEST(MajorityComplete, SmallCases) {
  EXPECT_THROW(mnsd_complete(2), InputError);
  auto k3 = mnsd_complete(3);
  EXPECT_EQ(k3.k, 3);
  auto k4 = mnsd_complete(4);
  EXPECT_EQ(k4.k, 5);
  auto k6 = mnsd_complete(6);
  EXPECT_EQ(k6.k, 4);
  auto s = k6.coloring.sums();
  std::sort(s.begin(), s.end());
  EXPECT_EQ(s, (std::vector<Sum>{9, 10, 11, 13, 14, 15}));
  for (int n = 3; n <= 5; ++n) {
    auto f = mnsd_complete(n);
    expect_majority(f);
    EXPECT_EQ(oracle::index(f.coloring.graph(), Mode::Majority, f.k), f.k) << n;
  }
}

TEST(MajorityComplete, OddOrders) {
  for (int n = 3; n <= 25; n += 2) {
    auto f = mnsd_complete(n);
    EXPECT_EQ(f.k, 3);
    expect_majority(f);
  }
}

TEST(MajorityComplete, EvenRecursionTrace) {
  for (int n = 6; n <= 30; n += 2) {
    auto r = mnsd_complete_detailed(n);
    EXPECT_EQ(r.k, 4);
    EXPECT_EQ(r.coloring.max_color(), 4);
    EXPECT_EQ(static_cast<int>(r.levels.size()), (n - 6) / 2);
    for (const auto& level : r.levels) {
      EXPECT_TRUE(level.branch == 1 || level.branch == 2) << level.n;
      EXPECT_TRUE(level.sums_increasing) << level.n;
      EXPECT_TRUE(level.slack_holds) << level.n;
    }
    ASSERT_EQ(static_cast<int>(r.order.size()), n);
    for (std::size_t i = 1; i < r.order.size(); ++i) EXPECT_LT(r.coloring.sum(r.order[i - 1]), r.coloring.sum(r.order[i]));
    expect_majority({r.k, r.coloring});
  }
}

TEST(MajorityBipartite, Dispatch) {
  EXPECT_THROW(mnsd_complete_bipartite(1, 4), InputError);
  EXPECT_EQ(mnsd_complete_bipartite(4, 6).k, 2);
  EXPECT_EQ(mnsd_complete_bipartite(3, 3).k, 5);
  EXPECT_EQ(mnsd_complete_bipartite(5, 5).k, 4);
  EXPECT_EQ(mnsd_complete_bipartite(7, 7).k, 3);
  EXPECT_EQ(mnsd_complete_bipartite(9, 9).k, 3);
  EXPECT_EQ(mnsd_complete_bipartite(3, 4).k, 3);
  EXPECT_EQ(mnsd_complete_bipartite(4, 5).k, 3);
  EXPECT_EQ(mnsd_complete_bipartite(5, 4).k, 3);
}

TEST(MajorityBipartite, Grid) {
  for (int n = 2; n <= 14; ++n)
    for (int m = 2; m <= 14; ++m) {
      auto f = mnsd_complete_bipartite(n, m);
      expect_majority(f);
      EXPECT_EQ(f.coloring.graph().order(), n + m);
      if (n * m <= 12) {
        EXPECT_EQ(oracle::index(f.coloring.graph(), Mode::Majority, f.k), f.k) << n << "," << m;
      }
    }
}

TEST(MajorityBipartite, SwapSides) {
  auto f = mnsd_complete_bipartite(4, 5);
  auto g = swap_sides(f.coloring, 4, 5);
  EXPECT_EQ(side_sums(g, 0, 5), side_sums(f.coloring, 4, 9));
  EXPECT_EQ(side_sums(g, 5, 9), side_sums(f.coloring, 0, 4));
}

TEST(MajorityBipartite, FiveStepProfile) {
  for (int k = 3; k <= 8; ++k) {
    auto c = five_step_coloring(k);
    const int n = 2 * k + 1;
    std::set<Sum> a, b;
    for (Sum s : side_sums(c, 0, n)) a.insert(s);
    for (Sum s : side_sums(c, n, 2 * n)) b.insert(s);
    EXPECT_EQ(a, (std::set<Sum>{3 * k + 3, 3 * k + 4, 3 * k + 6, 3 * k + 8})) << k;
    EXPECT_EQ(b, (std::set<Sum>{3 * k + 5, 3 * k + 7})) << k;
    EXPECT_TRUE(is_nsd(c.graph(), c)) << k;
    EXPECT_EQ(is_majority(c.graph(), c), k >= 4) << k;
  }
}

TEST(MajorityBipartite, ProfileChecks) {
  auto f = mnsd_complete_bipartite(3, 4);
  for (Sum s : side_sums(f.coloring, 0, 3)) EXPECT_TRUE(s >= 7 && s <= 9) << s;
  for (Sum s : side_sums(f.coloring, 3, 7)) EXPECT_EQ(s, 6);
  auto k77 = mnsd_complete_bipartite(7, 7).coloring;
  std::set<Sum> a, b;
  for (Sum s : side_sums(k77, 0, 7)) a.insert(s);
  for (Sum s : side_sums(k77, 7, 14)) b.insert(s);
  EXPECT_EQ(a, (std::set<Sum>{13, 16}));
  EXPECT_EQ(b, (std::set<Sum>{14, 15}));
}
