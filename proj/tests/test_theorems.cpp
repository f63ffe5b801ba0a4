#include <gtest/gtest.h>

#include <chrono>

#include "nsd/nsd.hpp"
#include "oracle.hpp"

using namespace nsd;

TEST(CheckTheorems, DefaultRangesMatch) {
  TheoremRanges r;
  auto t = check_theorems(r);
  EXPECT_EQ(t.mismatches(), 0);
  int small = 0;
  for (const auto& row : t.rows) {
    EXPECT_TRUE(row.verified) << row.family;
    if (row.edges <= 12) {
      ++small;
      EXPECT_EQ(oracle::index(row.graph, row.mode, row.constructed_k), row.constructed_k) << row.family;
      ASSERT_TRUE(row.oracle_k.has_value()) << row.family;
    }
  }
  EXPECT_GT(small, 200);
}

TEST(CheckTheorems, KnownValues) {
  TheoremRanges r;
  r.trees = 0;
  r.complete_max = 5;
  r.majority_complete_max = 6;
  auto t = check_theorems(r);
  auto find = [&](const std::string& fam, std::vector<int> p) {
    for (const auto& row : t.rows)
      if (row.family == fam && row.params == p) return row.constructed_k;
    return -1;
  };
  EXPECT_EQ(find("path", {3}), 2);
  EXPECT_EQ(find("path", {7}), 3);
  EXPECT_EQ(find("cycle", {4}), 4);
  EXPECT_EQ(find("cycle", {5}), 5);
  EXPECT_EQ(find("cycle", {6}), 3);
  EXPECT_EQ(find("complete_bipartite", {2, 2}), 4);
  EXPECT_EQ(find("complete_bipartite", {2, 3}), 2);
  EXPECT_EQ(find("majority_complete", {4}), 5);
  EXPECT_EQ(find("majority_complete", {6}), 4);
  EXPECT_EQ(find("majority_complete_bipartite", {3, 3}), 5);
}

TEST(CheckTheorems, ThreadCountDoesNotChangeRows) {
  TheoremRanges r;
  r.trees = 30;
  r.complete_max = 5;
  r.majority_complete_max = 5;
  auto a = check_theorems(r);
  r.threads = 3;
  auto b = check_theorems(r);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].family, b.rows[i].family);
    EXPECT_EQ(a.rows[i].params, b.rows[i].params);
    EXPECT_EQ(a.rows[i].constructed_k, b.rows[i].constructed_k);
  }
}
