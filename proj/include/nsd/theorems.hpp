#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "nsd/coloring.hpp"
#include "nsd/exact_solver.hpp"
#include "nsd/families.hpp"
#include "nsd/generators.hpp"
#include "nsd/majority.hpp"
#include "nsd/verify.hpp"

namespace nsd {

/// Ranges for the family index tables. Bounds are inclusive; 0 disables a family.
struct TheoremRanges {
  int path_max = 10;
  int cycle_max = 12;
  int complete_max = 7;
  int bipartite_max = 4;           // qm K_{n,m}, 1 <= n <= m <= bipartite_max
  int trees = 200;
  int tree_max_n = 12;
  int majority_complete_max = 7;
  int majority_bipartite_max = 4;  // 2 <= n <= m
  std::uint64_t seed = 0;
  SearchBudget budget{20, 2'000'000, 10.0, 1};
  int threads = 1;
};

/// One family instance: the constructed k against the exact solver's index.
struct TheoremRow {
  std::string family;
  Mode mode = Mode::QuasiMajority;
  std::vector<int> params;
  int edges = 0;
  int constructed_k = 0;
  bool verified = false;
  std::optional<int> oracle_k;  // absent when the search ran out of budget
  Graph graph;
  EdgeColoring coloring;

  bool mismatch() const { return !verified || (oracle_k && *oracle_k != constructed_k); }
};

struct TheoremTable {
  std::vector<TheoremRow> rows;

  int mismatches() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const TheoremRow& r) { return r.mismatch(); }));
  }
  int unknown() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const TheoremRow& r) { return !r.oracle_k; }));
  }
};

namespace detail {

struct TheoremJob {
  std::string family;
  Mode mode;
  std::vector<int> params;
  std::function<FamilyColoring()> build;
};

inline std::vector<TheoremJob> theorem_jobs(const TheoremRanges& r) {
  std::vector<TheoremJob> jobs;
  const auto qm = Mode::QuasiMajority;
  for (int n = 3; n <= r.path_max; ++n) jobs.push_back({"path", qm, {n}, [n] { return color_path(n); }});
  for (int n = 3; n <= r.cycle_max; ++n) jobs.push_back({"cycle", qm, {n}, [n] { return color_cycle(n); }});
  for (int n = 3; n <= r.complete_max; ++n) jobs.push_back({"complete", qm, {n}, [n] { return color_complete(n); }});
  for (int n = 1; n <= r.bipartite_max; ++n)
    for (int m = std::max(n, 2); m <= r.bipartite_max; ++m)
      jobs.push_back({"complete_bipartite", qm, {n, m}, [n, m] { return color_complete_bipartite(n, m); }});
  Rng rng(r.seed);
  for (int i = 0; i < r.trees; ++i) {
    const int n = rng.between(3, std::max(3, r.tree_max_n));
    Graph t = random_tree(n, rng);
    jobs.push_back({"tree", qm, {n, i}, [t] { return color_tree(t); }});
  }
  const auto maj = Mode::Majority;
  for (int n = 3; n <= r.majority_complete_max; ++n)
    jobs.push_back({"majority_complete", maj, {n}, [n] { return mnsd_complete(n); }});
  for (int n = 2; n <= r.majority_bipartite_max; ++n)
    for (int m = n; m <= r.majority_bipartite_max; ++m)
      jobs.push_back({"majority_complete_bipartite", maj, {n, m}, [n, m] { return mnsd_complete_bipartite(n, m); }});
  return jobs;
}

inline TheoremRow run_theorem_job(const TheoremJob& job, const SearchBudget& budget) {
  TheoremRow row;
  row.family = job.family;
  row.mode = job.mode;
  row.params = job.params;
  auto f = job.build();
  row.graph = f.coloring.graph();
  row.edges = row.graph.size();
  row.constructed_k = f.k;
  row.verified = verify(f.coloring, job.mode, f.k).passed();
  row.coloring = std::move(f.coloring);
  auto idx = min_index(row.graph, job.mode, budget);
  if (idx.status == SearchStatus::Found) row.oracle_k = idx.k;
  return row;
}

}  // namespace detail

/// Builds every family instance in range and compares it with the exact index.
/// Rows are sorted by (family, parameters) whatever the thread count.
inline TheoremTable check_theorems(const TheoremRanges& ranges) {
  const auto jobs = detail::theorem_jobs(ranges);
  std::vector<TheoremRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) rows[i] = detail::run_theorem_job(jobs[i], ranges.budget);
  };
  const int threads = std::max(1, ranges.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::stable_sort(rows.begin(), rows.end(), [](const TheoremRow& a, const TheoremRow& b) {
    return std::tie(a.family, a.params) < std::tie(b.family, b.params);
  });
  return {std::move(rows)};
}

}  // namespace nsd
