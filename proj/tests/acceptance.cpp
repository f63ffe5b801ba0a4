// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nsd/nsd.hpp"
#include "oracle.hpp"

using namespace nsd;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Pinned limits.
constexpr double kExactInstanceSeconds = 10.0;
constexpr double kK6MajoritySeconds = 60.0;
constexpr double kCorpusSeconds = 300.0;
constexpr int kOracleMaxEdges = 12;

struct IndexCase {
  const char* name;
  Graph g;
  Mode mode;
  int expected;
  double limit;
};

Outcome check_indices(const std::vector<IndexCase>& cases) {
  Outcome out;
  double worst = 0;
  for (const auto& c : cases) {
    const auto t0 = Clock::now();
    auto r = min_index(c.g, c.mode);
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    if (r.status != SearchStatus::Found || r.k != c.expected) {
      out.fail(std::string(c.name) + " gave " + std::to_string(r.k) + ", expected " + std::to_string(c.expected));
    } else if (dt >= c.limit) {
      out.fail(std::string(c.name) + " took " + std::to_string(dt) + " s");
    } else if (!verify(*r.witness, c.mode, r.k).passed()) {
      out.fail(std::string(c.name) + " witness failed verify");
    }
  }
  if (out.pass) out.detail = std::to_string(cases.size()) + " instances, slowest " + std::to_string(worst) + " s";
  return out;
}

Outcome criterion1() {
  const auto qm = Mode::QuasiMajority;
  std::vector<IndexCase> cases{{"P3", path_graph(3), qm, 2, kExactInstanceSeconds}};
  for (int n = 4; n <= 7; ++n) cases.push_back({"P4..P7", path_graph(n), qm, 3, kExactInstanceSeconds});
  cases.push_back({"C3", cycle_graph(3), qm, 3, kExactInstanceSeconds});
  cases.push_back({"C6", cycle_graph(6), qm, 3, kExactInstanceSeconds});
  cases.push_back({"C4", cycle_graph(4), qm, 4, kExactInstanceSeconds});
  cases.push_back({"C7", cycle_graph(7), qm, 4, kExactInstanceSeconds});
  cases.push_back({"C5", cycle_graph(5), qm, 5, kExactInstanceSeconds});
  for (int n = 3; n <= 5; ++n) cases.push_back({"K3..K5", complete_graph(n), qm, 3, kExactInstanceSeconds});
  cases.push_back({"K2,2", complete_bipartite_graph(2, 2), qm, 4, kExactInstanceSeconds});
  cases.push_back({"K2,3", complete_bipartite_graph(2, 3), qm, 2, kExactInstanceSeconds});
  cases.push_back({"K3,3", complete_bipartite_graph(3, 3), qm, 3, kExactInstanceSeconds});
  return check_indices(cases);
}

Outcome criterion2() {
  const auto mj = Mode::Majority;
  return check_indices({{"K4", complete_graph(4), mj, 5, kExactInstanceSeconds},
                        {"K5", complete_graph(5), mj, 3, kExactInstanceSeconds},
                        {"K6", complete_graph(6), mj, 4, kK6MajoritySeconds},
                        {"K3,3", complete_bipartite_graph(3, 3), mj, 5, kExactInstanceSeconds},
                        {"K2,2", complete_bipartite_graph(2, 2), mj, 4, kExactInstanceSeconds}});
}

Outcome criterion3() {
  Outcome out;
  const auto table = check_theorems(TheoremRanges{});
  int compared = 0;
  for (const auto& r : table.rows) {
    if (r.mismatch()) out.fail(r.family + " constructed k " + std::to_string(r.constructed_k) + " disagrees with search");
    if (r.edges > kOracleMaxEdges) continue;
    ++compared;
    const auto k = oracle::index(r.graph, r.mode, r.constructed_k);
    if (k != r.constructed_k) out.fail(r.family + " constructed k " + std::to_string(r.constructed_k) + " disagrees with oracle");
  }
  if (out.pass) out.detail = std::to_string(compared) + " instances with |E| <= 12, 0 mismatches";
  return out;
}

struct CorpusResult {
  Outcome outcome;
  int empty_scans = 0;
  int case_steps = 0;
};

CorpusResult criterion4() {
  CorpusResult res;
  Outcome& out = res.outcome;
  const auto t0 = Clock::now();
  long long edges = 0;
  auto check = [&](const char* who, const EdgeColoring& c, Mode mode, int cap) {
    edges += c.graph().size();
    if (!verify(c, mode, cap).passed()) out.fail(std::string(who) + " failed verify");
  };

  int done = 0;
  for (std::uint64_t seed = 0; done < 200; ++seed) {
    const int n = 3 + static_cast<int>(seed % 38);
    const Graph g = make_nice(generate({Family::RandomGnp, n, 0, 0, 1, 2 + seed % 5, seed}));
    if (g.size() == 0) continue;
    check("kalkowski_qmnsd12", kalkowski_qmnsd12(g), Mode::QuasiMajority, 12);
    ++done;
  }
  done = 0;
  for (std::uint64_t seed = 0; done < 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 28);
    const Graph g = strip_pendant_edges(generate({Family::RandomGnp, n, 0, 0, 1, 2 + seed % 3, 1000 + seed}));
    if (g.size() == 0) continue;
    check("kalkowski_mnsd18", kalkowski_mnsd18(g), Mode::Majority, 18);
    ++done;
  }
  done = 0;
  for (std::uint64_t seed = 0; done < 100; ++seed) {
    const int n = 5 + static_cast<int>(seed % 36);
    const Graph g = make_nice(generate({Family::RandomMaxDegree, n, 0, 4, 2, 3, 2000 + seed}));
    if (g.size() == 0) continue;
    MaxDeg4Stats st;
    try {
      check("qmnsd_maxdeg4", qmnsd_maxdeg4(g, &st), Mode::QuasiMajority, 7);
    } catch (const InternalError& e) {
      out.fail(e.what());
    }
    res.empty_scans += st.empty_scans;
    res.case_steps += st.case1 + st.case2;
    ++done;
  }
  done = 0;
  for (std::uint64_t seed = 0; done < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 19);
    const int m = 2 + static_cast<int>((seed / 19) % 19);
    const Graph g = make_nice(generate({Family::RandomBipartite, n, m, 0, 1, 2 + seed % 3, 3000 + seed}));
    if (g.size() == 0) continue;
    check("qmnsd_six", qmnsd_six(g), Mode::QuasiMajority, 6);
    ++done;
  }
  const double dt = seconds_since(t0);
  if (dt >= kCorpusSeconds) out.fail("corpus took " + std::to_string(dt) + " s");
  if (out.pass) out.detail = "500 graphs, " + std::to_string(edges) + " edges, " + std::to_string(dt) + " s";
  return res;
}

Outcome criterion5() {
  Outcome out;
  for (int n = 3; n <= 20; ++n) {
    auto f = color_complete(n);
    if (f.k != 3 || !verify(f.coloring, Mode::QuasiMajority, 3).passed()) out.fail("K" + std::to_string(n) + " not a QM-NSD 3-coloring");
    const auto p = color_profile(f.coloring, 2);
    const int k = n / 2;
    if (n % 2 == 1) {
      if (std::count(p.begin(), p.end(), k - 1) != k || std::count(p.begin(), p.end(), k) != k + 1)
        out.fail("K" + std::to_string(n) + " color-2 profile");
    } else if (std::count_if(p.begin(), p.end(), [&](int x) { return x <= k - 1; }) < k - 1) {
      out.fail("K" + std::to_string(n) + " color-2 profile");
    }
  }
  int levels = 0;
  for (int n = 6; n <= 16; n += 2) {
    const auto r = mnsd_complete_detailed(n);
    for (const auto& lv : r.levels) {
      ++levels;
      if (!lv.sums_increasing || !lv.slack_holds) out.fail("majority recursion level " + std::to_string(lv.n));
    }
    std::vector<Sum> s;
    for (Vertex v : r.order) s.push_back(r.coloring.sum(v));
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i - 1] >= s[i]) out.fail("K" + std::to_string(n) + " sums not sorted and distinct");
    if (r.k != 4 || !verify(r.coloring, Mode::Majority, 4).passed()) out.fail("K" + std::to_string(n) + " majority output");
  }
  if (out.pass) out.detail = "K3..K20 profiles, " + std::to_string(levels) + " recursion levels";
  return out;
}

Outcome criterion6() {
  Outcome out;
  int threes = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 3 + static_cast<int>(seed % 12);
    const Graph t = generate({Family::RandomTree, n, 0, 0, 1, 2, 10000 + seed});
    const auto f = color_tree(t);
    const int predicted = has_equal_even_adjacency(t) ? 3 : 2;
    threes += predicted == 3;
    if (f.k != predicted) out.fail("tree seed " + std::to_string(seed) + " k disagrees with the condition");
    if (!verify(f.coloring, Mode::QuasiMajority, f.k).passed()) out.fail("tree seed " + std::to_string(seed) + " failed verify");
    if (oracle::index(t, Mode::QuasiMajority, 3) != f.k) out.fail("tree seed " + std::to_string(seed) + " disagrees with oracle");
  }
  if (out.pass) out.detail = "500 trees (" + std::to_string(threes) + " need 3 colors)";
  return out;
}

Outcome criterion7() {
  Outcome out;
  for (const auto& f : all_fixtures()) {
    if (!verify(f.coloring(), f.mode, f.k()).passed()) out.fail(f.name + " failed verify");
  }
  if (fixture_k4_qmnsd3().coloring().sums() != std::vector<Sum>{5, 4, 6, 7}) out.fail("K4 sums");
  auto s6 = fixture_k6_mnsd4().coloring().sums();
  std::sort(s6.begin(), s6.end());
  if (s6 != std::vector<Sum>{9, 10, 11, 13, 14, 15}) out.fail("K6 sums");
  if (out.pass) out.detail = std::to_string(all_fixtures().size()) + " fixtures";
  return out;
}

Outcome criterion8(const CorpusResult& r) {
  Outcome out;
  if (r.empty_scans != 0) out.fail(std::to_string(r.empty_scans) + " empty scans");
  if (r.case_steps == 0) out.fail("corpus exercised no reduction step");
  if (out.pass) out.detail = std::to_string(r.case_steps) + " reduction steps, 0 empty scans";
  return out;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& run) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  };
  CorpusResult corpus;
  report(1, "qm exact indices", criterion1);
  report(2, "majority exact indices", criterion2);
  report(3, "constructor-oracle equivalence", criterion3);
  report(4, "constructor soundness at scale", [&] {
    corpus = criterion4();
    return corpus.outcome;
  });
  report(5, "structural lemma checks", criterion5);
  report(6, "tree dichotomy", criterion6);
  report(7, "fixture validity", criterion7);
  report(8, "list-selection scans never empty", [&] { return criterion8(corpus); });
  return failures == 0 ? 0 : 1;
}
