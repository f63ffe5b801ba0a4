#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nsd/coloring.hpp"
#include "nsd/coloring_io.hpp"
#include "nsd/errors.hpp"
#include "nsd/generators.hpp"

namespace nsd {

/// A stored coloring of a small named graph. Colors follow the sorted edge
/// order of the graph; bipartite fixtures put side A at 0..n-1.
struct Fixture {
  std::string name;
  Mode mode;
  Graph graph;
  std::string json;        // {"k":..,"colors":[..]}
  std::string provenance;  // where the colors come from

  EdgeColoring coloring() const { return parse_coloring(json, graph); }
  int k() const { return coloring().k(); }
};

inline Fixture fixture_k4_qmnsd3() {
  return {"K4-qmnsd3", Mode::QuasiMajority, complete_graph(4), R"({"k":3,"colors":[1,2,2,1,2,3]})",
          "hand-entered reference coloring; sums 5,4,6,7"};
}

inline Fixture fixture_k6_mnsd4() {
  return {"K6-mnsd4", Mode::Majority, complete_graph(6),
          R"({"k":4,"colors":[1,2,2,3,1,3,1,2,3,2,1,3,4,4,4]})",
          "hand-entered reference coloring; vertices listed by increasing sum 9,10,11,13,14,15"};
}

inline Fixture fixture_k4_mnsd5() {
  return {"K4-mnsd5", Mode::Majority, complete_graph(4), R"({"k":5,"colors":[1,2,3,3,4,5]})",
          "derived: first witness of an exhaustive search at k=5"};
}

inline Fixture fixture_k22_qmnsd4() {
  return {"K2,2-qmnsd4", Mode::QuasiMajority, complete_bipartite_graph(2, 2), R"({"k":4,"colors":[1,2,3,4]})",
          "derived: first witness of an exhaustive search at k=4"};
}

inline Fixture fixture_k33_mnsd5() {
  return {"K3,3-mnsd5", Mode::Majority, complete_bipartite_graph(3, 3),
          R"({"k":5,"colors":[5,2,4,4,5,1,3,1,2]})", "hand-entered reference coloring; sums a=(11,10,6), b=(12,8,7)"};
}

inline Fixture fixture_k55_mnsd4() {
  return {"K5,5-mnsd4", Mode::Majority, complete_bipartite_graph(5, 5),
          R"({"k":4,"colors":[3,2,1,2,1,1,1,3,3,2,4,4,3,2,3,3,3,1,1,2,1,2,4,4,3]})",
          "derived: rows a1, a3, a5 hand-entered; rows a2, a4 from a search constrained to the sum profile "
          "a=(9,10,16,10,14), b=(12,12,12,12,11)"};
}

inline Fixture fixture_k77_mnsd3() {
  return {"K7,7-mnsd3", Mode::Majority, complete_bipartite_graph(7, 7),
          R"({"k":3,"colors":[1,2,3,3,2,2,3,1,2,3,3,3,2,2,2,1,2,2,3,3,3,2,1,1,1,2,3,3,)"
          R"(3,3,1,1,2,2,1,3,3,2,2,1,1,1,3,3,2,2,1,1,1]})",
          "hand-entered reference coloring; sums a=(16,16,16,13,13,13,13), b=(15,15,14,14,14,14,14)"};
}

inline std::vector<Fixture> all_fixtures() {
  return {fixture_k4_qmnsd3(), fixture_k6_mnsd4(),  fixture_k4_mnsd5(), fixture_k22_qmnsd4(),
          fixture_k33_mnsd5(), fixture_k55_mnsd4(), fixture_k77_mnsd3()};
}

inline Fixture fixture_by_name(std::string_view name) {
  for (auto& f : all_fixtures()) {
    if (f.name == name) return f;
  }
  throw InputError("unknown fixture " + std::string(name));
}

}  // namespace nsd
