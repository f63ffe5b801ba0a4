// nsd_forge: generate graphs, build and verify sum-distinguishing colorings,
// compute exact indices, and tabulate family indices.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsd/nsd.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw nsd::InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw nsd::InputError("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

nsd::GraphFormat parse_format(const std::string& s) {
  if (s == "graph6") return nsd::GraphFormat::Graph6;
  if (s == "edgelist") return nsd::GraphFormat::EdgeList;
  throw nsd::InputError("unknown format " + s);
}

nsd::Mode parse_mode(const std::string& s) {
  if (s == "qm") return nsd::Mode::QuasiMajority;
  if (s == "majority") return nsd::Mode::Majority;
  throw nsd::InputError("unknown mode " + s);
}

int env_threads() {
  const char* v = std::getenv("NSD_FORGE_THREADS");
  const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (!v || !*v) return hw;
  try {
    return std::max(1, std::stoi(v));
  } catch (const std::exception&) {
    throw nsd::InputError(std::string("NSD_FORGE_THREADS is not an integer: ") + v);
  }
}

struct Common {
  std::string input = "-";
  std::string output;
  std::string format = "graph6";
  std::string mode = "qm";
};

struct Budget {
  int max_k = 20;
  std::uint64_t node_limit = 0;
  double time_limit = 0;

  nsd::SearchBudget get() const {
    nsd::SearchBudget b;
    b.max_k = max_k;
    if (node_limit > 0) b.node_limit = node_limit;
    if (time_limit > 0) b.time_limit = time_limit;
    return b;
  }
};

void add_budget(CLI::App* app, Budget& b) {
  app->add_option("--max-k", b.max_k, "Largest palette the exact search tries")->check(CLI::Range(1, 1000));
  app->add_option("--node-limit", b.node_limit, "Search node budget per palette size (0 = none)");
  app->add_option("--time-limit", b.time_limit, "Search time budget per palette size in seconds (0 = none)");
}

json error_json(std::string_view kind, std::string_view message) {
  return json{{"error", kind}, {"message", message}};
}

// ---------------------------------------------------------------- subcommands

struct GenerateArgs {
  std::string family;
  int n = 0;
  int m = 0;
  int degree = 0;
  std::string p = "1/2";
  std::uint64_t seed = 0;
  bool nice = false;
  std::string format = "graph6";
  std::string output;
};

int run_generate(const GenerateArgs& a) {
  auto fam = nsd::family_from_name(a.family);
  if (!fam) throw nsd::InputError("unknown family " + a.family);
  nsd::FamilySpec spec{*fam, a.n, a.m, a.degree, 1, 2, a.seed};
  const auto slash = a.p.find('/');
  if (slash == std::string::npos) throw nsd::InputError("--p must look like num/den");
  try {
    spec.p_num = std::stoull(a.p.substr(0, slash));
    spec.p_den = std::stoull(a.p.substr(slash + 1));
  } catch (const std::exception&) {
    throw nsd::InputError("--p must look like num/den");
  }
  if (spec.p_den == 0 || spec.p_num > spec.p_den) throw nsd::InputError("--p must be a probability");
  auto g = nsd::generate(spec);
  if (a.nice) g = nsd::make_nice(g);
  auto text = nsd::emit_graph(g, parse_format(a.format));
  if (text.empty() || text.back() != '\n') text += '\n';
  write_output(a.output, text);
  return kExitOk;
}

struct ColorArgs {
  Common io;
  std::string strategy = "auto";
  std::uint64_t seed = 0;
  Budget budget;
};

int run_color(const ColorArgs& a) {
  const auto g = nsd::parse_graph(read_input(a.io.input), parse_format(a.io.format));
  auto strategy = nsd::strategy_from_name(a.strategy);
  if (!strategy) throw nsd::InputError("unknown strategy " + a.strategy);
  nsd::ColorRequest req{parse_mode(a.io.mode), *strategy, a.budget.get()};
  const auto out = nsd::color_graph(g, req);
  json j{{"strategy", nsd::strategy_name(out.used)},
         {"mode", nsd::mode_name(req.mode)},
         {"k", out.k},
         {"report", nsd::report_to_json(out.report)}};
  if (!out.report.passed()) {
    j["error"] = "verification";
    write_output(a.io.output, dump(j));
    return kExitMismatch;
  }
  j["coloring"] = nsd::coloring_to_json(out.coloring);
  write_output(a.io.output, dump(j));
  return kExitOk;
}

struct VerifyArgs {
  Common io;
  std::string coloring;
  int k = 0;
};

int run_verify(const VerifyArgs& a) {
  const auto g = nsd::parse_graph(read_input(a.io.input), parse_format(a.io.format));
  const auto text = read_input(a.coloring);
  // Accept the output of `color` as well as a bare coloring document.
  const auto j = json::parse(text);
  const auto c = nsd::coloring_from_json(j.is_object() && j.contains("coloring") ? j.at("coloring") : j, g);
  const auto rep = nsd::verify(c, parse_mode(a.io.mode), a.k > 0 ? a.k : c.k());
  write_output(a.io.output, dump(nsd::report_to_json(rep)));
  return rep.passed() ? kExitOk : kExitMismatch;
}

struct IndexArgs {
  Common io;
  Budget budget;
};

int run_index(const IndexArgs& a) {
  const auto g = nsd::parse_graph(read_input(a.io.input), parse_format(a.io.format));
  const auto mode = parse_mode(a.io.mode);
  const auto r = nsd::min_index(g, mode, a.budget.get());
  json j{{"mode", nsd::mode_name(mode)},
         {"status", r.status == nsd::SearchStatus::Found ? "exact" : "unknown"},
         {"nodes", r.nodes},
         {"seconds", r.seconds}};
  if (r.status == nsd::SearchStatus::Found) {
    j["k"] = r.k;
    const auto rep = nsd::verify(*r.witness, mode, r.k);
    if (!rep.passed()) {
      j["error"] = "verification";
      j["report"] = nsd::report_to_json(rep);
      write_output(a.io.output, dump(j));
      return kExitMismatch;
    }
    j["witness"] = nsd::coloring_to_json(*r.witness);
  } else {
    j["k"] = nullptr;
  }
  write_output(a.io.output, dump(j));
  return kExitOk;
}

struct TheoremArgs {
  nsd::TheoremRanges ranges;
  Budget budget{20, 2'000'000, 10.0};
  bool json_out = false;
  std::string output;
};

std::string params_text(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

int run_check_theorems(TheoremArgs a) {
  a.ranges.budget = a.budget.get();
  a.ranges.threads = env_threads();
  const auto table = nsd::check_theorems(a.ranges);
  std::ostringstream out;
  if (a.json_out) {
    json rows = json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"family", r.family},
                      {"mode", nsd::mode_name(r.mode)},
                      {"params", r.params},
                      {"edges", r.edges},
                      {"constructed_k", r.constructed_k},
                      {"verified", r.verified},
                      {"oracle_k", r.oracle_k ? json(*r.oracle_k) : json(nullptr)},
                      {"match", !r.mismatch()}});
    }
    out << json{{"rows", rows}, {"mismatches", table.mismatches()}, {"unknown", table.unknown()}}.dump() << "\n";
  } else {
    out << "family\tmode\tparams\tedges\tconstructed_k\toracle_k\tmatch\n";
    for (const auto& r : table.rows) {
      out << r.family << '\t' << nsd::mode_name(r.mode) << '\t' << params_text(r.params) << '\t' << r.edges << '\t'
          << r.constructed_k << '\t' << (r.oracle_k ? std::to_string(*r.oracle_k) : "unknown") << '\t'
          << (r.mismatch() ? "no" : (r.oracle_k ? "yes" : "unchecked")) << '\n';
    }
  }
  write_output(a.output, out.str());
  return table.mismatches() == 0 ? kExitOk : kExitMismatch;
}

void add_io(CLI::App* app, Common& c, bool with_mode) {
  app->add_option("input", c.input, "Graph file, or - for stdin");
  app->add_option("--format", c.format, "Input format")->check(CLI::IsMember({"graph6", "edgelist"}));
  app->add_option("-o,--output", c.output, "Output file (default stdout)");
  if (with_mode) app->add_option("--mode", c.mode, "Coloring mode")->check(CLI::IsMember({"qm", "majority"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-majority and majority sum-distinguishing edge-colorings"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Emit a graph from a family");
  g->add_option("--family", gen.family, "Family name")->required();
  g->add_option("--n", gen.n, "Order (or first side / leaves)");
  g->add_option("--m", gen.m, "Second side");
  g->add_option("--degree", gen.degree, "Degree or degree cap");
  g->add_option("--p", gen.p, "Edge probability num/den");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_flag("--nice", gen.nice, "Drop K2 components");
  g->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));
  g->add_option("-o,--output", gen.output, "Output file (default stdout)");

  ColorArgs col;
  auto* c = app.add_subcommand("color", "Build a verified coloring");
  add_io(c, col.io, true);
  c->add_option("--strategy", col.strategy, "Constructor")
      ->check(CLI::IsMember({"auto", "family", "bipartite6", "maxdeg4", "kalkowski", "delta-bound", "exact"}));
  c->add_option("--seed", col.seed, "Random seed");
  add_budget(c, col.budget);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check a coloring");
  add_io(v, ver.io, true);
  v->add_option("--coloring", ver.coloring, "Coloring JSON file")->required();
  v->add_option("--k", ver.k, "Palette size (default: the coloring's k)");

  IndexArgs idx;
  auto* i = app.add_subcommand("index", "Exact index by search");
  add_io(i, idx.io, true);
  add_budget(i, idx.budget);

  TheoremArgs th;
  auto* t = app.add_subcommand("check-theorems", "Constructed versus exact indices on families");
  t->add_option("--path-max", th.ranges.path_max);
  t->add_option("--cycle-max", th.ranges.cycle_max);
  t->add_option("--complete-max", th.ranges.complete_max);
  t->add_option("--bipartite-max", th.ranges.bipartite_max);
  t->add_option("--trees", th.ranges.trees, "Number of random trees");
  t->add_option("--tree-max-n", th.ranges.tree_max_n);
  t->add_option("--majority-complete-max", th.ranges.majority_complete_max);
  t->add_option("--majority-bipartite-max", th.ranges.majority_bipartite_max);
  t->add_option("--seed", th.ranges.seed, "Random seed");
  t->add_flag("--json", th.json_out, "JSON instead of TSV");
  t->add_option("-o,--output", th.output, "Output file (default stdout)");
  add_budget(t, th.budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*g) return run_generate(gen);
    if (*c) return run_color(col);
    if (*v) return run_verify(ver);
    if (*i) return run_index(idx);
    if (*t) return run_check_theorems(th);
  } catch (const nsd::ParseError& e) {
    std::cout << dump(error_json("parse", e.what()));
    return kExitUsage;
  } catch (const nsd::InputError& e) {
    std::cout << dump(error_json("input", e.what()));
    return kExitUsage;
  } catch (const nsd::PreconditionError& e) {
    std::cout << dump(error_json("precondition", e.what()));
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cout << dump(error_json("parse", e.what()));
    return kExitUsage;
  } catch (const nsd::InternalError& e) {
    std::cout << dump(error_json("internal", e.what()));
    return kExitMismatch;
  }
  return kExitUsage;
}
