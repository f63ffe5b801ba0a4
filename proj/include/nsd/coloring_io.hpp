#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nsd/coloring.hpp"
#include "nsd/errors.hpp"
#include "nsd/graph.hpp"
#include "nsd/verify.hpp"

namespace nsd {

inline nlohmann::json coloring_to_json(const EdgeColoring& c) {
  return nlohmann::json{{"k", c.k()}, {"colors", c.colors()}};
}

/// Accepts {"k": k, "colors": [...]} or a bare color array (k is then the
/// largest color). Colors are aligned with the sorted edge list of g.
inline EdgeColoring coloring_from_json(const nlohmann::json& j, const Graph& g) {
  const nlohmann::json* arr = &j;
  int k = -1;
  if (j.is_object()) {
    if (!j.contains("colors")) throw InputError("coloring object has no \"colors\" field");
    arr = &j.at("colors");
    if (j.contains("k")) {
      if (!j.at("k").is_number_integer()) throw InputError("\"k\" must be an integer");
      k = j.at("k").get<int>();
    }
  }
  if (!arr->is_array()) throw InputError("colors must be a JSON array");
  if (static_cast<int>(arr->size()) != g.size()) {
    throw InputError("coloring has " + std::to_string(arr->size()) + " colors but the graph has " +
                     std::to_string(g.size()) + " edges");
  }
  std::vector<Color> colors;
  colors.reserve(arr->size());
  for (const auto& x : *arr) {
    if (!x.is_number_integer()) throw InputError("colors must be integers");
    const auto value = x.get<long long>();
    if (value < 1) throw InputError("color " + std::to_string(value) + " is not positive");
    if (value > 1000000) throw InputError("color " + std::to_string(value) + " is too large");
    colors.push_back(static_cast<Color>(value));
  }
  int max_color = 0;
  for (Color c : colors) max_color = std::max(max_color, c);
  if (k < 0) k = max_color;
  if (max_color > k) throw InputError("color " + std::to_string(max_color) + " exceeds k = " + std::to_string(k));
  return EdgeColoring(g, k, colors);
}

inline EdgeColoring parse_coloring(std::string_view text, const Graph& g) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid coloring JSON: ") + e.what(), e.byte);
  }
  return coloring_from_json(j, g);
}

inline std::string emit_coloring(const EdgeColoring& c) { return coloring_to_json(c).dump(); }

inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : r.witnesses) {
    nlohmann::json item{{"kind", witness_kind_name(x.kind)}};
    if (x.vertex >= 0) item["vertex"] = x.vertex;
    if (x.color > 0) item["color"] = x.color;
    if (x.count > 0) item["count"] = x.count;
    if (x.edge >= 0) item["edge"] = x.edge;
    w.push_back(std::move(item));
  }
  return nlohmann::json{
      {"mode", mode_name(r.mode)},
      {"k", r.k},
      {"passed", r.passed()},
      {"nice", r.nice},
      {"quasi_majority", r.quasi_majority},
      {"majority", r.majority},
      {"nsd", r.nsd},
      {"within_palette", r.within_palette},
      {"total", r.total},
      {"sums", r.sums},
      {"witnesses", std::move(w)},
  };
}

}  // namespace nsd
