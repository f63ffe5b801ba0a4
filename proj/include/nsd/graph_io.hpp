#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsd/errors.hpp"
#include "nsd/graph.hpp"

namespace nsd {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Decodes a graph6 string. An optional ">>graph6<<" header and surrounding
/// whitespace are accepted.
inline Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  while (base < text.size() && std::isspace(static_cast<unsigned char>(text[base]))) ++base;
  std::string_view s = detail::trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) {
    s.remove_prefix(header.size());
    base += header.size();
  }
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) throw ParseError("graph6 string is truncated", base + pos);
    const int c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", base + pos);
    ++pos;
    return c - 63;
  };
  if (s.empty()) throw ParseError("empty graph6 string", base);
  std::int64_t n = 0;
  if (static_cast<unsigned char>(s[0]) != 126) {
    n = next();
  } else {
    ++pos;
    int words = 3;
    if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126) {
      ++pos;
      words = 6;
    }
    for (int i = 0; i < words; ++i) n = (n << 6) | next();
  }
  if (n > (1 << 20)) throw ParseError("graph6 vertex count too large", base);
  std::vector<std::pair<int, int>> edges;
  std::int64_t bit = 0;
  int word = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) word = next();
      if ((word >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (pos != s.size()) throw ParseError("trailing bytes after graph6 data", base + pos);
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string emit_graph6(const Graph& g) {
  std::string out;
  const std::int64_t n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int word = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

/// Parses "n m" followed by m lines "u v". Blank lines and '#' comments are ignored.
inline Graph parse_edgelist(std::string_view text) {
  std::vector<long long> nums;
  std::vector<std::size_t> offsets;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i) throw ParseError("expected an integer", i);
    offsets.push_back(i);
    nums.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
      throw ParseError("unexpected character after integer", i);
    }
  }
  if (nums.size() < 2) throw ParseError("missing \"n m\" header", text.size());
  const long long n = nums[0];
  const long long m = nums[1];
  if (n < 0 || m < 0 || n > (1 << 24)) throw ParseError("invalid header values", offsets[0]);
  if (static_cast<long long>(nums.size()) != 2 + 2 * m) {
    throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string((nums.size() - 2) / 2) +
                         (nums.size() % 2 ? " and a dangling endpoint" : ""),
                     text.size());
  }
  std::vector<std::pair<int, int>> edges;
  for (long long e = 0; e < m; ++e) {
    const auto a = nums[static_cast<std::size_t>(2 + 2 * e)];
    const auto b = nums[static_cast<std::size_t>(3 + 2 * e)];
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError("endpoint out of range", offsets[static_cast<std::size_t>(2 + 2 * e)]);
    }
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string emit_edgelist(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

enum class GraphFormat { Graph6, EdgeList };

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edgelist(text);
}

inline std::string emit_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? emit_graph6(g) + "\n" : emit_edgelist(g);
}

}  // namespace nsd
