#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddcore/graph.hpp"

namespace oddcore {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { kGraph6, kEdgeList };

namespace detail {

inline void g6_append_n(std::string& s, int n) {
  if (n < 63) {
    s.push_back(static_cast<char>(n + 63));
  } else {
    // 126 prefix + three 6-bit groups, n <= 258047.
    s.push_back(126);
    s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    s.push_back(static_cast<char>((n & 63) + 63));
  }
}

}  // namespace detail

// graph6: n encoded as n+63 (or 126-prefixed for n >= 63), then the upper
// triangle column-major, 6 adjacency bits per printable byte offset by 63.
inline std::string format_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 258047)
    throw std::invalid_argument("graph6 output limited to n <= 258047");
  std::string out;
  detail::g6_append_n(out, n);
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw ParseError("graph6: empty input");
  std::size_t pos = 0;
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= s.size())
      throw ParseError("graph6: truncated at byte " + std::to_string(i));
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: byte " + std::to_string(i) +
                       " out of printable range");
    return c - 63;
  };
  long long n;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
      throw ParseError("graph6: n >= 258048 not supported (byte 1)");
    n = (static_cast<long long>(byte_at(1)) << 12) | (byte_at(2) << 6) |
        byte_at(3);
    pos = 4;
  } else {
    n = byte_at(0);
    pos = 1;
  }
  long long nbits = n * (n - 1) / 2;
  std::size_t need = pos + static_cast<std::size_t>((nbits + 5) / 6);
  if (s.size() != need)
    throw ParseError("graph6: expected " + std::to_string(need) +
                     " bytes, got " + std::to_string(s.size()));
  Graph g(static_cast<int>(n));
  long long bit = 0;
  int acc = 0, have = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (have == 0) {
        acc = byte_at(pos++);
        have = 6;
      }
      if ((acc >> (have - 1)) & 1) g.add_edge(i, j);
      --have;
    }
  }
  return g;
}

// Edge list: one "u v" per line, '#' comment lines ignored, optional leading
// "n=<count>" line declaring the vertex count (needed for isolated vertices).
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long declared_n = -1;
  std::vector<std::pair<long long, long long>> edges;
  long long maxv = -1;
  bool first_data = true;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    if (line[a] == '#') continue;
    if (first_data && line.compare(a, 2, "n=") == 0) {
      try {
        declared_n = std::stoll(line.substr(a + 2));
      } catch (const std::exception&) {
        throw ParseError("edge list line " + std::to_string(lineno) +
                         ": malformed n= header");
      }
      if (declared_n < 0)
        throw ParseError("edge list line " + std::to_string(lineno) +
                         ": negative vertex count");
      first_data = false;
      continue;
    }
    first_data = false;
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v))
      throw ParseError("edge list line " + std::to_string(lineno) +
                       ": expected two vertex indices");
    std::string rest;
    if (ls >> rest)
      throw ParseError("edge list line " + std::to_string(lineno) +
                       ": trailing token '" + rest + "'");
    if (u < 0 || v < 0)
      throw ParseError("edge list line " + std::to_string(lineno) +
                       ": negative vertex index");
    if (u == v)
      throw ParseError("edge list line " + std::to_string(lineno) +
                       ": self-loop at vertex " + std::to_string(u));
    if (declared_n >= 0 && (u >= declared_n || v >= declared_n))
      throw ParseError("edge list line " + std::to_string(lineno) +
                       ": vertex index >= declared n");
    edges.emplace_back(u, v);
    maxv = std::max({maxv, u, v});
  }
  long long n = declared_n >= 0 ? declared_n : maxv + 1;
  Graph g(static_cast<int>(n));
  int i = 0;
  for (auto [u, v] : edges) {
    ++i;
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("edge list: duplicate edge " + std::to_string(u) + " " +
                       std::to_string(v));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

inline Graph parse_graph(const std::string& text, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? parse_graph6(text)
                                        : parse_edge_list(text);
}

inline std::string format_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? format_graph6(g)
                                        : format_edge_list(g);
}

}  // namespace oddcore
