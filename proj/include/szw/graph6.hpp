#pragma once

#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>

#include "szw/graph.hpp"

namespace szw {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {
inline std::size_t graph6_body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}
}  // namespace detail

// Decodes one graph6 record. A single trailing '\n' or "\r\n" is tolerated.
// Bits are taken column by column over the upper triangle:
// (0,1), (0,2), (1,2), (0,3), ... packed big-endian in 6-bit groups.
inline Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError("empty graph6 record", 0);

  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside 63..126", i);
  }
  const int header = static_cast<unsigned char>(line[0]);
  if (header == 126) throw ParseError("extended graph6 header (n > 62) is not supported", 0);
  const int n = header - 63;
  if (n < 1) throw ParseError("graph6 order must be at least 1", 0);

  const std::string_view body = line.substr(1);
  const std::size_t expected = detail::graph6_body_length(n);
  if (body.size() < expected) throw ParseError("graph6 body too short", line.size());
  if (body.size() > expected) throw ParseError("graph6 body too long", 1 + expected);

  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int group = static_cast<unsigned char>(body[k / 6]) - 63;
      if ((group >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxVertices) throw GraphError("graph6 encoding supports n <= 62");
  std::string out(1 + detail::graph6_body_length(n), '\0');
  out[0] = static_cast<char>(n + 63);
  std::size_t k = 0;
  int group = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (k % 6 == 5) {
        out[1 + k / 6] = static_cast<char>(group + 63);
        group = 0;
      }
    }
  }
  if (k % 6 != 0) out[1 + k / 6] = static_cast<char>((group << (6 - k % 6)) + 63);
  return out;
}

// "n m" on the first line, followed by m lines "u v". Duplicate edges collapse.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;

  auto read_pair = [&](long& a, long& b) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream ls(line);
      std::string extra;
      if (!(ls >> a >> b) || (ls >> extra)) {
        throw ParseError("malformed edge-list line " + std::to_string(line_no), 0);
      }
      return true;
    }
    return false;
  };

  long n = 0, m = 0;
  if (!read_pair(n, m)) throw ParseError("missing edge-list header", 0);
  if (n < 1 || n > kMaxVertices) throw ParseError("edge-list vertex count out of range", 0);
  if (m < 0) throw ParseError("negative edge count", 0);

  Graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    long u = 0, v = 0;
    if (!read_pair(u, v)) throw ParseError("edge list ended after " + std::to_string(i) + " edges", 0);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("vertex id out of range on line " + std::to_string(line_no), 0);
    }
    if (u == v) throw ParseError("loop on line " + std::to_string(line_no), 0);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  long a = 0, b = 0;
  if (read_pair(a, b)) throw ParseError("more edge lines than declared", 0);
  return g;
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace szw
