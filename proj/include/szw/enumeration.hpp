#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "szw/canonical.hpp"
#include "szw/connectivity.hpp"
#include "szw/graph.hpp"
#include "szw/graph6.hpp"

namespace szw {

inline constexpr int kMaxBuiltinOrder = 8;

// Conjunction of hypothesis clauses.
struct GraphFilter {
  bool connected = false;
  bool two_connected = false;
  bool bipartite = false;
  bool non_complete = false;
  std::optional<int> min_girth;

  bool accepts(const Graph& g) const {
    if (connected && !is_connected(g)) return false;
    if (two_connected && !is_two_connected(g)) return false;
    if (bipartite && !is_bipartite(g)) return false;
    if (non_complete && is_complete(g)) return false;
    if (min_girth) {
      const auto len = girth(g);
      if (len && *len < *min_girth) return false;
    }
    return true;
  }

  bool operator==(const GraphFilter&) const = default;
};

// Comma-separated clauses: connected, 2connected, bipartite, noncomplete, girth:K.
inline GraphFilter parse_filter(std::string_view text) {
  GraphFilter f;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string item(text.substr(0, comma));
    if (item == "connected") {
      f.connected = true;
    } else if (item == "2connected" || item == "two_connected" || item == "biconnected") {
      f.two_connected = true;
    } else if (item == "bipartite") {
      f.bipartite = true;
    } else if (item == "noncomplete" || item == "non_complete") {
      f.non_complete = true;
    } else if (item.starts_with("girth:") || item.starts_with("girth>=")) {
      const auto digits = item.substr(item.find_first_of(":=") + 1);
      try {
        std::size_t used = 0;
        const int k = std::stoi(digits, &used);
        if (used != digits.size() || k < 3) throw std::invalid_argument("girth");
        f.min_girth = k;
      } catch (const std::exception&) {
        throw GraphError("bad girth clause '" + item + "'");
      }
    } else if (!item.empty()) {
      throw GraphError("unknown filter clause '" + item + "'");
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return f;
}

inline std::string to_string(const GraphFilter& f) {
  std::string out;
  auto add = [&](const std::string& s) { out += (out.empty() ? "" : ",") + s; };
  if (f.connected) add("connected");
  if (f.two_connected) add("2connected");
  if (f.bipartite) add("bipartite");
  if (f.non_complete) add("noncomplete");
  if (f.min_girth) add("girth:" + std::to_string(*f.min_girth));
  return out;
}

inline Graph graph_from_key(int n, std::uint64_t key) {
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      --bit;
      if ((key >> bit) & 1u) g.add_edge(u, v);
    }
  return g;
}

namespace detail {
// Canonical keys of every graph on n vertices, ascending. Each class on n
// vertices arises from a class on n-1 vertices by adding one vertex.
inline const std::vector<std::uint64_t>& all_canonical_keys(int n) {
  static std::recursive_mutex lock;
  static std::map<int, std::vector<std::uint64_t>> cache;
  std::lock_guard guard(lock);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<std::uint64_t> keys;
  if (n == 1) {
    keys.push_back(0);
  } else {
    const auto& smaller = all_canonical_keys(n - 1);
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t k : smaller) {
      const Graph base = graph_from_key(n - 1, k);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        Graph g(n);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int u : VertexSet(mask)) g.add_edge(u, n - 1);
        seen.insert(upper_triangle_key(canonical_form(g).graph));
      }
    }
    keys.assign(seen.begin(), seen.end());
    std::sort(keys.begin(), keys.end());
  }
  return cache.emplace(n, std::move(keys)).first->second;
}
}  // namespace detail

// One canonically labelled representative per isomorphism class on n
// vertices that passes the filter, ordered by canonical key.
inline std::vector<Graph> builtin_enumerate(int n, const GraphFilter& filter = {}) {
  if (n < 1 || n > kMaxBuiltinOrder) {
    throw GraphError("builtin enumeration supports 1 <= n <= " + std::to_string(kMaxBuiltinOrder));
  }
  std::vector<Graph> out;
  for (std::uint64_t key : detail::all_canonical_keys(n)) {
    Graph g = graph_from_key(n, key);
    if (filter.accepts(g)) out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph streams

struct StreamItem {
  Graph graph{1};
  std::string graph6;
  std::uint64_t ordinal = 0;  // 1-based position (line number for text streams)
};

class GraphSource {
 public:
  virtual ~GraphSource() = default;
  // Fills `item` and returns true, or returns false at end of stream.
  virtual bool next(StreamItem& item) = 0;
  virtual std::uint64_t skipped() const { return 0; }
};

class VectorSource : public GraphSource {
 public:
  explicit VectorSource(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}
  bool next(StreamItem& item) override {
    if (pos_ >= graphs_.size()) return false;
    item.graph = graphs_[pos_];
    item.graph6 = encode_graph6(item.graph);
    item.ordinal = ++pos_;
    return true;
  }

 private:
  std::vector<Graph> graphs_;
  std::size_t pos_ = 0;
};

class StreamError : public std::runtime_error {
 public:
  StreamError(const std::string& what, std::uint64_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

// Lazily decodes one graph6 record per line. Blank lines are ignored.
// Strict mode raises StreamError on the first malformed line; lenient mode
// counts and skips it.
class Graph6LineSource : public GraphSource {
 public:
  explicit Graph6LineSource(std::istream& in, bool lenient = false) : in_(in), lenient_(lenient) {}

  bool next(StreamItem& item) override {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        item.graph = parse_graph6(line);
      } catch (const std::exception& e) {
        if (lenient_) {
          ++skipped_;
          continue;
        }
        throw StreamError(e.what(), line_);
      }
      item.graph6 = line.starts_with(">>graph6<<") ? line.substr(10) : line;
      item.ordinal = line_;
      return true;
    }
    return false;
  }

  std::uint64_t skipped() const override { return skipped_; }

 private:
  std::istream& in_;
  bool lenient_;
  std::uint64_t line_ = 0;
  std::uint64_t skipped_ = 0;
};

inline std::vector<Graph> read_all(GraphSource& source) {
  std::vector<Graph> out;
  StreamItem item;
  while (source.next(item)) out.push_back(item.graph);
  return out;
}

}  // namespace szw
