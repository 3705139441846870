#pragma once

#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "szw/connectivity.hpp"
#include "szw/graph.hpp"

namespace szw {

namespace family {
struct Complete {
  int n;
  bool operator==(const Complete&) const = default;
};
struct Cycle {
  int k;
  bool operator==(const Cycle&) const = default;
};
// K_{n-1} plus one vertex joined to t of its vertices.
struct Knt {
  int n;
  int t;
  bool operator==(const Knt&) const = default;
};
// C_k with a path of sizes[i] vertices (root included) hanging off cycle vertex i.
struct CycleWithTrees {
  int k;
  std::vector<int> sizes;
  bool operator==(const CycleWithTrees&) const = default;
};
}  // namespace family

using FamilySpec = std::variant<family::Complete, family::Cycle, family::Knt, family::CycleWithTrees>;

// A rooted tree given by parent pointers; vertex 0 is the root and parent[0] is ignored.
struct RootedTree {
  std::vector<int> parent;
  int size() const { return static_cast<int>(parent.size()); }
};

inline RootedTree rooted_path(int size) {
  RootedTree t{std::vector<int>(size)};
  for (int i = 1; i < size; ++i) t.parent[i] = i - 1;
  if (size > 0) t.parent[0] = -1;
  return t;
}

namespace detail {
[[noreturn]] inline void bad_spec(const std::string& why) { throw GraphError("invalid family spec: " + why); }

inline void validate(const FamilySpec& spec) {
  struct V {
    void operator()(const family::Complete& s) const {
      if (s.n < 1 || s.n > kMaxVertices) bad_spec("complete:n needs 1 <= n <= 62");
    }
    void operator()(const family::Cycle& s) const {
      if (s.k < 3 || s.k > kMaxVertices) bad_spec("cycle:k needs 3 <= k <= 62");
    }
    void operator()(const family::Knt& s) const {
      if (s.n < 2 || s.n > kMaxVertices) bad_spec("knt:n,t needs 2 <= n <= 62");
      if (s.t < 1 || s.t > s.n - 1) bad_spec("knt:n,t needs 1 <= t <= n-1");
    }
    void operator()(const family::CycleWithTrees& s) const {
      if (s.k < 3) bad_spec("ctrees needs a cycle of length >= 3");
      if (static_cast<int>(s.sizes.size()) != s.k) bad_spec("ctrees needs exactly k tree sizes");
      long total = 0;
      for (int x : s.sizes) {
        if (x < 1) bad_spec("ctrees tree sizes must be positive");
        total += x;
      }
      if (total > kMaxVertices) bad_spec("ctrees total order exceeds 62");
    }
  };
  std::visit(V{}, spec);
}

inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
      bad_spec("expected an integer, got '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) bad_spec("trailing comma");
  }
  return out;
}
}  // namespace detail

// Textual forms: "complete:n", "cycle:k", "knt:n,t", "ctrees:k:s1,...,sk".
inline FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) detail::bad_spec("missing ':' in '" + std::string(text) + "'");
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  FamilySpec spec;
  if (kind == "complete") {
    const auto v = detail::parse_int_list(rest);
    if (v.size() != 1) detail::bad_spec("complete takes one parameter");
    spec = family::Complete{v[0]};
  } else if (kind == "cycle") {
    const auto v = detail::parse_int_list(rest);
    if (v.size() != 1) detail::bad_spec("cycle takes one parameter");
    spec = family::Cycle{v[0]};
  } else if (kind == "knt") {
    const auto v = detail::parse_int_list(rest);
    if (v.size() != 2) detail::bad_spec("knt takes two parameters");
    spec = family::Knt{v[0], v[1]};
  } else if (kind == "ctrees") {
    const auto second = rest.find(':');
    if (second == std::string_view::npos) detail::bad_spec("ctrees needs k:s1,...,sk");
    const auto k = detail::parse_int_list(rest.substr(0, second));
    if (k.size() != 1) detail::bad_spec("ctrees cycle length must be one integer");
    spec = family::CycleWithTrees{k[0], detail::parse_int_list(rest.substr(second + 1))};
  } else {
    detail::bad_spec("unknown family '" + std::string(kind) + "'");
  }
  detail::validate(spec);
  return spec;
}

inline std::string to_string(const FamilySpec& spec) {
  struct V {
    std::string operator()(const family::Complete& s) const { return "complete:" + std::to_string(s.n); }
    std::string operator()(const family::Cycle& s) const { return "cycle:" + std::to_string(s.k); }
    std::string operator()(const family::Knt& s) const {
      return "knt:" + std::to_string(s.n) + "," + std::to_string(s.t);
    }
    std::string operator()(const family::CycleWithTrees& s) const {
      std::string out = "ctrees:" + std::to_string(s.k) + ":";
      for (std::size_t i = 0; i < s.sizes.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.sizes[i]);
      }
      return out;
    }
  };
  return std::visit(V{}, spec);
}

// C_k with trees[i] rooted at cycle vertex i. Cycle vertices come first
// (0..k-1), then each tree's non-root vertices in tree order.
inline Graph cycle_with_rooted_trees(int k, std::span<const RootedTree> trees) {
  if (k < 3) throw GraphError("cycle length must be at least 3");
  if (static_cast<int>(trees.size()) != k) throw GraphError("need one rooted tree per cycle vertex");
  int n = k;
  for (const auto& t : trees) {
    if (t.size() < 1) throw GraphError("rooted trees must contain their root");
    n += t.size() - 1;
  }
  Graph g(n);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  int next = k;
  for (int i = 0; i < k; ++i) {
    const auto& t = trees[i];
    std::vector<int> id(t.size());
    id[0] = i;
    for (int j = 1; j < t.size(); ++j) id[j] = next++;
    for (int j = 1; j < t.size(); ++j) {
      const int p = t.parent[j];
      if (p < 0 || p >= j) throw GraphError("tree parents must precede their children");
      g.add_edge(id[p], id[j]);
    }
  }
  return g;
}

inline Graph build(const FamilySpec& spec) {
  detail::validate(spec);
  struct V {
    Graph operator()(const family::Complete& s) const { return complete_graph(s.n); }
    Graph operator()(const family::Cycle& s) const { return cycle_graph(s.k); }
    Graph operator()(const family::Knt& s) const {
      Graph g(s.n);
      for (int u = 0; u + 1 < s.n; ++u)
        for (int v = u + 1; v + 1 < s.n; ++v) g.add_edge(u, v);
      for (int i = 0; i < s.t; ++i) g.add_edge(s.n - 1, i);
      return g;
    }
    Graph operator()(const family::CycleWithTrees& s) const {
      std::vector<RootedTree> trees;
      for (int size : s.sizes) trees.push_back(rooted_path(size));
      return cycle_with_rooted_trees(s.k, trees);
    }
  };
  return std::visit(V{}, spec);
}

// eta(K_n^2) = eta(K_n^{n-2}) = 2n - 6; no closed form is claimed for other t.
inline std::int64_t eta_knt_special(int n, int t) {
  if (n < 4) throw GraphError("eta_knt_special needs n >= 4");
  if (t != 2 && t != n - 2) throw GraphError("closed form only known for t = 2 or t = n-2");
  return 2 * std::int64_t{n} - 6;
}

namespace detail {
inline void require_sizes(std::span<const int> t, std::size_t count) {
  if (t.size() != count) throw GraphError("wrong number of tree sizes");
  for (int x : t)
    if (x < 1) throw GraphError("tree sizes must be positive");
}
}  // namespace detail

// C5 with trees of sizes t[0..4]: only pairs rooted at distance-2 cycle
// vertices contribute, one unit each.
inline std::int64_t eta_c5_trees(std::span<const int> t) {
  detail::require_sizes(t, 5);
  std::int64_t total = 0;
  for (int i = 0; i < 5; ++i) total += std::int64_t{t[i]} * t[(i + 2) % 5];
  return total;
}

// C4 with trees: adjacent roots contribute 1 per pair, opposite roots 2.
inline std::int64_t eta_c4_trees(std::span<const int> t) {
  detail::require_sizes(t, 4);
  const std::int64_t n = std::accumulate(t.begin(), t.end(), std::int64_t{0});
  const std::int64_t ac = t[0] - t[2];
  const std::int64_t bd = t[1] - t[3];
  return (n * n - ac * ac - bd * bd) / 2;
}

// 4 * eta* for C3 with trees; equals (5 n^2 - sum of squared pairwise differences) / 3.
inline std::int64_t eta_star_c3_trees_q4(std::span<const int> t) {
  detail::require_sizes(t, 3);
  const std::int64_t n = std::int64_t{t[0]} + t[1] + t[2];
  std::int64_t spread = 0;
  for (int i = 0; i < 3; ++i) {
    const std::int64_t d = t[i] - t[(i + 1) % 3];
    spread += d * d;
  }
  return (5 * n * n - spread) / 3;
}

struct KntMatch {
  int n;
  int t;
  bool operator==(const KntMatch&) const = default;
};

// Recognises K_n^t with 1 <= t <= n-2: some vertex of degree t whose
// removal leaves a clique. Complete graphs are never reported here.
inline std::optional<KntMatch> detect_knt(const Graph& g) {
  const int n = g.order();
  if (n < 3 || is_complete(g)) return std::nullopt;
  const VertexSet all = g.vertices();
  for (int w = 0; w < n; ++w) {
    const VertexSet rest = all - VertexSet::single(w);
    bool clique = true;
    for (int u : rest) {
      if (!(rest - VertexSet::single(u)).is_subset_of(g.neighbors(u))) {
        clique = false;
        break;
      }
    }
    const int t = g.degree(w);
    if (clique && t >= 1 && t <= n - 2) return KntMatch{n, t};
  }
  return std::nullopt;
}

inline bool induces_clique(const Graph& g, VertexSet s) {
  for (int u : s) {
    if (!(s - VertexSet::single(u)).is_subset_of(g.neighbors(u))) return false;
  }
  return true;
}

// Every block is a clique.
inline bool is_block_graph(const Graph& g) {
  require_connected(g);
  for (VertexSet b : blocks(g).blocks) {
    if (!induces_clique(g, b)) return false;
  }
  return true;
}

}  // namespace szw
