#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace szw {

// Largest order representable with a single-byte graph6 header.
inline constexpr int kMaxVertices = 62;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by every operation whose quantities presume a connected graph.
class DisconnectedGraphError : public GraphError {
 public:
  DisconnectedGraphError() : GraphError("graph is not connected") {}
};

// A set of vertex ids packed into one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, one adjacency word per vertex.
class Graph {
 public:
  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) {
      throw GraphError("vertex count " + std::to_string(n) + " outside 1.." +
                       std::to_string(kMaxVertices));
    }
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool has_edge(int u, int v) const { return adj_[u].contains(v); }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u].erase(v);
    adj_[v].erase(u);
  }

  VertexSet neighbors(int u) const { return adj_[u]; }
  VertexSet closed_neighbors(int u) const { return adj_[u] | VertexSet::single(u); }
  int degree(int u) const { return adj_[u].size(); }

  int edge_count() const {
    int twice = 0;
    for (int u = 0; u < n_; ++u) twice += adj_[u].size();
    return twice / 2;
  }

  // Edges as (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
      for (int v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
    }
    return out;
  }

  // Subgraph induced by `keep`, vertices renumbered in increasing id order.
  Graph induced(VertexSet keep) const {
    std::array<int, 64> index{};
    int k = 0;
    for (int v : keep) index[v] = k++;
    Graph h(k);
    for (int u : keep) {
      for (int v : adj_[u] & keep) {
        if (u < v) h.add_edge(index[u], index[v]);
      }
    }
    return h;
  }

  Graph without_vertex(int u) const { return induced(vertices() - VertexSet::single(u)); }

  // Relabel so that old vertex perm[i] becomes new vertex i.
  Graph permuted(const std::vector<int>& perm) const {
    std::array<int, 64> where{};
    for (int i = 0; i < n_; ++i) where[perm[i]] = i;
    Graph h(n_);
    for (auto [u, v] : edges()) h.add_edge(where[u], where[v]);
    return h;
  }

  bool operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int u = 0; u < n_; ++u) {
      if (adj_[u] != o.adj_[u]) return false;
    }
    return true;
  }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw GraphError("vertex id out of range");
    if (u == v) throw GraphError("loops are not allowed");
  }

  int n_;
  std::array<VertexSet, 64> adj_{};
};

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int k) {
  if (k < 3) throw GraphError("a cycle needs at least 3 vertices");
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace szw
