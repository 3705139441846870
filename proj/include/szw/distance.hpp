#pragma once

#include <cstdint>
#include <vector>

#include "szw/graph.hpp"

namespace szw {

// All-pairs hop distances. Unreachable pairs are flagged, never given a
// numeric stand-in.
class DistanceMatrix {
 public:
  static constexpr std::uint8_t kUnreachable = 0xFF;

  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const { return n_; }
  int operator()(int a, int b) const { return d_[index(a, b)]; }
  bool reachable(int a, int b) const { return d_[index(a, b)] != kUnreachable; }

  bool all_reachable() const {
    for (auto x : d_)
      if (x == kUnreachable) return false;
    return true;
  }

  void set(int a, int b, int dist) { d_[index(a, b)] = static_cast<std::uint8_t>(dist); }

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

  int n_;
  std::vector<std::uint8_t> d_;
};

// Level sets of a breadth-first search from `source`: levels[i] = N_i(source).
inline std::vector<VertexSet> bfs_levels(const Graph& g, int source) {
  std::vector<VertexSet> levels;
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    levels.push_back(frontier);
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
    seen |= frontier;
  }
  return levels;
}

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dm(g.order());
  for (int s = 0; s < g.order(); ++s) {
    const auto levels = bfs_levels(g, s);
    for (int i = 0; i < static_cast<int>(levels.size()); ++i) {
      for (int v : levels[i]) dm.set(s, v, i);
    }
  }
  return dm;
}

}  // namespace szw
