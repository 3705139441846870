#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "szw/distance.hpp"
#include "szw/graph.hpp"

namespace szw {

inline VertexSet component_of(const Graph& g, int source) {
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
    seen |= frontier;
  }
  return seen;
}

inline bool is_connected(const Graph& g) { return component_of(g, 0) == g.vertices(); }

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError();
}

inline bool is_complete(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) != g.order() - 1) return false;
  }
  return true;
}

inline bool is_bipartite(const Graph& g) {
  std::array<int, 64> side;
  side.fill(-1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Length of a shortest cycle; std::nullopt stands for infinite girth (forests).
inline std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  std::array<int, 64> depth;
  std::array<int, 64> parent;
  for (int s = 0; s < g.order(); ++s) {
    depth.fill(-1);
    depth[s] = 0;
    parent[s] = -1;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      if (best && 2 * depth[u] >= *best) break;
      for (int v : g.neighbors(u)) {
        if (depth[v] == -1) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u]) {
          const int len = depth[u] + depth[v] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // sorted by bit pattern
  VertexSet cut_vertices;
};

// Blocks by an explicit-stack lowpoint DFS; the input must be connected.
inline BlockDecomposition blocks(const Graph& g) {
  const int n = g.order();
  BlockDecomposition out;
  if (n == 1) {
    out.blocks.push_back(VertexSet::single(0));
    return out;
  }

  struct Frame {
    int v;
    int parent;
    VertexSet pending;
  };
  std::array<int, 64> disc;
  std::array<int, 64> low;
  disc.fill(-1);
  low.fill(-1);
  std::vector<Frame> frames;
  std::vector<Edge> edge_stack;
  int clock = 0;
  int root_children = 0;

  disc[0] = low[0] = clock++;
  frames.push_back({0, -1, g.neighbors(0)});
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (!f.pending.empty()) {
      const int w = f.pending.first();
      f.pending.erase(w);
      if (disc[w] == -1) {
        edge_stack.emplace_back(f.v, w);
        disc[w] = low[w] = clock++;
        frames.push_back({w, f.v, g.neighbors(w)});
      } else if (w != f.parent && disc[w] < disc[f.v]) {
        edge_stack.emplace_back(f.v, w);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    const int v = f.v;
    const int p = f.parent;
    frames.pop_back();
    if (p < 0) continue;
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      VertexSet block;
      while (true) {
        const Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.insert(e.first);
        block.insert(e.second);
        if (e.first == p && e.second == v) break;
      }
      out.blocks.push_back(block);
      if (p == 0) {
        ++root_children;
      } else {
        out.cut_vertices.insert(p);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (disc[v] == -1) throw DisconnectedGraphError();
  }
  if (root_children > 1) out.cut_vertices.insert(0);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

inline bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return blocks(g).cut_vertices.empty();
}

}  // namespace szw
