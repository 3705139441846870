#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "szw/graph.hpp"

namespace szw {

// Largest order for which the upper triangle fits in one 64-bit key.
inline constexpr int kMaxKeyedOrder = 11;

// Upper triangle in graph6 column order, first bit most significant.
inline std::uint64_t upper_triangle_key(const Graph& g) {
  if (g.order() > kMaxKeyedOrder) throw GraphError("upper_triangle_key needs n <= 11");
  std::uint64_t key = 0;
  for (int v = 1; v < g.order(); ++v)
    for (int u = 0; u < v; ++u) key = (key << 1) | (g.has_edge(u, v) ? 1u : 0u);
  return key;
}

// Stable colouring by iterated degree refinement. Colours are ranks of
// isomorphism-invariant signatures, so isomorphic graphs get matching
// colour classes.
inline std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> around;
      for (int w : g.neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, id] : rank) id = r++;
    for (int v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (r == classes) break;
    classes = r;
  }
  return colour;
}

struct CanonicalForm {
  Graph graph;
  std::vector<int> labeling;  // labeling[i] = original vertex placed at position i
};

// Lexicographically minimal upper-triangle bitstring (graph6 column order)
// over all vertex orders that list colour classes in increasing colour.
// Bits of column p depend only on the first p+1 positions, so partial
// orders are pruned as soon as their prefix exceeds the best one.
inline CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  const auto colour = refine_colours(g);

  std::vector<int> slot_colour = colour;
  std::sort(slot_colour.begin(), slot_colour.end());

  std::vector<int> best;
  std::vector<VertexSet> best_columns(n);
  std::vector<int> current(n);
  std::vector<VertexSet> columns(n);  // column p as a set of earlier positions
  VertexSet used;
  // First position where the current prefix dropped below best; n while equal.
  int less_at = n;

  auto search = [&](auto&& self, int p) -> void {
    if (p == n) {
      best = current;
      best_columns = columns;
      less_at = n;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used.contains(v) || colour[v] != slot_colour[p]) continue;
      VertexSet col;
      for (int i = 0; i < p; ++i) {
        if (g.has_edge(current[i], v)) col.insert(i);
      }
      const int saved = less_at;
      if (!best.empty() && less_at >= p) {
        const std::uint64_t diff = col.bits() ^ best_columns[p].bits();
        if (diff != 0) {
          if (col.contains(std::countr_zero(diff))) continue;
          less_at = p;
        }
      }
      current[p] = v;
      columns[p] = col;
      used.insert(v);
      self(self, p + 1);
      used.erase(v);
      if (less_at != n) less_at = saved;
    }
  };
  search(search, 0);

  return CanonicalForm{g.permuted(best), best};
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace szw
