#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "szw/connectivity.hpp"
#include "szw/distance.hpp"
#include "szw/graph.hpp"

namespace szw {

// How the vertex set splits with respect to one edge uv.
struct EdgeSplit {
  Edge edge;
  int n_u = 0;  // strictly closer to u
  int n_v = 0;  // strictly closer to v
  int n_0 = 0;  // equidistant
  bool operator==(const EdgeSplit&) const = default;
};

// Every index for one graph. The revised quantities are kept in quarter
// units (4 * Sz*, 4 * eta*) so they stay integral.
struct InvariantReport {
  int n = 0;
  int m = 0;
  std::int64_t wiener = 0;
  std::int64_t szeged = 0;
  std::int64_t szeged_star_q4 = 0;
  std::int64_t eta = 0;
  std::int64_t eta_star_q4 = 0;
  std::vector<std::int64_t> contribution;
  std::vector<std::int64_t> horizontal;
  bool operator==(const InvariantReport&) const = default;
};

namespace detail {
inline void require_connected(const DistanceMatrix& dm) {
  if (!dm.all_reachable()) throw DisconnectedGraphError();
}

inline EdgeSplit split(const Graph& g, const DistanceMatrix& dm, Edge e) {
  EdgeSplit s{e};
  for (int x = 0; x < g.order(); ++x) {
    const int du = dm(x, e.first);
    const int dv = dm(x, e.second);
    if (du < dv) {
      ++s.n_u;
    } else if (dv < du) {
      ++s.n_v;
    } else {
      ++s.n_0;
    }
  }
  return s;
}
}  // namespace detail

inline std::int64_t wiener(const Graph& g, const DistanceMatrix& dm) {
  detail::require_connected(dm);
  std::int64_t total = 0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b) total += dm(a, b);
  return total;
}

inline EdgeSplit edge_split(const Graph& g, const DistanceMatrix& dm, Edge e) {
  const auto [u, v] = e;
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v || !g.has_edge(u, v)) {
    throw GraphError("edge_split called on a non-edge");
  }
  detail::require_connected(dm);
  return detail::split(g, dm, e);
}

inline std::int64_t szeged(const Graph& g, const DistanceMatrix& dm) {
  detail::require_connected(dm);
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) {
    const auto s = detail::split(g, dm, e);
    total += std::int64_t{s.n_u} * s.n_v;
  }
  return total;
}

// 4 * Sz*(G) = sum over edges of (2 n_u + n_0)(2 n_v + n_0).
inline std::int64_t revised_szeged_q4(const Graph& g, const DistanceMatrix& dm) {
  detail::require_connected(dm);
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) {
    const auto s = detail::split(g, dm, e);
    total += std::int64_t{2 * s.n_u + s.n_0} * (2 * s.n_v + s.n_0);
  }
  assert(total >= 0);
  return total;
}

// Number of edges good for {a, b}: some orientation uv has a strictly
// closer to u and b strictly closer to v.
inline int good_count(const Graph& g, const DistanceMatrix& dm, int a, int b) {
  if (a == b) return 0;
  int count = 0;
  for (auto [u, v] : g.edges()) {
    const bool forward = dm(a, u) < dm(a, v) && dm(b, v) < dm(b, u);
    const bool backward = dm(a, v) < dm(a, u) && dm(b, u) < dm(b, v);
    if (forward || backward) ++count;
  }
  return count;
}

inline int eta_pair(const Graph& g, const DistanceMatrix& dm, int a, int b) {
  if (a == b) return 0;
  return good_count(g, dm, a, b) - dm(a, b);
}

inline std::int64_t contribution(const Graph& g, const DistanceMatrix& dm, int a) {
  detail::require_connected(dm);
  std::int64_t total = 0;
  for (int b = 0; b < g.order(); ++b) total += eta_pair(g, dm, a, b);
  return total;
}

// Edges whose endpoints are equidistant from a.
inline int horizontal_count(const Graph& g, const DistanceMatrix& dm, int a) {
  detail::require_connected(dm);
  int count = 0;
  for (auto [u, v] : g.edges()) {
    if (dm(a, u) == dm(a, v)) ++count;
  }
  return count;
}

inline std::int64_t eta(const Graph& g, const DistanceMatrix& dm) {
  return szeged(g, dm) - wiener(g, dm);
}

inline std::int64_t eta(const Graph& g) {
  require_connected(g);
  return eta(g, all_pairs_distances(g));
}

inline std::int64_t eta_star_q4(const Graph& g, const DistanceMatrix& dm) {
  return revised_szeged_q4(g, dm) - 4 * wiener(g, dm);
}

inline std::int64_t eta_star_q4(const Graph& g) {
  require_connected(g);
  return eta_star_q4(g, all_pairs_distances(g));
}

inline std::vector<std::int64_t> contributions(const Graph& g, const DistanceMatrix& dm) {
  std::vector<std::int64_t> c(g.order());
  for (int a = 0; a < g.order(); ++a) c[a] = contribution(g, dm, a);
  return c;
}

inline std::vector<std::int64_t> contributions(const Graph& g) {
  require_connected(g);
  return contributions(g, all_pairs_distances(g));
}

inline InvariantReport full_report(const Graph& g) {
  require_connected(g);
  const auto dm = all_pairs_distances(g);
  InvariantReport r;
  r.n = g.order();
  r.m = g.edge_count();
  r.wiener = wiener(g, dm);
  for (const Edge& e : g.edges()) {
    const auto s = detail::split(g, dm, e);
    r.szeged += std::int64_t{s.n_u} * s.n_v;
    r.szeged_star_q4 += std::int64_t{2 * s.n_u + s.n_0} * (2 * s.n_v + s.n_0);
  }
  r.eta = r.szeged - r.wiener;
  r.eta_star_q4 = r.szeged_star_q4 - 4 * r.wiener;
  r.contribution = contributions(g, dm);
  r.horizontal.resize(g.order());
  for (int a = 0; a < g.order(); ++a) r.horizontal[a] = horizontal_count(g, dm, a);
  return r;
}

// Sz computed edge-wise and as the sum of good-edge counts over all pairs.
inline bool verify_good_edge_identity(const Graph& g) {
  require_connected(g);
  const auto dm = all_pairs_distances(g);
  std::int64_t by_pairs = 0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b) by_pairs += good_count(g, dm, a, b);
  return by_pairs == szeged(g, dm);
}

// Sum of h(a) over vertices against the sum of n_0 over edges.
inline bool verify_horizontal_identity(const Graph& g) {
  require_connected(g);
  const auto dm = all_pairs_distances(g);
  std::int64_t by_vertices = 0;
  for (int a = 0; a < g.order(); ++a) by_vertices += horizontal_count(g, dm, a);
  std::int64_t by_edges = 0;
  for (const Edge& e : g.edges()) by_edges += detail::split(g, dm, e).n_0;
  return by_vertices == by_edges;
}

}  // namespace szw
