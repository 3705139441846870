#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "szw/connectivity.hpp"
#include "szw/families.hpp"
#include "szw/graph.hpp"
#include "szw/invariants.hpp"

namespace szw {

enum class CheckId {
  eq1,
  horiz,
  main1,
  main3,
  corollary_blocks,
  conjecture4,
  conjecture4_relaxed,
  dg_zero,
  forbidden_values,
  bip_contrib,
  bip_bound,
  girth_bound,
  girth5_bound,
  revised_lemma,
  revised_floor,
  revised_equality,
  induction_lemma,
  blockdecomp_lemma,
  five_bound,
};

inline constexpr std::array kAllChecks = {
    CheckId::eq1,           CheckId::horiz,           CheckId::main1,
    CheckId::main3,         CheckId::corollary_blocks, CheckId::conjecture4,
    CheckId::conjecture4_relaxed, CheckId::dg_zero,   CheckId::forbidden_values,
    CheckId::bip_contrib,   CheckId::bip_bound,       CheckId::girth_bound,
    CheckId::girth5_bound,  CheckId::revised_lemma,   CheckId::revised_floor,
    CheckId::revised_equality, CheckId::induction_lemma, CheckId::blockdecomp_lemma,
    CheckId::five_bound,
};

inline std::string_view check_name(CheckId id) {
  switch (id) {
    case CheckId::eq1: return "eq1";
    case CheckId::horiz: return "horiz";
    case CheckId::main1: return "main1";
    case CheckId::main3: return "main3";
    case CheckId::corollary_blocks: return "corollary_blocks";
    case CheckId::conjecture4: return "conjecture4";
    case CheckId::conjecture4_relaxed: return "conjecture4_relaxed";
    case CheckId::dg_zero: return "dg_zero";
    case CheckId::forbidden_values: return "forbidden_values";
    case CheckId::bip_contrib: return "bip_contrib";
    case CheckId::bip_bound: return "bip_bound";
    case CheckId::girth_bound: return "girth_bound";
    case CheckId::girth5_bound: return "girth5_bound";
    case CheckId::revised_lemma: return "revised_lemma";
    case CheckId::revised_floor: return "revised_floor";
    case CheckId::revised_equality: return "revised_equality";
    case CheckId::induction_lemma: return "induction_lemma";
    case CheckId::blockdecomp_lemma: return "blockdecomp_lemma";
    case CheckId::five_bound: return "five_bound";
  }
  return "?";
}

inline std::optional<CheckId> parse_check_id(std::string_view name) {
  if (name == "conjecture4-relaxed") return CheckId::conjecture4_relaxed;
  for (CheckId id : kAllChecks) {
    if (check_name(id) == name) return id;
  }
  return std::nullopt;
}

enum class CheckStatus { pass, fail, not_applicable };

inline std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

struct Observation {
  std::string name;
  std::int64_t value = 0;
  bool operator==(const Observation&) const = default;
};

// Result of one check on one graph. The first observation is the check's
// headline quantity; a failure always carries enough values to redo the
// comparison by hand.
struct CheckOutcome {
  CheckStatus status = CheckStatus::pass;
  std::vector<Observation> observed;
  std::vector<std::string> trace;

  std::optional<std::int64_t> value(std::string_view name) const {
    for (const auto& o : observed)
      if (o.name == name) return o.value;
    return std::nullopt;
  }
  bool operator==(const CheckOutcome&) const = default;
};

namespace detail {

// Facts about a connected graph shared by several checks.
class Facts {
 public:
  explicit Facts(const Graph& g) : g_(g), dm_(all_pairs_distances(g)) {
    if (!dm_.all_reachable()) throw DisconnectedGraphError();
  }

  const Graph& graph() const { return g_; }
  const DistanceMatrix& distances() const { return dm_; }
  int n() const { return g_.order(); }

  std::int64_t eta() {
    if (!eta_) eta_ = szw::eta(g_, dm_);
    return *eta_;
  }
  const BlockDecomposition& block_decomposition() {
    if (!blocks_) blocks_ = blocks(g_);
    return *blocks_;
  }
  const std::vector<std::int64_t>& contribution() {
    if (!c_) c_ = contributions(g_, dm_);
    return *c_;
  }
  bool two_connected() {
    if (!two_connected_) two_connected_ = n() >= 3 && block_decomposition().cut_vertices.empty();
    return *two_connected_;
  }
  bool complete() { return is_complete(g_); }
  bool bipartite() {
    if (!bipartite_) bipartite_ = is_bipartite(g_);
    return *bipartite_;
  }

 private:
  const Graph& g_;
  DistanceMatrix dm_;
  std::optional<std::int64_t> eta_;
  std::optional<BlockDecomposition> blocks_;
  std::optional<std::vector<std::int64_t>> c_;
  std::optional<bool> two_connected_;
  std::optional<bool> bipartite_;
};

struct BlockShape {
  int order = 0;
  int edges = 0;
  bool two_connected = false;
  bool complete = false;
  bool bipartite = false;
  bool triangle_free = false;
  bool is_cycle(int k) const { return two_connected && order == k && edges == k; }
};

inline BlockShape shape_of(const Graph& g, VertexSet block) {
  const Graph h = g.induced(block);
  BlockShape s;
  s.order = h.order();
  s.edges = h.edge_count();
  s.two_connected = s.order >= 3;
  s.complete = is_complete(h);
  s.bipartite = is_bipartite(h);
  const auto len = girth(h);
  s.triangle_free = !len || *len >= 4;
  return s;
}

inline std::string clause(std::string_view name, bool holds) {
  return std::string(name) + (holds ? ": yes" : ": no");
}

class Builder {
 public:
  Builder& see(std::string name, std::int64_t v) {
    out_.observed.push_back({std::move(name), v});
    return *this;
  }
  // Records a hypothesis clause; returns whether it holds.
  bool require(std::string_view name, bool holds) {
    out_.trace.push_back(clause(name, holds));
    return holds;
  }
  void note(std::string text) { out_.trace.push_back(std::move(text)); }
  CheckOutcome verdict(bool ok) {
    out_.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return std::move(out_);
  }
  CheckOutcome not_applicable() {
    out_.status = CheckStatus::not_applicable;
    return std::move(out_);
  }

 private:
  CheckOutcome out_;
};

inline bool dominated_pair_exists_for(const Graph& g, int u) {
  for (int v = 0; v < g.order(); ++v) {
    if (v != u && g.closed_neighbors(u).is_subset_of(g.closed_neighbors(v))) return true;
  }
  return false;
}

// Unicyclic graph (m = n, connected) whose only cycle has length k; returns
// the cycle's vertex set.
inline std::optional<VertexSet> unicyclic_cycle(Facts& f, int k) {
  if (f.graph().edge_count() != f.n()) return std::nullopt;
  for (VertexSet b : f.block_decomposition().blocks) {
    if (b.size() >= 3) return b.size() == k ? std::optional<VertexSet>(b) : std::nullopt;
  }
  return std::nullopt;
}

// Cycle vertices that root a tree with more than one vertex.
inline VertexSet tree_roots(const Graph& g, VertexSet cycle) {
  VertexSet roots;
  for (int v : cycle)
    if (g.degree(v) > 2) roots.insert(v);
  return roots;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual checks. Each takes the hypothesis apart clause by clause and
// returns not_applicable when a clause fails.

inline CheckOutcome check_eq1(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  std::int64_t by_pairs = 0;
  for (int a = 0; a < f.n(); ++a)
    for (int c = a + 1; c < f.n(); ++c) by_pairs += good_count(g, f.distances(), a, c);
  const std::int64_t sz = szeged(g, f.distances());
  b.see("szeged", sz).see("good_pair_sum", by_pairs);
  return b.verdict(sz == by_pairs);
}

inline CheckOutcome check_horiz(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  std::int64_t by_vertices = 0;
  for (int a = 0; a < f.n(); ++a) by_vertices += horizontal_count(g, f.distances(), a);
  std::int64_t by_edges = 0;
  for (const Edge& e : g.edges()) by_edges += edge_split(g, f.distances(), e).n_0;
  b.see("horizontal_sum", by_vertices).see("equidistant_sum", by_edges);
  return b.verdict(by_vertices == by_edges);
}

inline CheckOutcome check_main1(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  b.see("eta", f.eta()).see("bound", 2 * f.n() - 6).see("n", f.n());
  if (!b.require("two_connected", f.two_connected())) return b.not_applicable();
  if (!b.require("non_complete", !f.complete())) return b.not_applicable();
  return b.verdict(f.eta() >= 2 * f.n() - 6);
}

inline CheckOutcome check_main3(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  const int n = f.n();
  b.see("eta", f.eta()).see("bound", 2 * n - 5).see("n", n);
  if (!b.require("two_connected", f.two_connected())) return b.not_applicable();
  if (!b.require("non_complete", !f.complete())) return b.not_applicable();
  const auto knt = detect_knt(g);
  const bool exceptional = knt && (knt->t == 2 || knt->t == n - 2);
  if (!b.require("not_K_n^2_or_K_n^(n-2)", !exceptional)) {
    b.note("exception K_" + std::to_string(n) + "^" + std::to_string(knt->t) +
           ": asserting eta = 2n-6");
    if (f.eta() != 2 * n - 6) return b.verdict(false);
    return b.not_applicable();
  }
  return b.verdict(f.eta() >= 2 * n - 5);
}

inline CheckOutcome check_corollary_blocks(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  std::int64_t bound = 0;
  int non_complete_blocks = 0;
  for (VertexSet blk : f.block_decomposition().blocks) {
    if (!induces_clique(g, blk)) {
      bound += 2 * blk.size() - 6;
      ++non_complete_blocks;
    }
  }
  b.see("eta", f.eta()).see("bound", bound).see("non_complete_blocks", non_complete_blocks);
  return b.verdict(f.eta() >= bound);
}

inline CheckOutcome check_conjecture4(const Graph& g, bool relaxed = false) {
  detail::Facts f(g);
  detail::Builder b;
  const int n = f.n();
  b.see("eta", f.eta()).see("bound", 2 * n).see("n", n);
  if (!b.require("two_connected", f.two_connected())) return b.not_applicable();
  if (!relaxed && !b.require("order_at_least_10", n >= 10)) return b.not_applicable();
  if (!b.require("non_complete", !f.complete())) return b.not_applicable();
  const auto knt = detect_knt(g);
  const bool exceptional = knt && (knt->t == 2 || knt->t == n - 2);
  if (!b.require("not_K_n^2_or_K_n^(n-2)", !exceptional)) return b.not_applicable();
  return b.verdict(f.eta() >= 2 * n);
}

inline CheckOutcome check_dg_zero(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  const bool block_graph = is_block_graph(g);
  b.see("eta", f.eta()).see("block_graph", block_graph ? 1 : 0);
  return b.verdict((f.eta() == 0) == block_graph);
}

inline CheckOutcome check_forbidden_values(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  b.see("eta", f.eta());
  return b.verdict(f.eta() != 1 && f.eta() != 3);
}

inline CheckOutcome check_bip_contrib(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  const auto& c = f.contribution();
  const auto c_min = *std::min_element(c.begin(), c.end());
  b.see("c_min", c_min).see("bound", 8).see("eta", f.eta());
  if (!b.require("two_connected", f.two_connected())) return b.not_applicable();
  if (!b.require("bipartite", f.bipartite())) return b.not_applicable();
  const bool c4 = f.n() == 4 && g.edge_count() == 4;
  if (!b.require("not_C4", !c4)) {
    const bool all_four = std::all_of(c.begin(), c.end(), [](auto x) { return x == 4; });
    b.note("exception C4: asserting c(u) = 4 for every vertex");
    return all_four ? b.not_applicable() : b.verdict(false);
  }
  return b.verdict(c_min >= 8);
}

inline CheckOutcome check_bip_bound(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  int c4_blocks = 0;
  bool other_bipartite = false;
  for (VertexSet blk : f.block_decomposition().blocks) {
    const auto s = detail::shape_of(g, blk);
    if (!s.two_connected || !s.bipartite) continue;
    if (s.is_cycle(4)) {
      ++c4_blocks;
    } else {
      other_bipartite = true;
    }
  }
  b.see("eta", f.eta()).see("bound", 4 * f.n()).see("c4_blocks", c4_blocks);
  if (!b.require("bipartite_2connected_block_not_C4_or_two_C4_blocks",
                 other_bipartite || c4_blocks >= 2)) {
    return b.not_applicable();
  }
  return b.verdict(f.eta() >= 4 * f.n());
}

inline CheckOutcome check_girth_bound(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  int c5_blocks = 0;
  bool other_triangle_free = false;
  for (VertexSet blk : f.block_decomposition().blocks) {
    const auto s = detail::shape_of(g, blk);
    if (!s.two_connected || !s.triangle_free) continue;
    if (s.is_cycle(5)) {
      ++c5_blocks;
    } else {
      other_triangle_free = true;
    }
  }
  b.see("eta", f.eta()).see("bound", 2 * f.n()).see("c5_blocks", c5_blocks);
  if (!b.require("triangle_free_2connected_block_not_C5_or_two_C5_blocks",
                 other_triangle_free || c5_blocks >= 2)) {
    return b.not_applicable();
  }
  return b.verdict(f.eta() >= 2 * f.n());
}

// Equality family: unicyclic with a 5-cycle whose non-trivial trees hang
// off at most two cycle vertices, adjacent if there are two.
inline bool is_c5_tree_extremal(const Graph& g) {
  if (!is_connected(g)) return false;
  detail::Facts f(g);
  const auto cycle = detail::unicyclic_cycle(f, 5);
  if (!cycle) return false;
  const VertexSet roots = detail::tree_roots(g, *cycle);
  if (roots.size() <= 1) return true;
  if (roots.size() > 2) return false;
  const auto r = roots.to_vector();
  return g.has_edge(r[0], r[1]);
}

inline CheckOutcome check_girth5_bound(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  const int n = f.n();
  const auto len = girth(g);
  const bool extremal = is_c5_tree_extremal(g);
  b.see("eta", f.eta()).see("bound", 2 * n - 5).see("equality_family", extremal ? 1 : 0);
  if (!b.require("order_at_least_5", n >= 5)) return b.not_applicable();
  if (!b.require("has_odd_cycle", !f.bipartite())) return b.not_applicable();
  if (!b.require("girth_at_least_5", len && *len >= 5)) return b.not_applicable();
  const bool tight = f.eta() == 2 * n - 5;
  if (tight != extremal) b.note("equality case and equality family disagree");
  return b.verdict(f.eta() >= 2 * n - 5 && tight == extremal);
}

namespace detail {
struct RevisedTerms {
  std::int64_t eta4 = 0;
  std::int64_t eta = 0;
  std::int64_t excess_h = 0;  // sum over vertices of h(a) - 1
};

inline RevisedTerms revised_terms(Facts& f) {
  RevisedTerms t;
  t.eta = f.eta();
  t.eta4 = eta_star_q4(f.graph(), f.distances());
  for (int a = 0; a < f.n(); ++a) t.excess_h += horizontal_count(f.graph(), f.distances(), a) - 1;
  return t;
}
}  // namespace detail

// A tree with one vertex expanded into a triangle: connected, unicyclic, cycle C3.
inline bool is_c3_with_trees(const Graph& g) {
  if (!is_connected(g)) return false;
  detail::Facts f(g);
  return detail::unicyclic_cycle(f, 3).has_value();
}

inline bool is_c3_with_one_tree(const Graph& g) {
  if (!is_connected(g)) return false;
  detail::Facts f(g);
  const auto cycle = detail::unicyclic_cycle(f, 3);
  return cycle && detail::tree_roots(g, *cycle).size() <= 1;
}

inline CheckOutcome check_revised_lemma(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  const std::int64_t n = f.n();
  const auto t = detail::revised_terms(f);
  const std::int64_t basic = 4 * t.eta + n * n + 2 * n;
  const std::int64_t refined = basic + (n + 2) * t.excess_h;
  b.see("eta_star_q4", t.eta4).see("bound", refined).see("basic_bound", basic).see("eta", t.eta);
  if (!b.require("non_bipartite", !f.bipartite())) return b.not_applicable();
  return b.verdict(t.eta4 >= basic && t.eta4 >= refined);
}

inline CheckOutcome check_revised_floor(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  const std::int64_t n = f.n();
  const std::int64_t eta4 = eta_star_q4(g, f.distances());
  b.see("eta_star_q4", eta4).see("bound", n * n + 4 * n);
  if (!b.require("non_bipartite", !f.bipartite())) return b.not_applicable();
  if (!b.require("not_C3_with_trees", !is_c3_with_trees(g))) return b.not_applicable();
  return b.verdict(eta4 >= n * n + 4 * n);
}

inline CheckOutcome check_revised_equality(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  const std::int64_t n = f.n();
  const std::int64_t eta4 = eta_star_q4(g, f.distances());
  const std::int64_t bound = n * n + 4 * n - 6;
  const bool family = is_c3_with_one_tree(g);
  b.see("eta_star_q4", eta4).see("bound", bound).see("equality_family", family ? 1 : 0);
  if (!b.require("non_bipartite", !f.bipartite())) return b.not_applicable();
  const bool tight = eta4 == bound;
  if (tight != family) b.note("equality case and equality family disagree");
  return b.verdict(eta4 >= bound && tight == family);
}

inline CheckOutcome check_induction_lemma(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  if (!b.require("two_connected", f.two_connected())) {
    b.see("min_drop", 0).see("bound", 2).see("applicable_vertices", 0);
    return b.not_applicable();
  }
  std::optional<std::int64_t> min_drop;
  int applicable = 0;
  for (int u = 0; u < f.n(); ++u) {
    if (!detail::dominated_pair_exists_for(g, u)) continue;
    const Graph rest = g.without_vertex(u);
    if (!is_two_connected(rest) || is_complete(rest)) continue;
    ++applicable;
    const std::int64_t drop = f.eta() - eta(rest);
    if (!min_drop || drop < *min_drop) min_drop = drop;
  }
  b.see("min_drop", min_drop.value_or(0)).see("bound", 2).see("applicable_vertices", applicable);
  if (!b.require("has_vertex_u_with_G-u_2connected_noncomplete_and_N[u]_in_N[v]", applicable > 0)) {
    return b.not_applicable();
  }
  return b.verdict(*min_drop >= 2);
}

inline CheckOutcome check_blockdecomp_lemma(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  std::int64_t p_sum = 0;
  for (VertexSet blk : f.block_decomposition().blocks) {
    const Graph h = g.induced(blk);
    const auto c = contributions(h);
    p_sum += *std::min_element(c.begin(), c.end());
  }
  const auto& c = f.contribution();
  const auto c_min = *std::min_element(c.begin(), c.end());
  // eta >= (n/2) * sum p, compared doubled
  b.see("eta", f.eta()).see("p_sum", p_sum).see("c_min", c_min).see("n", f.n());
  return b.verdict(c_min >= p_sum && 2 * f.eta() >= f.n() * p_sum);
}

inline CheckOutcome check_five_bound(const Graph& g) {
  detail::Facts f(g);
  detail::Builder b;
  const auto& blks = f.block_decomposition().blocks;
  bool bad_block = false;
  for (VertexSet blk : blks) {
    const auto s = detail::shape_of(g, blk);
    if (s.complete || s.is_cycle(5)) bad_block = true;
  }
  bool dominated = false;
  for (int u = 0; u < f.n() && !dominated; ++u) dominated = detail::dominated_pair_exists_for(g, u);
  b.see("eta", f.eta()).see("bound", 4 * f.n()).see("blocks", static_cast<std::int64_t>(blks.size()));
  if (!b.require("at_least_two_blocks", blks.size() >= 2)) return b.not_applicable();
  if (!b.require("no_C5_or_complete_block", !bad_block)) return b.not_applicable();
  if (!b.require("no_u_v_with_N[u]_in_N[v]", !dominated)) return b.not_applicable();
  return b.verdict(f.eta() >= 4 * f.n());
}

inline CheckOutcome evaluate(CheckId id, const Graph& g) {
  switch (id) {
    case CheckId::eq1: return check_eq1(g);
    case CheckId::horiz: return check_horiz(g);
    case CheckId::main1: return check_main1(g);
    case CheckId::main3: return check_main3(g);
    case CheckId::corollary_blocks: return check_corollary_blocks(g);
    case CheckId::conjecture4: return check_conjecture4(g, false);
    case CheckId::conjecture4_relaxed: return check_conjecture4(g, true);
    case CheckId::dg_zero: return check_dg_zero(g);
    case CheckId::forbidden_values: return check_forbidden_values(g);
    case CheckId::bip_contrib: return check_bip_contrib(g);
    case CheckId::bip_bound: return check_bip_bound(g);
    case CheckId::girth_bound: return check_girth_bound(g);
    case CheckId::girth5_bound: return check_girth5_bound(g);
    case CheckId::revised_lemma: return check_revised_lemma(g);
    case CheckId::revised_floor: return check_revised_floor(g);
    case CheckId::revised_equality: return check_revised_equality(g);
    case CheckId::induction_lemma: return check_induction_lemma(g);
    case CheckId::blockdecomp_lemma: return check_blockdecomp_lemma(g);
    case CheckId::five_bound: return check_five_bound(g);
  }
  throw GraphError("unknown check");
}

}  // namespace szw
