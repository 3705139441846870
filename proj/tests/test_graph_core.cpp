#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "szw/connectivity.hpp"
#include "szw/distance.hpp"
#include "szw/graph.hpp"
#include "szw/graph6.hpp"

using namespace szw;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

Graph bowtie() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(2, 4);
  return g;
}

}  // namespace

TEST_CASE("vertex sets") {
  VertexSet s;
  CHECK(s.empty());
  s.insert(3);
  s.insert(61);
  CHECK(s.size() == 2);
  CHECK(s.first() == 3);
  CHECK(s.to_vector() == std::vector<int>{3, 61});
  CHECK(s.is_subset_of(VertexSet::range(62)));
  CHECK_FALSE(s.is_subset_of(VertexSet::range(61)));
  s.erase(3);
  CHECK(s == VertexSet::single(61));
  CHECK((VertexSet::range(4) - VertexSet::single(1)).to_vector() == std::vector<int>{0, 2, 3});
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(0), GraphError);
  CHECK_THROWS_AS(Graph(63), GraphError);
  Graph g(4);
  CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 4), GraphError);
  CHECK_THROWS_AS(g.add_edge(-1, 2), GraphError);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.edge_count() == 1);
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("induced subgraphs and relabelling") {
  const Graph c5 = cycle_graph(5);
  const Graph p4 = c5.without_vertex(2);
  CHECK(p4.order() == 4);
  CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}});
  const Graph h = c5.permuted({4, 3, 2, 1, 0});
  CHECK(h == c5);
  const Graph r = path_graph(3).permuted({1, 0, 2});
  CHECK(r.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("graph6 frozen encodings") {
  CHECK(encode_graph6(cycle_graph(4)) == "Cl");
  CHECK(encode_graph6(cycle_graph(5)) == "Dhc");
  CHECK(encode_graph6(complete_graph(3)) == "Bw");
  CHECK(encode_graph6(complete_graph(2)) == "A_");
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(parse_graph6("Dhc") == cycle_graph(5));
  CHECK(parse_graph6("Dhc\n") == cycle_graph(5));
  CHECK(parse_graph6("Dhc\r\n") == cycle_graph(5));
  CHECK(parse_graph6(">>graph6<<Cl") == cycle_graph(4));
  const Graph empty5 = parse_graph6("D??");
  CHECK(empty5.order() == 5);
  CHECK(empty5.edge_count() == 0);
  CHECK(encode_graph6(petersen()) == "IheA@GUAo");
}

TEST_CASE("graph6 malformed records") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("?"), ParseError);
  CHECK_THROWS_AS(parse_graph6("~"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Dh"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Dhcc"), ParseError);
  try {
    parse_graph6("Dh c");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> order(1, kMaxVertices);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    const auto text = encode_graph6(g);
    REQUIRE(parse_graph6(text) == g);
    CHECK(encode_graph6(parse_graph6(text)) == text);
  }
}

TEST_CASE("edge lists") {
  const Graph g = parse_edge_list("5 5\n0 1\n1 2\n\n2 3\n3 4\n4 0\n");
  CHECK(g == cycle_graph(5));
  CHECK(parse_edge_list(to_edge_list(petersen())) == petersen());
  CHECK(parse_edge_list("3 2\n0 1\n1 0\n").edge_count() == 1);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
}

TEST_CASE("distances agree with Floyd-Warshall") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 20;
    const Graph g = oracle::random_graph(rng, n, 0.15 + (i % 5) * 0.1);
    const auto dm = all_pairs_distances(g);
    const auto ref = oracle::floyd_warshall(g);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (ref[a][b] >= oracle::kInf) {
          REQUIRE_FALSE(dm.reachable(a, b));
        } else {
          REQUIRE(dm(a, b) == ref[a][b]);
        }
      }
    CHECK(dm.all_reachable() == oracle::connected(g));
  }
}

TEST_CASE("bfs levels of a path") {
  const auto levels = bfs_levels(path_graph(4), 1);
  REQUIRE(levels.size() == 3);
  CHECK(levels[0] == VertexSet::single(1));
  CHECK(levels[1].to_vector() == std::vector<int>{0, 2});
  CHECK(levels[2] == VertexSet::single(3));
}

TEST_CASE("structural predicates agree with brute force") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 600; ++i) {
    const int n = 1 + i % 10;
    const Graph g = oracle::random_graph(rng, n, 0.2 + (i % 6) * 0.1);
    CHECK(is_connected(g) == oracle::connected(g));
    CHECK(is_two_connected(g) == oracle::two_connected(g));
    CHECK(is_bipartite(g) == oracle::bipartite(g));
    const auto len = girth(g);
    CHECK(len.value_or(0) == oracle::girth(g));
  }
  CHECK(girth(petersen()) == 5);
  CHECK_FALSE(girth(path_graph(6)).has_value());
  CHECK(girth(cycle_graph(9)) == 9);
}

TEST_CASE("block decomposition") {
  SECTION("frozen examples") {
    const auto bt = blocks(bowtie());
    CHECK(bt.blocks.size() == 2);
    CHECK(bt.cut_vertices == VertexSet::single(2));
    CHECK(blocks(Graph(1)).blocks == std::vector<VertexSet>{VertexSet::single(0)});
    const auto p = blocks(path_graph(4));
    CHECK(p.blocks.size() == 3);
    CHECK(p.cut_vertices.to_vector() == std::vector<int>{1, 2});
    CHECK(blocks(petersen()).blocks.size() == 1);
    CHECK_THROWS_AS(blocks(Graph(3)), DisconnectedGraphError);
  }
  SECTION("random connected graphs") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 400; ++i) {
      const int n = 2 + i % 11;
      const Graph g = oracle::random_connected(rng, n, 0.05 + (i % 4) * 0.08);
      const auto bd = blocks(g);
      const auto cuts = oracle::cut_vertices(g);
      CHECK(bd.cut_vertices.to_vector() == std::vector<int>(cuts.begin(), cuts.end()));
      // every edge lies in exactly one block; every block is 2-connected or a bridge
      int covered = 0;
      for (VertexSet b : bd.blocks) {
        const Graph h = g.induced(b);
        covered += h.edge_count();
        CHECK((b.size() == 2 ? h.edge_count() == 1 : oracle::two_connected(h)));
      }
      CHECK(covered == g.edge_count());
      CHECK(std::is_sorted(bd.blocks.begin(), bd.blocks.end()));
    }
  }
}
