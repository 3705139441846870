#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "szw/canonical.hpp"
#include "szw/enumeration.hpp"
#include "szw/report.hpp"
#include "szw/scan.hpp"

using namespace szw;

TEST_CASE("class counts for every order up to eight") {
  const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156, 1044, 12346};
  const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853, 11117};
  const std::vector<std::size_t> two_connected = {0, 0, 1, 3, 10, 56, 468, 7123};
  for (int n = 1; n <= 8; ++n) {
    INFO("n = " << n);
    CHECK(builtin_enumerate(n).size() == all[n - 1]);
    CHECK(builtin_enumerate(n, parse_filter("connected")).size() == connected[n - 1]);
    CHECK(builtin_enumerate(n, parse_filter("2connected")).size() == two_connected[n - 1]);
  }
  CHECK_THROWS_AS(builtin_enumerate(0), GraphError);
  CHECK_THROWS_AS(builtin_enumerate(9), GraphError);
}

TEST_CASE("enumeration matches the brute-force class set") {
  for (int n = 1; n <= 7; ++n) {
    INFO("n = " << n);
    const auto expected = oracle::brute_classes(n);
    std::set<std::uint64_t> seen;
    for (const Graph& g : builtin_enumerate(n)) seen.insert(oracle::brute_canonical_key(g));
    CHECK(builtin_enumerate(n).size() == expected.size());
    CHECK(seen == expected);
  }
}

TEST_CASE("canonical form is a relabelling invariant") {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % kMaxKeyedOrder;
    const Graph g = oracle::random_graph(rng, n, 0.2 + (i % 5) * 0.15);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto a = canonical_form(g);
    const auto b = canonical_form(g.permuted(perm));
    REQUIRE(a.graph == b.graph);
    REQUIRE(g.permuted(a.labeling) == a.graph);
  }
}

TEST_CASE("isomorphism agrees with brute-force keys") {
  std::mt19937_64 rng(1618);
  for (int i = 0; i < 300; ++i) {
    const int n = 4 + i % 4;
    const Graph a = oracle::random_graph(rng, n, 0.5);
    const Graph b = oracle::random_graph(rng, n, 0.5);
    CHECK(are_isomorphic(a, b) == (oracle::brute_canonical_key(a) == oracle::brute_canonical_key(b)));
  }
  CHECK(are_isomorphic(cycle_graph(6), cycle_graph(6).permuted({3, 1, 4, 0, 5, 2})));
  CHECK_FALSE(are_isomorphic(cycle_graph(6), path_graph(6)));
}

TEST_CASE("filters") {
  const auto f = parse_filter("2connected,noncomplete,girth:4");
  CHECK(f.two_connected);
  CHECK(f.non_complete);
  CHECK(f.min_girth == 4);
  CHECK(parse_filter(to_string(f)) == f);
  CHECK(parse_filter("") == GraphFilter{});
  CHECK(parse_filter("girth>=5").min_girth == 5);
  CHECK(parse_filter("biconnected").two_connected);
  CHECK_THROWS_AS(parse_filter("planar"), GraphError);
  CHECK_THROWS_AS(parse_filter("girth:2"), GraphError);
  CHECK_THROWS_AS(parse_filter("girth:x"), GraphError);
  CHECK(f.accepts(cycle_graph(5)));
  CHECK_FALSE(f.accepts(complete_graph(4)));
  CHECK_FALSE(f.accepts(path_graph(4)));
  CHECK(parse_filter("girth:4").accepts(path_graph(4)));
}

TEST_CASE("graph6 line streams") {
  SECTION("blank lines and CRLF") {
    std::istringstream in("Dhc\n\nCl\r\n\n");
    Graph6LineSource src(in);
    StreamItem item;
    REQUIRE(src.next(item));
    CHECK(item.graph == cycle_graph(5));
    CHECK(item.ordinal == 1);
    REQUIRE(src.next(item));
    CHECK(item.graph == cycle_graph(4));
    CHECK(item.graph6 == "Cl");
    CHECK(item.ordinal == 3);
    CHECK_FALSE(src.next(item));
  }
  SECTION("strict mode reports the line") {
    std::istringstream in("Dhc\nD!c\nCl\n");
    Graph6LineSource src(in);
    StreamItem item;
    REQUIRE(src.next(item));
    try {
      src.next(item);
      FAIL("expected a stream error");
    } catch (const StreamError& e) {
      CHECK(e.line() == 2);
    }
  }
  SECTION("lenient mode skips and counts") {
    std::istringstream in("Dhc\nD!c\nCl\nxyz\n");
    Graph6LineSource src(in, true);
    CHECK(read_all(src).size() == 2);
    CHECK(src.skipped() == 2);
  }
}

TEST_CASE("scan reports do not depend on worker count or chunking") {
  const auto graphs = builtin_enumerate(7, parse_filter("connected"));
  ScanOptions base;
  base.workers = 1;
  const auto reference = to_json(scan(graphs, CheckId::main3, base), false).dump();
  for (unsigned w : {2u, 3u, 4u, 8u}) {
    for (std::size_t chunk : {1u, 7u, 512u}) {
      ScanOptions o;
      o.workers = w;
      o.chunk_size = chunk;
      CHECK(to_json(scan(graphs, CheckId::main3, o), false).dump() == reference);
    }
  }
}

TEST_CASE("scan bookkeeping") {
  std::vector<Graph> graphs = builtin_enumerate(6, parse_filter("connected"));
  ScanOptions o;
  o.filter = parse_filter("2connected");
  const auto r = scan(graphs, CheckId::conjecture4_relaxed, o);
  CHECK(r.stream_count == 112);
  CHECK(r.filtered_out == 112 - 56);
  CHECK(r.examined == 56);
  CHECK(r.passed + r.failed + r.not_applicable == r.examined);
  CHECK(r.failed > 0);
  CHECK(r.counterexamples.size() == r.failed);
  CHECK(std::is_sorted(r.counterexamples.begin(), r.counterexamples.end(),
                       [](const Counterexample& a, const Counterexample& b) { return a.graph6 < b.graph6; }));
  std::uint64_t hist = 0;
  for (auto [v, c] : r.histogram) hist += c;
  CHECK(hist == r.passed + r.failed);

  o.counterexample_limit = 3;
  const auto limited = scan(graphs, CheckId::conjecture4_relaxed, o);
  CHECK(limited.failed == r.failed);
  REQUIRE(limited.counterexamples.size() == 3);
  CHECK(limited.counterexamples[0] == r.counterexamples[0]);

  // partial reports merge to the whole
  std::vector<Graph> left(graphs.begin(), graphs.begin() + 40), right(graphs.begin() + 40, graphs.end());
  o.counterexample_limit = 0;
  auto merged = scan(left, CheckId::conjecture4_relaxed, o);
  merged.merge(scan(right, CheckId::conjecture4_relaxed, o));
  CHECK(merged.examined == r.examined);
  CHECK(merged.failed == r.failed);
  CHECK(merged.histogram == r.histogram);
  CHECK(merged.min_value == r.min_value);
}

TEST_CASE("scan errors") {
  SECTION("disconnected graphs without a filter") {
    try {
      scan(builtin_enumerate(4), CheckId::main1);
      FAIL("expected a scan error");
    } catch (const ScanError& e) {
      CHECK(e.graph6() == encode_graph6(builtin_enumerate(4).front()));
    }
  }
  SECTION("malformed stream") {
    std::istringstream in("Dhc\nbad line\n");
    Graph6LineSource src(in);
    CHECK_THROWS_AS(scan(src, CheckId::main1), StreamError);
  }
  SECTION("lenient stream") {
    std::istringstream in("Dhc\nbad line\nCl\n");
    Graph6LineSource src(in, true);
    const auto r = scan(src, CheckId::main1);
    CHECK(r.stream_count == 2);
    CHECK(r.skipped_lines == 1);
    CHECK(r.failed == 0);
  }
}
