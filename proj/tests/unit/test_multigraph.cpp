#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

#include "cubicspec/families.hpp"
#include "cubicspec/multigraph.hpp"

using namespace cubicspec;
using cubicspec::testing::error_kind;
using cubicspec::testing::kind;

namespace {

Multigraph c4() { return Multigraph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

// Odd closed walk exists iff some vertex reaches itself in an odd number of steps.
bool has_odd_cycle_bruteforce(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  for (Vertex s = 0; s < n; ++s) {
    std::vector<char> cur(n, 0);
    cur[s] = 1;
    for (std::size_t step = 1; step <= 2 * n; ++step) {
      std::vector<char> next(n, 0);
      for (Vertex v = 0; v < n; ++v) {
        if (!cur[v]) continue;
        for (Vertex w : g.neighbors(v)) next[w] = 1;
      }
      cur = next;
      if (step % 2 == 1 && cur[s]) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("from_edge_list builds the triple edge and C4") {
  const auto t = Multigraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(t.vertex_count() == 2);
  CHECK(t.edge_count() == 3);
  CHECK(t.multiplicity(0, 1) == 3);
  CHECK(t.multiplicity(1, 0) == 3);

  const auto g = c4();
  CHECK(g.edge_count() == 4);
  CHECK(g.multiplicity(3, 0) == 1);
  CHECK(g.multiplicity(0, 2) == 0);
}

TEST_CASE("from_edge_list rejects loops and out-of-range endpoints") {
  CHECK(error_kind([] { Multigraph::from_edge_list(2, {{0, 0}}); }) == kind(ErrorKind::LoopEdge));
  CHECK(error_kind([] { Multigraph::from_edge_list(2, {{0, 2}}); }) == kind(ErrorKind::OutOfRange));
}

TEST_CASE("edge endpoints are order independent") {
  const auto a = Multigraph::from_edge_list(3, {{0, 1}, {2, 1}});
  const auto b = Multigraph::from_edge_list(3, {{1, 2}, {1, 0}});
  CHECK(a == b);
}

TEST_CASE("degree_sequence") {
  CHECK(degree_sequence(families::triple_edge()) == std::vector<std::size_t>{3, 3});
  CHECK(degree_sequence(c4()) == std::vector<std::size_t>{2, 2, 2, 2});
  CHECK(degree_sequence(families::f2n(2)) == std::vector<std::size_t>{3, 3, 3, 3});
  CHECK(is_cubic(families::f2n(2)));
  CHECK_FALSE(is_cubic(c4()));
  CHECK(regular_degree(c4()) == std::optional<std::size_t>(2));
  CHECK_FALSE(regular_degree(Multigraph::from_edge_list(3, {{0, 1}})).has_value());
}

TEST_CASE("is_connected") {
  CHECK(is_connected(c4()));
  CHECK_FALSE(is_connected(Multigraph::from_edge_list(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(families::gen_petersen(5, 2)));
}

TEST_CASE("bipartition") {
  const auto bp = bipartition(c4());
  REQUIRE(bp.has_value());
  CHECK(bp->first == VertexSet{0, 2});
  CHECK(bp->second == VertexSet{1, 3});
  CHECK_FALSE(bipartition(families::cycle(5)).has_value());
  CHECK_FALSE(bipartition(families::truncate_cubic(families::complete_bipartite(3, 3))).has_value());
}

TEST_CASE("induced_subgraph") {
  const VertexSet two{0, 1};
  const auto sub = induced_subgraph(c4(), two);
  CHECK(sub.graph.vertex_count() == 2);
  CHECK(sub.graph.edge_count() == 1);

  const VertexSet outer{0, 1, 2, 3, 4};
  const auto pet = induced_subgraph(families::gen_petersen(5, 2), outer);
  CHECK(pet.graph == families::cycle(5));

  const auto empty = induced_subgraph(c4(), VertexSet{});
  CHECK(empty.graph.vertex_count() == 0);
  CHECK(empty.graph.edge_count() == 0);

  CHECK(error_kind([] { induced_subgraph(c4(), VertexSet{7}); }) == kind(ErrorKind::OutOfRange));
}

TEST_CASE("induced_subgraph relabel maps are inverse") {
  const VertexSet s{1, 3, 4};
  const auto sub = induced_subgraph(families::petersen(), s);
  REQUIRE(sub.new_to_old == s);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(sub.old_to_new[s[i]] == std::optional<Vertex>(i));
  CHECK_FALSE(sub.old_to_new[0].has_value());
}

TEST_CASE("cycle_decomposition") {
  CHECK(cycle_decomposition(families::cycle(6)) == std::vector<Cycle>{{0, 1, 2, 3, 4, 5}});
  const auto digons = Multigraph::from_edge_list(4, {{0, 1}, {0, 1}, {2, 3}, {3, 2}});
  CHECK(cycle_decomposition(digons) == std::vector<Cycle>{{0, 1}, {2, 3}});
  // canonical start: smallest vertex, then its smaller neighbour
  const auto c = Multigraph::from_edge_list(4, {{0, 3}, {3, 1}, {1, 2}, {2, 0}});
  CHECK(cycle_decomposition(c) == std::vector<Cycle>{{0, 2, 1, 3}});
  CHECK(error_kind([] { cycle_decomposition(families::triple_edge()); }) ==
        kind(ErrorKind::NotTwoRegular));
}

TEST_CASE("edge-list text round trip") {
  const auto g = families::f2n(3);
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  std::istringstream in("# comment\n3 2\n\n0 1\n2 1\n");
  const auto h = read_edge_list(in);
  CHECK(h.edge_count() == 2);
  CHECK(h.multiplicity(1, 2) == 1);
}

TEST_CASE("edge-list parse errors") {
  for (const char* bad : {"", "3", "3 2\n0 1\n", "2 1\n0 x\n", "2 1\n0 1\n0 1\n", "-1 0\n"}) {
    CAPTURE(bad);
    CHECK(error_kind([&] { parse_edge_list(bad); }) == kind(ErrorKind::ParseError));
  }
  CHECK(error_kind([] { parse_edge_list("2 1\n1 1\n"); }) == kind(ErrorKind::LoopEdge));
  CHECK(error_kind([] { parse_edge_list("2 1\n0 5\n"); }) == kind(ErrorKind::OutOfRange));
}

TEST_CASE("property: degree sum, round trip, bipartition vs odd cycles") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const std::size_t m = n == 1 ? 0 : rng() % (2 * n);
    const auto g = cubicspec::testing::random_multigraph(rng, n, m);
    const auto deg = degree_sequence(g);
    std::size_t sum = 0;
    for (auto d : deg) sum += d;
    CHECK(sum == 2 * g.edge_count());
    CHECK(parse_edge_list(to_edge_list(g)) == g);

    const auto bp = bipartition(g);
    CHECK(bp.has_value() == !has_odd_cycle_bruteforce(g));
    if (bp) {
      std::vector<int> side(n, -1);
      for (Vertex v : bp->first) side[v] = 0;
      for (Vertex v : bp->second) side[v] = 1;
      for (Vertex v = 0; v < n; ++v) CHECK(side[v] != -1);
      for (auto [u, v] : g.edges()) CHECK(side[u] != side[v]);
    }
  }
}

TEST_CASE("property: cycle_decomposition covers each vertex once along edges") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    // random union of cycles (digons allowed) on a shuffled vertex order
    const std::size_t n = 2 + rng() % 12;
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> edges;
    std::size_t start = 0;
    while (start < n) {
      std::size_t len = 2 + rng() % 5;
      if (n - start < len + 2) len = n - start;
      for (std::size_t i = 0; i < len; ++i) {
        edges.emplace_back(order[start + i], order[start + (i + 1) % len]);
      }
      start += len;
    }
    const auto g = Multigraph::from_edge_list(n, edges);
    const auto cycles = cycle_decomposition(g);
    std::vector<int> seen(n, 0);
    for (const auto& c : cycles) {
      REQUIRE(c.size() >= 2);
      CHECK(c.front() == *std::min_element(c.begin(), c.end()));
      if (c.size() > 2) CHECK(c[1] < c.back());
      for (std::size_t i = 0; i < c.size(); ++i) {
        ++seen[c[i]];
        CHECK(g.multiplicity(c[i], c[(i + 1) % c.size()]) >= 1);
      }
    }
    for (Vertex v = 0; v < n; ++v) CHECK(seen[v] == 1);
  }
}
