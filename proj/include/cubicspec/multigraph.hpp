#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cubicspec {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;
using Cycle = std::vector<Vertex>;

// Loopless undirected multigraph on vertices 0..n-1. Parallel edges are kept
// as repeated entries. Edges are stored normalized (first < second) in the
// order they were supplied; the multiset is what matters for equality.
class Multigraph {
public:
  Multigraph() = default;

  static Multigraph from_edge_list(std::size_t n, std::span<const Edge> pairs);
  static Multigraph from_edge_list(std::size_t n,
                                   std::initializer_list<Edge> pairs) {
    return from_edge_list(n, std::span<const Edge>(pairs.begin(), pairs.size()));
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Neighbours of v with multiplicity, in edge order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }

  // Number of edges joining u and v.
  std::size_t multiplicity(Vertex u, Vertex v) const;

  // Sorted copy of the edge multiset, for order-independent comparison.
  std::vector<Edge> sorted_edges() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.sorted_edges() == b.sorted_edges();
  }

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

std::vector<std::size_t> degree_sequence(const Multigraph& g);

// The common degree when g is regular.
std::optional<std::size_t> regular_degree(const Multigraph& g);
bool is_cubic(const Multigraph& g);
std::size_t max_degree(const Multigraph& g);

bool is_connected(const Multigraph& g);

// 2-colouring (sorted colour classes, vertex 0 in the first) or nullopt when
// an odd cycle exists. Disconnected graphs colour each component with its
// smallest vertex in the first class.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Multigraph& g);

struct InducedSubgraph {
  Multigraph graph;
  // old_to_new[v] is the new label of v, or nullopt when v is not kept.
  std::vector<std::optional<Vertex>> old_to_new;
  // new_to_old[i] is the original label of new vertex i.
  std::vector<Vertex> new_to_old;
};

InducedSubgraph induced_subgraph(const Multigraph& g, std::span<const Vertex> s);

// Cycles of a 2-regular multigraph. Each cycle starts at its smallest vertex
// and continues towards the smaller of its two neighbours; cycles are listed by
// their first vertex. A digon is reported as a 2-cycle.
std::vector<Cycle> cycle_decomposition(const Multigraph& g);

// Edge-list interchange format: "n m" then m lines "u v".
Multigraph read_edge_list(std::istream& in);
Multigraph parse_edge_list(const std::string& text);
std::string to_edge_list(const Multigraph& g);

}  // namespace cubicspec
