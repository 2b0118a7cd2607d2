#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cubicspec/multigraph.hpp"

namespace cubicspec {

using Dart = std::size_t;

// Oriented combinatorial map given by a rotation system. Edge i owns darts 2i
// and 2i+1 (alpha swaps them); sigma(d) is the next dart counterclockwise
// around the vertex of d.
class Map {
public:
  // rotations[v] lists the darts at v in counterclockwise order. Validates
  // that every dart 0..2E-1 appears exactly once, that no edge is a loop, and
  // that the map is connected.
  static Map from_rotations(std::size_t vertex_count, std::size_t edge_count,
                            std::vector<std::vector<Dart>> rotations);

  std::size_t vertex_count() const noexcept { return rotations_.size(); }
  std::size_t edge_count() const noexcept { return sigma_.size() / 2; }
  std::size_t dart_count() const noexcept { return sigma_.size(); }

  static Dart alpha(Dart d) noexcept { return d ^ 1U; }
  Dart sigma(Dart d) const { return sigma_.at(d); }
  Dart sigma_inv(Dart d) const { return sigma_inv_.at(d); }
  Vertex vertex_of(Dart d) const { return vertex_of_.at(d); }

  const std::vector<std::vector<Dart>>& rotations() const noexcept { return rotations_; }

  // Underlying multigraph; edge i joins the vertices of darts 2i and 2i+1.
  Multigraph underlying_graph() const;

  // Same graph with every rotation reversed.
  Map mirror() const;

private:
  std::vector<std::vector<Dart>> rotations_;
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<Vertex> vertex_of_;
};

// Map file: '#' comment lines ignored; first line "V E"; then V lines, each
// the darts at that vertex in counterclockwise order.
Map parse_map(const std::string& text);
std::string to_map_text(const Map& m);

// Orbits of sigma . alpha, each starting at its smallest dart, listed by
// starting dart.
std::vector<std::vector<Dart>> facial_walks(const Map& m);

// (2 - V + E - F) / 2; throws NonIntegerGenus when the defect is odd or
// negative.
std::size_t euler_genus(const Map& m);

// One vertex per dart; d is joined to alpha(d) and to sigma(d). Requires every
// vertex degree >= 3.
Multigraph vertex_truncation(const Map& m);

// K_{m,m} as the Cayley graph on Z_{2m} with connection set {1, 3, ..., 2m-1};
// every vertex uses the rotation (1, 3, ..., 2m-1) of generators. Edge
// (x/2)*m + (s-1)/2 joins even x to x+s.
Map kmm_map(std::size_t m);

// Genus-2 embedding of the Mobius-Kantor graph P(8,3) with six octagonal
// faces. Vertex labels follow families::gen_petersen(8, 3).
Map mobius_kantor_map();

}  // namespace cubicspec
