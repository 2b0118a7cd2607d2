#pragma once

#include <cstddef>

#include "cubicspec/multigraph.hpp"

// Graph families with frozen vertex labelings. Every generator validates its
// parameters before building anything.
namespace cubicspec::families {

// Even cycle C_{2n} with every second edge doubled. Vertices 0..2n-1 around the
// cycle; edges {i, i+1 mod 2n}, plus a second copy of {2j, 2j+1}.
Multigraph f2n(std::size_t n);

// C_n x K_2: outer cycle 0..n-1, inner cycle n..2n-1, spokes {i, n+i}.
Multigraph prism(std::size_t n);

// Generalized Petersen graph P(n,k): outer j -> j, inner j -> n+j; outer cycle,
// spokes, and inner chords {n+j, n+(j+k mod n)}. Rejects 2k = 0 (mod n).
Multigraph gen_petersen(std::size_t n, std::size_t k);

// (n,k) = (10,2) or k^2 = +-1 (mod n). Arithmetic only, no graph search.
bool gp_is_vertex_transitive(std::size_t n, std::size_t k);

// Cubic graph on 2m^2 vertices: plus-vertex (i,j) -> i*m+j, minus-vertex (i,j)
// -> m^2+i*m+j. Plus and minus rows are m-cycles in j, and plus (i,j) is matched
// to minus (j,i).
Multigraph t_m(std::size_t m);

// Truncation of a cubic multigraph. Edge e = {u,v} owns darts (u,e) and (v,e);
// the darts at v, ordered by edge index, become vertices 3v, 3v+1, 3v+2 and form
// a triangle; the two darts of each edge are joined.
Multigraph truncate_cubic(const Multigraph& g);

// Small named graphs used throughout the tests and the CLI.
Multigraph cycle(std::size_t n);
Multigraph complete(std::size_t n);
Multigraph complete_bipartite(std::size_t a, std::size_t b);
Multigraph triple_edge();
Multigraph petersen();

}  // namespace cubicspec::families
