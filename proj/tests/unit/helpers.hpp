#pragma once

#include <random>
#include <vector>

#include "cubicspec/error.hpp"
#include "cubicspec/multigraph.hpp"

namespace cubicspec::testing {

// Fixed-seed random loopless multigraph.
inline Multigraph random_multigraph(std::mt19937& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<Edge> edges;
  while (edges.size() < m) {
    const auto u = pick(rng);
    const auto v = pick(rng);
    if (u != v) edges.emplace_back(u, v);
  }
  return Multigraph::from_edge_list(n, edges);
}

// Kind of the cubicspec::Error thrown by f, or 0 if nothing was thrown.
template <class F>
int error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return static_cast<int>(e.kind());
  }
  return 0;
}

inline int kind(ErrorKind k) { return static_cast<int>(k); }

}  // namespace cubicspec::testing
