#include "cubicspec/families.hpp"

#include <string>

#include "cubicspec/error.hpp"

namespace cubicspec::families {

namespace {

void require_at_least(std::size_t value, std::size_t min, const char* what) {
  if (value < min) {
    fail(ErrorKind::TooSmall, std::string(what) + " requires parameter >= " +
                                  std::to_string(min) + ", got " + std::to_string(value));
  }
}

}  // namespace

Multigraph f2n(std::size_t n) {
  require_at_least(n, 2, "f2n");
  const std::size_t len = 2 * n;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
  for (std::size_t j = 0; j < n; ++j) edges.emplace_back(2 * j, 2 * j + 1);
  return Multigraph::from_edge_list(len, edges);
}

Multigraph prism(std::size_t n) {
  require_at_least(n, 3, "prism");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(n + i, n + (i + 1) % n);
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  return Multigraph::from_edge_list(2 * n, edges);
}

Multigraph gen_petersen(std::size_t n, std::size_t k) {
  require_at_least(n, 3, "gen_petersen");
  if (k < 1 || k >= n) {
    fail(ErrorKind::OutOfRange, "gen_petersen: step k must satisfy 1 <= k <= n-1, got k=" +
                                    std::to_string(k) + " n=" + std::to_string(n));
  }
  if ((2 * k) % n == 0) {
    fail(ErrorKind::DegenerateStep, "gen_petersen: 2k = 0 (mod n) for n=" + std::to_string(n) +
                                        " k=" + std::to_string(k));
  }
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < n; ++j) edges.emplace_back(j, (j + 1) % n);
  for (std::size_t j = 0; j < n; ++j) edges.emplace_back(j, n + j);
  for (std::size_t j = 0; j < n; ++j) edges.emplace_back(n + j, n + (j + k) % n);
  return Multigraph::from_edge_list(2 * n, edges);
}

bool gp_is_vertex_transitive(std::size_t n, std::size_t k) {
  if (n == 10 && (k == 2 || k == 8)) return true;
  const std::size_t sq = (k * k) % n;
  return sq == 1 % n || sq == n - 1;
}

Multigraph t_m(std::size_t m) {
  require_at_least(m, 3, "t_m");
  const std::size_t sq = m * m;
  auto plus = [m](std::size_t i, std::size_t j) { return i * m + j; };
  auto minus = [m, sq](std::size_t i, std::size_t j) { return sq + i * m + j; };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) edges.emplace_back(plus(i, j), plus(i, (j + 1) % m));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) edges.emplace_back(minus(i, j), minus(i, (j + 1) % m));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) edges.emplace_back(plus(i, j), minus(j, i));
  }
  return Multigraph::from_edge_list(2 * sq, edges);
}

Multigraph truncate_cubic(const Multigraph& g) {
  if (!is_cubic(g)) fail(ErrorKind::NotCubic, "truncate_cubic: input is not cubic");
  const std::size_t n = g.vertex_count();
  // slot[e][s] = truncated vertex of the dart of edge e at endpoint s (0 = first).
  std::vector<std::size_t> next_slot(n, 0);
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    edges.emplace_back(3 * v, 3 * v + 1);
    edges.emplace_back(3 * v + 1, 3 * v + 2);
    edges.emplace_back(3 * v + 2, 3 * v);
  }
  for (auto [u, v] : g.edges()) {
    const std::size_t du = 3 * u + next_slot[u]++;
    const std::size_t dv = 3 * v + next_slot[v]++;
    edges.emplace_back(du, dv);
  }
  return Multigraph::from_edge_list(3 * n, edges);
}

Multigraph cycle(std::size_t n) {
  require_at_least(n, 2, "cycle");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Multigraph::from_edge_list(n, edges);
}

Multigraph complete(std::size_t n) {
  require_at_least(n, 1, "complete");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Multigraph::from_edge_list(n, edges);
}

Multigraph complete_bipartite(std::size_t a, std::size_t b) {
  require_at_least(a, 1, "complete_bipartite");
  require_at_least(b, 1, "complete_bipartite");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Multigraph::from_edge_list(a + b, edges);
}

Multigraph triple_edge() { return Multigraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}}); }

Multigraph petersen() { return gen_petersen(5, 2); }

}  // namespace cubicspec::families
