#include "cubicspec/structure.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "cubicspec/error.hpp"

namespace cubicspec {

namespace {

void require_cubic_connected(const Multigraph& g, const char* what) {
  if (!is_cubic(g)) fail(ErrorKind::NotCubic, std::string(what) + ": graph is not cubic");
  if (!is_connected(g)) fail(ErrorKind::Disconnected, std::string(what) + ": graph is disconnected");
}

[[noreturn]] void violation(const std::string& clause, const std::string& detail) {
  fail(ErrorKind::StructureViolation, clause + ": " + detail);
}

std::vector<Cycle> side_cycles(const Multigraph& g, const VertexSet& side) {
  const InducedSubgraph sub = induced_subgraph(g, side);
  std::vector<Cycle> cycles;
  try {
    cycles = cycle_decomposition(sub.graph);
  } catch (const Error& e) {
    violation("two-regular-sides", e.what());
  }
  for (auto& c : cycles) {
    for (auto& v : c) v = sub.new_to_old[v];
  }
  return cycles;
}

}  // namespace

std::vector<int> pm1_eigenvector(const Multigraph& g, long lambda) {
  const auto basis = rational_nullspace(adjacency_matrix(g).shifted(lambda));
  if (basis.size() != 1) {
    fail(ErrorKind::NotSimple, "eigenvalue " + std::to_string(lambda) + " has multiplicity " +
                                   std::to_string(basis.size()));
  }
  const RationalVector& z = basis.front();
  if (z.empty() || z[0] == 0) {
    fail(ErrorKind::NotPlusMinusOne, "eigenvector vanishes at vertex 0");
  }
  const mpq_class scale = z[0];
  std::vector<int> out(z.size());
  for (std::size_t v = 0; v < z.size(); ++v) {
    const mpq_class x = z[v] / scale;
    if (x == 1) {
      out[v] = 1;
    } else if (x == -1) {
      out[v] = -1;
    } else {
      fail(ErrorKind::NotPlusMinusOne,
           "eigenvector entry at vertex " + std::to_string(v) + " is " + x.get_str());
    }
  }
  return out;
}

SignPartition sign_partition(const Multigraph& g) {
  require_cubic_connected(g, "sign_partition");
  const std::vector<int> z = pm1_eigenvector(g, 1);
  const std::size_t n = g.vertex_count();

  SignPartition p;
  for (Vertex v = 0; v < n; ++v) (z[v] > 0 ? p.vplus : p.vminus).push_back(v);

  for (Vertex v = 0; v < n; ++v) {
    std::size_t same = 0;
    for (Vertex w : g.neighbors(v)) same += (z[w] == z[v]) ? 1 : 0;
    if (same != 2) {
      violation("two-regular-sides", "vertex " + std::to_string(v) + " has " +
                                         std::to_string(same) + " neighbours on its own side");
    }
  }

  std::vector<std::size_t> covered(n, 0);
  for (auto [u, v] : g.edges()) {
    if (z[u] == z[v]) continue;
    p.matching.emplace_back(z[u] > 0 ? u : v, z[u] > 0 ? v : u);
    ++covered[u];
    ++covered[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (covered[v] != 1) {
      violation("perfect-matching", "vertex " + std::to_string(v) + " meets " +
                                        std::to_string(covered[v]) + " cross edges");
    }
  }

  p.plus_cycles = side_cycles(g, p.vplus);
  p.minus_cycles = side_cycles(g, p.vminus);
  if (p.plus_cycles.size() != p.minus_cycles.size()) {
    violation("equal-cycle-lengths", "sides have " + std::to_string(p.plus_cycles.size()) +
                                         " and " + std::to_string(p.minus_cycles.size()) +
                                         " cycles");
  }
  const std::size_t k = p.plus_cycles.front().size();
  for (const auto* side : {&p.plus_cycles, &p.minus_cycles}) {
    for (const auto& c : *side) {
      if (c.size() != k) {
        violation("equal-cycle-lengths", "found cycles of lengths " + std::to_string(k) +
                                             " and " + std::to_string(c.size()));
      }
    }
  }
  p.cycle_count = p.plus_cycles.size();
  p.cycle_length = k;
  return p;
}

std::size_t unique_two_regular_partition(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxExhaustiveOrder) {
    fail(ErrorKind::TooLarge, "exhaustive partition search is limited to " +
                                  std::to_string(kMaxExhaustiveOrder) + " vertices");
  }
  if (!is_cubic(g)) fail(ErrorKind::NotCubic, "unique_two_regular_partition: graph is not cubic");

  // Breadth-first order keeps constraints local, which prunes early.
  std::vector<Vertex> order;
  std::vector<bool> queued(n, false);
  for (Vertex root = 0; root < n; ++root) {
    if (queued[root]) continue;
    std::queue<Vertex> q;
    q.push(root);
    queued[root] = true;
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      order.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!queued[w]) {
          queued[w] = true;
          q.push(w);
        }
      }
    }
  }

  std::vector<int> side(n, -1);
  // Every vertex needs exactly two same-side and one cross neighbour.
  auto consistent = [&](Vertex v) {
    std::size_t same = 0;
    std::size_t cross = 0;
    for (Vertex w : g.neighbors(v)) {
      if (side[w] < 0) continue;
      (side[w] == side[v] ? same : cross) += 1;
    }
    return same <= 2 && cross <= 1;
  };

  std::size_t count = 0;
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    const Vertex v = order[i];
    // Vertex 0 is pinned to side 0 so each unordered partition counts once.
    const int first = 0;
    const int last = (v == 0) ? 0 : 1;
    for (int s = first; s <= last; ++s) {
      side[v] = s;
      bool ok = consistent(v);
      for (Vertex w : g.neighbors(v)) {
        if (!ok) break;
        if (side[w] >= 0) ok = consistent(w);
      }
      if (ok) self(self, i + 1);
    }
    side[v] = -1;
  };
  if (n > 0) search(search, 0);
  return count;
}

Multigraph contracted_multigraph(const Multigraph& g, const SignPartition& p) {
  const std::size_t m = p.plus_cycles.size();
  std::vector<std::size_t> cycle_of(g.vertex_count(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex v : p.plus_cycles[i]) cycle_of[v] = i;
  }
  for (std::size_t i = 0; i < p.minus_cycles.size(); ++i) {
    for (Vertex v : p.minus_cycles[i]) cycle_of[v] = m + i;
  }
  std::vector<Edge> edges;
  edges.reserve(p.matching.size());
  for (auto [a, b] : p.matching) edges.emplace_back(cycle_of[a], cycle_of[b]);
  return Multigraph::from_edge_list(m + p.minus_cycles.size(), edges);
}

std::optional<QuotientMatrix> check_equitable(const Multigraph& g,
                                              std::span<const VertexSet> parts) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> part_of(n, parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) fail(ErrorKind::NotAPartition, "part " + std::to_string(i) + " is empty");
    for (Vertex v : parts[i]) {
      if (v >= n) fail(ErrorKind::NotAPartition, "vertex " + std::to_string(v) + " out of range");
      if (part_of[v] != parts.size()) {
        fail(ErrorKind::NotAPartition, "vertex " + std::to_string(v) + " is in two parts");
      }
      part_of[v] = i;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (part_of[v] == parts.size()) {
      fail(ErrorKind::NotAPartition, "vertex " + std::to_string(v) + " is in no part");
    }
  }

  const std::size_t q = parts.size();
  QuotientMatrix out;
  out.parts.assign(parts.begin(), parts.end());
  out.b = IntMatrix(q, q);
  std::vector<long> row(q);
  for (std::size_t i = 0; i < q; ++i) {
    bool first = true;
    for (Vertex v : parts[i]) {
      std::fill(row.begin(), row.end(), 0);
      for (Vertex w : g.neighbors(v)) ++row[part_of[w]];
      if (first) {
        for (std::size_t j = 0; j < q; ++j) out.b(i, j) = row[j];
        first = false;
      } else {
        for (std::size_t j = 0; j < q; ++j) {
          if (out.b(i, j) != row[j]) return std::nullopt;
        }
      }
    }
  }
  return out;
}

BothSimpleCertificate both_simple_certificate(const Multigraph& g) {
  require_cubic_connected(g, "both_simple_certificate");
  BothSimpleCertificate c;
  const IntMatrix a = adjacency_matrix(g);
  const std::size_t n = g.vertex_count();
  c.mult_plus_one = n - integer_rank(a.shifted(1));
  c.mult_minus_one = n - integer_rank(a.shifted(-1));
  c.bipartite = bipartition(g).has_value();
  if (c.mult_plus_one != 1 || c.mult_minus_one != 1) return c;

  std::vector<int> z;
  std::vector<int> u;
  try {
    z = pm1_eigenvector(g, 1);
    u = pm1_eigenvector(g, -1);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotPlusMinusOne) throw;
    return c;
  }
  c.applicable = true;
  for (Vertex v = 0; v < n; ++v) {
    auto& target = z[v] > 0 ? (u[v] > 0 ? c.w_pp : c.w_pm) : (u[v] > 0 ? c.w_mp : c.w_mm);
    target.push_back(v);
  }
  // Colour 0 = W++ u W--, colour 1 = W+- u W-+.
  auto colour = [&](Vertex v) { return z[v] == u[v] ? 0 : 1; };
  auto label = [&](Vertex v) { return (z[v] > 0 ? 0 : 2) + (u[v] > 0 ? 0 : 1); };
  c.w_bipartition_verified = true;
  c.w_sets_independent = true;
  for (auto [x, y] : g.edges()) {
    if (colour(x) == colour(y)) c.w_bipartition_verified = false;
    if (label(x) == label(y)) c.w_sets_independent = false;
  }
  if (!c.w_pp.empty() && !c.w_pm.empty() && !c.w_mp.empty() && !c.w_mm.empty()) {
    const std::vector<VertexSet> parts{c.w_pp, c.w_pm, c.w_mp, c.w_mm};
    c.w_quotient = check_equitable(g, parts);
  }
  return c;
}

}  // namespace cubicspec
