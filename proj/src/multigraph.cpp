#include "cubicspec/multigraph.hpp"

#include <algorithm>
#include <istream>
#include <queue>
#include <sstream>

#include "cubicspec/error.hpp"

namespace cubicspec {

Multigraph Multigraph::from_edge_list(std::size_t n, std::span<const Edge> pairs) {
  Multigraph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  g.edges_.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u >= n || v >= n) {
      fail(ErrorKind::OutOfRange, "edge {" + std::to_string(u) + "," +
                                      std::to_string(v) + "} has an endpoint >= " +
                                      std::to_string(n));
    }
    if (u == v) {
      fail(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(u));
    }
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  return g;
}

std::size_t Multigraph::multiplicity(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return static_cast<std::size_t>(std::count(nb.begin(), nb.end(), v));
}

std::vector<Edge> Multigraph::sorted_edges() const {
  auto out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> degree_sequence(const Multigraph& g) {
  std::vector<std::size_t> deg(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) deg[v] = g.neighbors(v).size();
  return deg;
}

std::optional<std::size_t> regular_degree(const Multigraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const std::size_t d = g.neighbors(0).size();
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.neighbors(v).size() != d) return std::nullopt;
  }
  return d;
}

bool is_cubic(const Multigraph& g) { return regular_degree(g) == std::size_t{3}; }

std::size_t max_degree(const Multigraph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.neighbors(v).size());
  return d;
}

bool is_connected(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colour(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<VertexSet, VertexSet> sides;
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? sides.first : sides.second).push_back(v);
  return sides;
}

InducedSubgraph induced_subgraph(const Multigraph& g, std::span<const Vertex> s) {
  InducedSubgraph out;
  out.old_to_new.assign(g.vertex_count(), std::nullopt);
  VertexSet kept(s.begin(), s.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (Vertex v : kept) {
    if (v >= g.vertex_count()) {
      fail(ErrorKind::OutOfRange, "vertex " + std::to_string(v) + " not in graph");
    }
    out.old_to_new[v] = out.new_to_old.size();
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (out.old_to_new[u] && out.old_to_new[v]) {
      edges.emplace_back(*out.old_to_new[u], *out.old_to_new[v]);
    }
  }
  out.graph = Multigraph::from_edge_list(kept.size(), edges);
  return out;
}

std::vector<Cycle> cycle_decomposition(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (g.neighbors(v).size() != 2) {
      fail(ErrorKind::NotTwoRegular, "vertex " + std::to_string(v) + " has degree " +
                                         std::to_string(g.neighbors(v).size()));
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<Cycle> cycles;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Cycle cycle{start};
    seen[start] = true;
    const auto& nb0 = g.neighbors(start);
    Vertex prev = start;
    Vertex cur = std::min(nb0[0], nb0[1]);
    while (cur != start) {
      cycle.push_back(cur);
      seen[cur] = true;
      const auto& nb = g.neighbors(cur);
      // Leave by the other edge slot, so a digon returns to where it came from.
      const Vertex next = (nb[0] == prev) ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

Multigraph read_edge_list(std::istream& in) {
  auto next_line = [&in](std::string& line) {
    while (std::getline(in, line)) {
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };
  std::string line;
  if (!next_line(line)) fail(ErrorKind::ParseError, "edge list: missing header 'n m'");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0) {
      fail(ErrorKind::ParseError, "edge list: bad header '" + line + "'");
    }
  }
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) {
      fail(ErrorKind::ParseError, "edge list: expected " + std::to_string(m) +
                                      " edges, got " + std::to_string(i));
    }
    std::istringstream ls(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra) || u < 0 || v < 0) {
      fail(ErrorKind::ParseError, "edge list: bad edge line '" + line + "'");
    }
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line(line)) fail(ErrorKind::ParseError, "edge list: trailing data '" + line + "'");
  return Multigraph::from_edge_list(static_cast<std::size_t>(n), pairs);
}

Multigraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string to_edge_list(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace cubicspec
