#include "cubicspec/maps.hpp"

#include <algorithm>
#include <sstream>

#include "cubicspec/error.hpp"

namespace cubicspec {

Map Map::from_rotations(std::size_t vertex_count, std::size_t edge_count,
                        std::vector<std::vector<Dart>> rotations) {
  if (rotations.size() != vertex_count) {
    fail(ErrorKind::InvalidRotation, "expected " + std::to_string(vertex_count) +
                                         " rotations, got " + std::to_string(rotations.size()));
  }
  if (vertex_count == 0 || edge_count == 0) {
    fail(ErrorKind::InvalidRotation, "a map needs at least one vertex and one edge");
  }
  const std::size_t darts = 2 * edge_count;
  Map m;
  m.sigma_.assign(darts, darts);
  m.sigma_inv_.assign(darts, darts);
  m.vertex_of_.assign(darts, vertex_count);
  for (Vertex v = 0; v < vertex_count; ++v) {
    const auto& rot = rotations[v];
    if (rot.empty()) {
      fail(ErrorKind::Disconnected, "vertex " + std::to_string(v) + " has no darts");
    }
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const Dart d = rot[i];
      if (d >= darts) {
        fail(ErrorKind::InvalidRotation, "dart " + std::to_string(d) + " out of range at vertex " +
                                             std::to_string(v));
      }
      if (m.vertex_of_[d] != vertex_count) {
        fail(ErrorKind::InvalidRotation, "dart " + std::to_string(d) + " listed twice");
      }
      m.vertex_of_[d] = v;
      const Dart next = rot[(i + 1) % rot.size()];
      m.sigma_[d] = next;
    }
  }
  for (Dart d = 0; d < darts; ++d) {
    if (m.vertex_of_[d] == vertex_count) {
      fail(ErrorKind::InvalidRotation, "dart " + std::to_string(d) + " is missing");
    }
    m.sigma_inv_[m.sigma_[d]] = d;
  }
  for (std::size_t e = 0; e < edge_count; ++e) {
    if (m.vertex_of_[2 * e] == m.vertex_of_[2 * e + 1]) {
      fail(ErrorKind::LoopEdge, "edge " + std::to_string(e) + " is a loop");
    }
  }
  m.rotations_ = std::move(rotations);
  if (!is_connected(m.underlying_graph())) fail(ErrorKind::Disconnected, "map is disconnected");
  return m;
}

Multigraph Map::underlying_graph() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count());
  for (std::size_t e = 0; e < edge_count(); ++e) {
    edges.emplace_back(vertex_of_[2 * e], vertex_of_[2 * e + 1]);
  }
  return Multigraph::from_edge_list(vertex_count(), edges);
}

Map Map::mirror() const {
  auto rot = rotations_;
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return from_rotations(vertex_count(), edge_count(), std::move(rot));
}

Map parse_map(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) fail(ErrorKind::ParseError, "map: missing header 'V E'");
  long long v = -1;
  long long e = -1;
  {
    std::istringstream hs(lines[0]);
    std::string extra;
    if (!(hs >> v >> e) || (hs >> extra) || v < 1 || e < 1) {
      fail(ErrorKind::ParseError, "map: bad header '" + lines[0] + "'");
    }
  }
  if (lines.size() != static_cast<std::size_t>(v) + 1) {
    fail(ErrorKind::ParseError, "map: expected " + std::to_string(v) + " rotation lines, got " +
                                    std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Dart>> rotations;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::vector<Dart> rot;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      unsigned long long d = 0;
      try {
        d = std::stoull(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok[0] == '-') {
        fail(ErrorKind::ParseError, "map: bad dart '" + tok + "' on line '" + lines[i] + "'");
      }
      rot.push_back(static_cast<Dart>(d));
    }
    rotations.push_back(std::move(rot));
  }
  return Map::from_rotations(static_cast<std::size_t>(v), static_cast<std::size_t>(e),
                             std::move(rotations));
}

std::string to_map_text(const Map& m) {
  std::ostringstream out;
  out << m.vertex_count() << ' ' << m.edge_count() << '\n';
  for (const auto& rot : m.rotations()) {
    for (std::size_t i = 0; i < rot.size(); ++i) out << (i ? " " : "") << rot[i];
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<Dart>> facial_walks(const Map& m) {
  const std::size_t darts = m.dart_count();
  std::vector<bool> seen(darts, false);
  std::vector<std::vector<Dart>> faces;
  for (Dart start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    std::vector<Dart> face;
    Dart d = start;
    do {
      seen[d] = true;
      face.push_back(d);
      d = m.sigma(Map::alpha(d));
    } while (d != start);
    faces.push_back(std::move(face));
  }
  return faces;
}

std::size_t euler_genus(const Map& m) {
  const long long v = static_cast<long long>(m.vertex_count());
  const long long e = static_cast<long long>(m.edge_count());
  const long long f = static_cast<long long>(facial_walks(m).size());
  const long long defect = 2 - v + e - f;
  if (defect < 0 || defect % 2 != 0) {
    fail(ErrorKind::NonIntegerGenus, "Euler defect " + std::to_string(defect) + " for V=" +
                                         std::to_string(v) + " E=" + std::to_string(e) +
                                         " F=" + std::to_string(f));
  }
  return static_cast<std::size_t>(defect / 2);
}

Multigraph vertex_truncation(const Map& m) {
  for (Vertex v = 0; v < m.vertex_count(); ++v) {
    if (m.rotations()[v].size() < 3) {
      fail(ErrorKind::DegreeTooSmall, "vertex " + std::to_string(v) + " has degree " +
                                          std::to_string(m.rotations()[v].size()));
    }
  }
  std::vector<Edge> edges;
  edges.reserve(m.dart_count() + m.edge_count());
  for (std::size_t e = 0; e < m.edge_count(); ++e) edges.emplace_back(2 * e, 2 * e + 1);
  for (Dart d = 0; d < m.dart_count(); ++d) edges.emplace_back(d, m.sigma(d));
  return Multigraph::from_edge_list(m.dart_count(), edges);
}

Map kmm_map(std::size_t m) {
  if (m < 3) fail(ErrorKind::TooSmall, "kmm_map requires m >= 3, got " + std::to_string(m));
  const std::size_t order = 2 * m;
  auto edge_of = [m](std::size_t even_vertex, std::size_t gen) {
    return (even_vertex / 2) * m + (gen - 1) / 2;
  };
  std::vector<std::vector<Dart>> rotations(order);
  for (std::size_t v = 0; v < order; ++v) {
    for (std::size_t gen = 1; gen < order; gen += 2) {
      if (v % 2 == 0) {
        rotations[v].push_back(2 * edge_of(v, gen));
      } else {
        // The edge reaches v from the even vertex v + gen by generator -gen.
        const std::size_t w = (v + gen) % order;
        rotations[v].push_back(2 * edge_of(w, order - gen) + 1);
      }
    }
  }
  return Map::from_rotations(order, m * m, std::move(rotations));
}

}  // namespace cubicspec
