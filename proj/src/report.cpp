#include "cubicspec/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

#include "cubicspec/exact_linalg.hpp"

namespace cubicspec::report {

using json = nlohmann::ordered_json;

namespace {

json rounded(double x) {
  if (std::abs(x) < 1e-12) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json edge_array(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

json graph_json(const Multigraph& g) {
  return json{{"n", g.vertex_count()}, {"edges", edge_array(g.edges())}};
}

// One top-level key per line, values compact.
std::string render(const json& obj) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : obj.items()) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "  " + json(key).dump() + ": " + value.dump();
  }
  out += first ? "}\n" : "\n}\n";
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string uniform_or_mixed(const std::vector<std::size_t>& xs) {
  if (xs.empty()) return "mixed";
  for (auto x : xs) {
    if (x != xs.front()) return "mixed";
  }
  return std::to_string(xs.front());
}

}  // namespace

std::string format_double(double x) {
  if (std::abs(x) < 1e-12) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string spectrum_json(const SpectrumReport& r) {
  json out;
  out["n"] = r.n;
  out["edges"] = edge_array(r.edges);
  json ints = json::array();
  for (auto [lambda, mult] : r.integer_eigs) ints.push_back({lambda, mult});
  out["integer_eigs"] = ints;
  json nums = json::array();
  for (double x : r.numeric_eigs) nums.push_back(rounded(x));
  out["numeric_eigs"] = nums;
  out["source"] = std::string(source_name(r.source));
  return render(out);
}

std::string partition_json(const Multigraph& g, const SignPartition& p) {
  const Multigraph contracted = contracted_multigraph(g, p);
  json out;
  out["n"] = g.vertex_count();
  out["eigenvalue"] = 1;
  out["vplus"] = p.vplus;
  out["vminus"] = p.vminus;
  out["matching"] = edge_array(p.matching);
  out["type"] = {{"m", p.cycle_count}, {"k", p.cycle_length}};
  out["plus_cycles"] = p.plus_cycles;
  out["minus_cycles"] = p.minus_cycles;
  json c = graph_json(contracted);
  const auto deg = regular_degree(contracted);
  c["regular_degree"] = deg ? json(*deg) : json(nullptr);
  c["bipartite"] = bipartition(contracted).has_value();
  out["contracted"] = c;
  return render(out);
}

std::string partition_columns(const Multigraph& g, const SignPartition& p) {
  std::vector<int> sign(g.vertex_count(), -1);
  for (Vertex v : p.vplus) sign[v] = 1;
  std::ostringstream out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << v << ' ' << (sign[v] > 0 ? "+1" : "-1") << '\n';
  return out.str();
}

std::string certificate_json(const BothSimpleCertificate& c) {
  json out;
  out["mult_plus_one"] = c.mult_plus_one;
  out["mult_minus_one"] = c.mult_minus_one;
  out["bipartite"] = c.bipartite;
  out["applicable"] = c.applicable;
  if (c.applicable) {
    out["w_pp"] = c.w_pp;
    out["w_pm"] = c.w_pm;
    out["w_mp"] = c.w_mp;
    out["w_mm"] = c.w_mm;
    out["w_bipartition_verified"] = c.w_bipartition_verified;
    out["w_sets_independent"] = c.w_sets_independent;
    if (c.w_quotient) {
      json b = json::array();
      for (std::size_t i = 0; i < c.w_quotient->b.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < c.w_quotient->b.cols(); ++j) {
          row.push_back(c.w_quotient->b(i, j).get_si());
        }
        b.push_back(row);
      }
      out["w_quotient"] = b;
    } else {
      out["w_quotient"] = nullptr;
    }
  }
  out["implication_holds"] = !(c.mult_plus_one == 1 && c.mult_minus_one == 1) || c.bipartite;
  return render(out);
}

std::string faces_json(const Map& m) {
  const auto faces = facial_walks(m);
  json out;
  out["V"] = m.vertex_count();
  out["E"] = m.edge_count();
  out["F"] = faces.size();
  out["genus"] = euler_genus(m);
  json degrees = json::array();
  for (const auto& f : faces) degrees.push_back(f.size());
  out["face_degrees"] = degrees;
  out["faces"] = faces;
  return render(out);
}

std::string cosine_text(const CosineSolutionSet& enumerated, const CosineSolutionSet& predicted) {
  auto list = [](const CosineSolutionSet& s) {
    std::ostringstream out;
    out << '(' << s.solutions.size() << "):";
    for (auto [j, l] : s.solutions) out << " (" << j << ',' << l << ')';
    return out.str();
  };
  std::ostringstream out;
  out << "m = " << enumerated.m << '\n';
  out << "enumerated " << list(enumerated) << '\n';
  out << "predicted  " << list(predicted) << '\n';
  out << "verdict: " << (enumerated.solutions == predicted.solutions ? "MATCH" : "MISMATCH") << '\n';
  return out.str();
}

std::string verification_table(const VerificationReport& r) {
  std::ostringstream out;
  out << "# family=" << r.family << " grid=" << r.grid << '\n';
  out << "params\tpredicted\tmult1\tagree\tclosed_count\tvertex_transitive\n";
  for (const auto& row : r.rows) {
    if (row.error) {
      out << "ERROR\t" << row.params << '\t' << *row.error << '\n';
      continue;
    }
    if (!row.ok()) out << "DISAGREE\t";
    out << row.params << '\t' << yes_no(row.predicted) << '\t' << row.multiplicity << '\t'
        << yes_no(row.agree) << '\t'
        << (row.closed_count ? std::to_string(*row.closed_count) : "-") << '\t'
        << (row.vertex_transitive ? yes_no(*row.vertex_transitive) : "-") << '\n';
  }
  out << "# rows=" << r.rows.size() << " agreed=" << r.agreed << " disagreed=" << r.disagreed
      << " errored=" << r.errored << '\n';
  return out.str();
}

std::string verification_json(const VerificationReport& r) {
  json out;
  out["family"] = r.family;
  out["grid"] = r.grid;
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j;
    j["params"] = row.params;
    if (row.error) {
      j["error"] = *row.error;
    } else {
      j["predicted"] = row.predicted;
      j["multiplicity"] = row.multiplicity;
      j["agree"] = row.agree;
      j["closed_count"] = row.closed_count ? json(*row.closed_count) : json(nullptr);
      j["vertex_transitive"] = row.vertex_transitive ? json(*row.vertex_transitive) : json(nullptr);
    }
    rows.push_back(j);
  }
  out["rows"] = rows;
  out["summary"] = {{"rows", r.rows.size()},
                    {"agreed", r.agreed},
                    {"disagreed", r.disagreed},
                    {"errored", r.errored}};
  return render(out);
}

CensusRow census_row(const std::string& name, const Map& m) {
  CensusRow row;
  row.name = name;
  row.edges = m.edge_count();
  row.vertices = m.vertex_count();
  const auto faces = facial_walks(m);
  row.faces = faces.size();
  row.genus = euler_genus(m);
  std::vector<std::size_t> vdeg;
  for (const auto& rot : m.rotations()) vdeg.push_back(rot.size());
  std::vector<std::size_t> fdeg;
  for (const auto& f : faces) fdeg.push_back(f.size());
  row.vertex_degree = uniform_or_mixed(vdeg);
  row.face_degree = uniform_or_mixed(fdeg);
  const Multigraph t = vertex_truncation(m);
  row.truncation_order = t.vertex_count();
  row.truncation_bipartite = bipartition(t).has_value();
  row.mult_one = eigen_multiplicity(t, 1);
  return row;
}

std::string census_header() {
  return "map\t|E|\t|V|\t|F|\torientability\tgenus\td(v)\td(f)\ttruncation\ttruncation_order\tmult1\n";
}

std::string census_line(const CensusRow& row) {
  std::ostringstream out;
  out << row.name << '\t' << row.edges << '\t' << row.vertices << '\t' << row.faces
      << "\torientable\t" << row.genus << '\t' << row.vertex_degree << '\t' << row.face_degree
      << '\t' << (row.truncation_bipartite ? "bipartite" : "-") << '\t' << row.truncation_order
      << '\t' << row.mult_one << '\n';
  return out.str();
}

}  // namespace cubicspec::report
