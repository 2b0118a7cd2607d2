#include "cubicspec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "cubicspec/classify.hpp"
#include "cubicspec/cosine.hpp"
#include "cubicspec/error.hpp"
#include "cubicspec/exact_linalg.hpp"
#include "cubicspec/families.hpp"
#include "cubicspec/maps.hpp"
#include "cubicspec/report.hpp"
#include "cubicspec/spectra.hpp"
#include "cubicspec/structure.hpp"

struct cubicspec_graph {
  cubicspec::Multigraph g;
};

struct cubicspec_map {
  cubicspec::Map m;
};

namespace {

using namespace cubicspec;

thread_local std::string last_error;

cubicspec_status set_error(cubicspec_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
cubicspec_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return CUBICSPEC_OK;
  } catch (const Error& e) {
    return set_error(static_cast<cubicspec_status>(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(CUBICSPEC_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(CUBICSPEC_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) fail(ErrorKind::InvalidArgument, what);
}

void require_params(std::size_t count, std::size_t want, const std::string& family) {
  if (count != want) {
    fail(ErrorKind::InvalidArgument, family + " takes " + std::to_string(want) + " parameter(s), got " +
                                         std::to_string(count));
  }
}

Multigraph generate(const std::string& family, const std::size_t* p, std::size_t count) {
  using namespace cubicspec::families;
  if (count > 0) require(p != nullptr, "null parameter array");
  if (family == "f2n") return require_params(count, 1, family), f2n(p[0]);
  if (family == "prism") return require_params(count, 1, family), prism(p[0]);
  if (family == "gp") return require_params(count, 2, family), gen_petersen(p[0], p[1]);
  if (family == "tm") return require_params(count, 1, family), t_m(p[0]);
  if (family == "cycle") return require_params(count, 1, family), cycle(p[0]);
  if (family == "complete") return require_params(count, 1, family), complete(p[0]);
  if (family == "kmn") return require_params(count, 2, family), complete_bipartite(p[0], p[1]);
  if (family == "triple-edge") return require_params(count, 0, family), triple_edge();
  if (family == "petersen") return require_params(count, 0, family), petersen();
  fail(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
}

}  // namespace

extern "C" {

const char* cubicspec_status_name(cubicspec_status status) {
  if (status == CUBICSPEC_OK) return "OK";
  if (status == CUBICSPEC_INTERNAL) return "Internal";
  const auto kind = static_cast<ErrorKind>(status);
  return error_name(kind).data();
}

const char* cubicspec_last_error(void) { return last_error.c_str(); }

void cubicspec_string_free(char* s) { std::free(s); }

cubicspec_status cubicspec_graph_from_edges(size_t n, const size_t* endpoints, size_t edge_count,
                                            cubicspec_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    require(edge_count == 0 || endpoints != nullptr, "null endpoint array");
    std::vector<Edge> pairs;
    pairs.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) pairs.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    *out = new cubicspec_graph{Multigraph::from_edge_list(n, pairs)};
  });
}

cubicspec_status cubicspec_graph_parse(const char* text, cubicspec_graph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new cubicspec_graph{parse_edge_list(text)};
  });
}

cubicspec_status cubicspec_graph_generate(const char* family, const size_t* params,
                                          size_t param_count, cubicspec_graph** out) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "null argument");
    *out = new cubicspec_graph{generate(family, params, param_count)};
  });
}

void cubicspec_graph_free(cubicspec_graph* g) { delete g; }

size_t cubicspec_graph_vertex_count(const cubicspec_graph* g) { return g ? g->g.vertex_count() : 0; }

size_t cubicspec_graph_edge_count(const cubicspec_graph* g) { return g ? g->g.edge_count() : 0; }

cubicspec_status cubicspec_graph_edge(const cubicspec_graph* g, size_t index, size_t* u, size_t* v) {
  return guarded([&] {
    require(g != nullptr && u != nullptr && v != nullptr, "null argument");
    if (index >= g->g.edge_count()) fail(ErrorKind::OutOfRange, "edge index out of range");
    *u = g->g.edges()[index].first;
    *v = g->g.edges()[index].second;
  });
}

cubicspec_status cubicspec_graph_to_text(const cubicspec_graph* g, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = dup_string(to_edge_list(g->g));
  });
}

cubicspec_status cubicspec_graph_truncate(const cubicspec_graph* g, cubicspec_graph** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = new cubicspec_graph{families::truncate_cubic(g->g)};
  });
}

cubicspec_status cubicspec_eigen_multiplicity(const cubicspec_graph* g, long lambda, size_t* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = eigen_multiplicity(g->g, lambda);
  });
}

cubicspec_status cubicspec_spectrum_report(const cubicspec_graph* g, double tol, char** out_json) {
  return guarded([&] {
    require(g != nullptr && out_json != nullptr, "null argument");
    require(tol > 0.0, "tolerance must be positive");
    *out_json = dup_string(report::spectrum_json(spectrum_report(g->g, tol)));
  });
}

cubicspec_status cubicspec_partition_report(const cubicspec_graph* g, int columns, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    const SignPartition p = sign_partition(g->g);
    *out = dup_string(columns ? report::partition_columns(g->g, p) : report::partition_json(g->g, p));
  });
}

cubicspec_status cubicspec_certificate_report(const cubicspec_graph* g, char** out_json) {
  return guarded([&] {
    require(g != nullptr && out_json != nullptr, "null argument");
    *out_json = dup_string(report::certificate_json(both_simple_certificate(g->g)));
  });
}

cubicspec_status cubicspec_map_parse(const char* text, cubicspec_map** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new cubicspec_map{parse_map(text)};
  });
}

cubicspec_status cubicspec_map_bundled(const char* name, size_t param, cubicspec_map** out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    const std::string n = name;
    if (n == "kmm") {
      *out = new cubicspec_map{kmm_map(param)};
    } else if (n == "mobius-kantor") {
      *out = new cubicspec_map{mobius_kantor_map()};
    } else {
      fail(ErrorKind::InvalidArgument, "unknown bundled map '" + n + "'");
    }
  });
}

void cubicspec_map_free(cubicspec_map* m) { delete m; }

cubicspec_status cubicspec_map_to_text(const cubicspec_map* m, char** out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = dup_string(to_map_text(m->m));
  });
}

cubicspec_status cubicspec_map_faces_report(const cubicspec_map* m, char** out_json) {
  return guarded([&] {
    require(m != nullptr && out_json != nullptr, "null argument");
    *out_json = dup_string(report::faces_json(m->m));
  });
}

cubicspec_status cubicspec_map_truncate(const cubicspec_map* m, cubicspec_graph** out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = new cubicspec_graph{vertex_truncation(m->m)};
  });
}

cubicspec_status cubicspec_census_header(char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = dup_string(report::census_header());
  });
}

cubicspec_status cubicspec_census_row(const char* name, const cubicspec_map* m, char** out) {
  return guarded([&] {
    require(name != nullptr && m != nullptr && out != nullptr, "null argument");
    *out = dup_string(report::census_line(report::census_row(name, m->m)));
  });
}

cubicspec_status cubicspec_cosine_report(size_t m, double tol, char** out, int* match) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(tol > 0.0, "tolerance must be positive");
    const auto enumerated = roots1_solutions(m, tol);
    const auto predicted = predicted_solutions(m);
    *out = dup_string(report::cosine_text(enumerated, predicted));
    if (match) *match = enumerated.solutions == predicted.solutions ? 1 : 0;
  });
}

cubicspec_status cubicspec_near_miss_scan(size_t m_max, double* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = near_miss_scan(m_max);
  });
}

cubicspec_status cubicspec_verify(const char* family, size_t lo, size_t hi, int json, char** out,
                                  size_t* failures) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "null argument");
    require(lo <= hi, "empty range");
    const VerificationReport r = verify_family(family, lo, hi);
    *out = dup_string(json ? report::verification_json(r) : report::verification_table(r));
    if (failures) *failures = r.disagreed + r.errored;
  });
}

}  // extern "C"
