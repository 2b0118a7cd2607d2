// Command-line front end. Talks to the library only through the C API.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cubicspec.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct DomainError {
  cubicspec_status status;
};

struct UsageError {
  std::string message;
};

void check(cubicspec_status s) {
  if (s != CUBICSPEC_OK) throw DomainError{s};
}

struct GraphDeleter {
  void operator()(cubicspec_graph* g) const { cubicspec_graph_free(g); }
};
struct MapDeleter {
  void operator()(cubicspec_map* m) const { cubicspec_map_free(m); }
};
struct StringDeleter {
  void operator()(char* s) const { cubicspec_string_free(s); }
};
using GraphPtr = std::unique_ptr<cubicspec_graph, GraphDeleter>;
using MapPtr = std::unique_ptr<cubicspec_map, MapDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError{"cannot open '" + path + "'"};
    buf << in.rdbuf();
  }
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError{"cannot write '" + path + "'"};
  out << text;
}

GraphPtr load_graph(const std::string& path) {
  cubicspec_graph* g = nullptr;
  check(cubicspec_graph_parse(read_input(path).c_str(), &g));
  return GraphPtr(g);
}

MapPtr load_map(const std::string& path) {
  cubicspec_map* m = nullptr;
  check(cubicspec_map_parse(read_input(path).c_str(), &m));
  return MapPtr(m);
}

std::string take(char* s) {
  StringPtr owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string graph_text(const cubicspec_graph* g) {
  char* s = nullptr;
  check(cubicspec_graph_to_text(g, &s));
  return take(s);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto parse_count = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
      throw UsageError{"bad range '" + text + "' (expected N or LO..HI)"};
    }
    return static_cast<std::size_t>(std::stoull(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_count(text);
    return {v, v};
  }
  const auto lo = parse_count(text.substr(0, dots));
  const auto hi = parse_count(text.substr(dots + 2));
  if (lo > hi) throw UsageError{"empty range '" + text + "'"};
  return {lo, hi};
}

double default_tolerance(double fallback) {
  if (const char* env = std::getenv("CUBICSPEC_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) return v;
    throw UsageError{std::string("CUBICSPEC_TOL is not a positive number: ") + env};
  }
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simple-eigenvalue toolkit for cubic vertex-transitive graph families"};
  app.require_subcommand(1);

  std::string out_path;
  std::string in_path;
  std::string family;
  std::vector<std::size_t> params;
  long lambda = 0;
  double tol = 0.0;
  bool columns = false;
  bool as_json = false;
  std::string range;
  std::size_t modulus = 0;

  auto* gen = app.add_subcommand("gen", "Emit a family member as an edge list");
  gen->add_option("family", family, "f2n | prism | gp | tm | cycle | complete | kmn | triple-edge | petersen")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "Numeric spectrum with exact integer multiplicities");
  spectrum->add_option("graph", in_path, "Edge-list file or - for stdin")->required();
  spectrum->add_option("--tol", tol, "Eigensolver residual tolerance");

  auto* mult = app.add_subcommand("mult", "Exact multiplicity of an integer eigenvalue");
  mult->add_option("graph", in_path, "Edge-list file or - for stdin")->required();
  mult->add_option("lambda", lambda, "Integer eigenvalue")->required();

  auto* partition = app.add_subcommand("partition", "Sign partition for eigenvalue 1, type C(m,k), contracted multigraph");
  partition->add_option("graph", in_path, "Edge-list file or - for stdin")->required();
  partition->add_flag("--columns", columns, "Emit vertex/sign columns only");

  auto* certify = app.add_subcommand("certify-bipartite", "Certificate for 1 and -1 both simple");
  certify->add_option("graph", in_path, "Edge-list file or - for stdin")->required();

  auto* truncate = app.add_subcommand("truncate", "Truncation of a cubic multigraph");
  truncate->add_option("graph", in_path, "Edge-list file or - for stdin")->required();
  truncate->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* map_faces = app.add_subcommand("map-faces", "Facial walks and genus of a map");
  map_faces->add_option("map", in_path, "Map file or - for stdin")->required();

  auto* map_truncate = app.add_subcommand("map-truncate", "Vertex truncation of a map as an edge list");
  map_truncate->add_option("map", in_path, "Map file or - for stdin")->required();
  map_truncate->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* map_gen = app.add_subcommand("map-gen", "Emit a built-in map: kmm <m> | mobius-kantor");
  map_gen->add_option("name", family, "kmm | mobius-kantor")->required();
  map_gen->add_option("params", params, "Map parameters");
  map_gen->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* cosine = app.add_subcommand("cosine", "Solutions of cos x + cos y = 2 cos x cos y over Z_m");
  cosine->add_option("m", modulus, "Modulus")->required();
  cosine->add_option("--tol", tol, "Residual tolerance");

  auto* verify = app.add_subcommand("verify", "Sweep a family against the exact rank oracle");
  verify->add_option("family", family, "f2n | prism | gp | tm | truncation")->required();
  verify->add_option("range", range, "N or LO..HI (ignored for truncation)");
  verify->add_flag("--json", as_json, "Structured report instead of the flat table");

  auto* census = app.add_subcommand("census", "Per-map table for every *.map file in a directory");
  census->add_option("dir", in_path, "Directory of map files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      cubicspec_graph* g = nullptr;
      check(cubicspec_graph_generate(family.c_str(), params.data(), params.size(), &g));
      GraphPtr owned(g);
      write_output(out_path, graph_text(g));
    } else if (*spectrum) {
      const double t = tol > 0.0 ? tol : default_tolerance(1e-9);
      auto g = load_graph(in_path);
      char* s = nullptr;
      check(cubicspec_spectrum_report(g.get(), t, &s));
      std::cout << take(s);
    } else if (*mult) {
      auto g = load_graph(in_path);
      std::size_t m = 0;
      check(cubicspec_eigen_multiplicity(g.get(), lambda, &m));
      std::cout << m << '\n';
    } else if (*partition) {
      auto g = load_graph(in_path);
      char* s = nullptr;
      check(cubicspec_partition_report(g.get(), columns ? 1 : 0, &s));
      std::cout << take(s);
    } else if (*certify) {
      auto g = load_graph(in_path);
      char* s = nullptr;
      check(cubicspec_certificate_report(g.get(), &s));
      std::cout << take(s);
    } else if (*truncate) {
      auto g = load_graph(in_path);
      cubicspec_graph* t = nullptr;
      check(cubicspec_graph_truncate(g.get(), &t));
      GraphPtr owned(t);
      write_output(out_path, graph_text(t));
    } else if (*map_faces) {
      auto m = load_map(in_path);
      char* s = nullptr;
      check(cubicspec_map_faces_report(m.get(), &s));
      std::cout << take(s);
    } else if (*map_truncate) {
      auto m = load_map(in_path);
      cubicspec_graph* t = nullptr;
      check(cubicspec_map_truncate(m.get(), &t));
      GraphPtr owned(t);
      write_output(out_path, graph_text(t));
    } else if (*map_gen) {
      if (family == "kmm" && params.size() != 1) throw UsageError{"kmm takes one parameter"};
      cubicspec_map* m = nullptr;
      check(cubicspec_map_bundled(family.c_str(), params.empty() ? 0 : params[0], &m));
      MapPtr owned(m);
      char* s = nullptr;
      check(cubicspec_map_to_text(m, &s));
      write_output(out_path, take(s));
    } else if (*cosine) {
      const double t = tol > 0.0 ? tol : default_tolerance(1e-9);
      char* s = nullptr;
      int match = 0;
      check(cubicspec_cosine_report(modulus, t, &s, &match));
      std::cout << take(s);
    } else if (*verify) {
      std::size_t lo = 0;
      std::size_t hi = 0;
      if (family != "truncation") {
        if (range.empty()) throw UsageError{"verify " + family + " needs a range"};
        std::tie(lo, hi) = parse_range(range);
      }
      char* s = nullptr;
      std::size_t failures = 0;
      check(cubicspec_verify(family.c_str(), lo, hi, as_json ? 1 : 0, &s, &failures));
      std::cout << take(s);
    } else if (*census) {
      namespace fs = std::filesystem;
      std::error_code ec;
      if (!fs::is_directory(in_path, ec)) throw UsageError{"not a directory: '" + in_path + "'"};
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(in_path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".map") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      char* header = nullptr;
      check(cubicspec_census_header(&header));
      std::cout << take(header);
      for (const auto& f : files) {
        auto m = load_map(f.string());
        char* row = nullptr;
        check(cubicspec_census_row(f.filename().string().c_str(), m.get(), &row));
        std::cout << take(row);
      }
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << cubicspec_status_name(e.status) << ": " << cubicspec_last_error() << '\n';
    return kExitDomain;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << '\n';
    return kExitUsage;
  }
  return 0;
}
