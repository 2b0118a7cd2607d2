#pragma once

#include <string>

#include "cubicspec/classify.hpp"
#include "cubicspec/cosine.hpp"
#include "cubicspec/maps.hpp"
#include "cubicspec/spectra.hpp"
#include "cubicspec/structure.hpp"

// Text renderings shared by the C API and the CLI. Structured reports are JSON
// with a fixed key order; floats carry 12 significant digits, and values within
// 1e-12 of zero print as 0.
namespace cubicspec::report {

std::string format_double(double x);

std::string spectrum_json(const SpectrumReport& r);

std::string partition_json(const Multigraph& g, const SignPartition& p);
// "vertex sign" lines, one per vertex.
std::string partition_columns(const Multigraph& g, const SignPartition& p);

std::string certificate_json(const BothSimpleCertificate& c);

std::string faces_json(const Map& m);

// Enumerated and predicted sets side by side plus a MATCH/MISMATCH verdict.
std::string cosine_text(const CosineSolutionSet& enumerated, const CosineSolutionSet& predicted);

// One tab-separated row per instance; failing rows start with "DISAGREE".
std::string verification_table(const VerificationReport& r);
std::string verification_json(const VerificationReport& r);

struct CensusRow {
  std::string name;
  std::size_t edges = 0, vertices = 0, faces = 0, genus = 0;
  std::string vertex_degree, face_degree;  // a number, or "mixed"
  bool truncation_bipartite = false;
  std::size_t truncation_order = 0;
  std::size_t mult_one = 0;
};

CensusRow census_row(const std::string& name, const Map& m);
std::string census_header();
std::string census_line(const CensusRow& row);

}  // namespace cubicspec::report
