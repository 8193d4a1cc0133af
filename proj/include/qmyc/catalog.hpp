#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmyc/quantum_graph.hpp"

namespace qmyc {

struct ExpectedData {
  std::optional<bool> has_twins;
  std::optional<long long> det;
  std::optional<bool> quantum_symmetric;
  std::optional<int> twin_pair_count;
};

struct CatalogEntry {
  std::string name;
  ClassicalGraph graph;
  ExpectedData expected;
  std::string note;  // e.g. source erratum remarks
};

// Shipped graphs: the six-vertex list (G6_1..G6_55), the five-vertex list
// (G5_1..G5_9, K5), the three four-vertex graphs (G4_1, G4_2, K4), the two
// Cartesian products, the Tesseract and the circulant candidates.
namespace catalog {

const std::vector<CatalogEntry>& entries();
const CatalogEntry& get(const std::string& name);
std::vector<std::string> names();

// Standard generators.
ClassicalGraph complete(int n);
ClassicalGraph cycle(int n);
ClassicalGraph path(int n);
ClassicalGraph circulant(int n, const std::vector<int>& jumps);
ClassicalGraph hypercube(int k);
ClassicalGraph cartesian_product(const ClassicalGraph& g, const ClassicalGraph& h);

struct ReproductionReport {
  struct Line {
    std::string name;
    bool ok = true;
    std::string detail;
  };
  std::vector<Line> lines;
  int mismatches = 0;
  bool g38_unique_twin_free_singular = false;
  // circulant interpretation -> twin pair count
  std::vector<std::pair<std::string, int>> circulant_twin_counts;
  std::string matching_c10;  // interpretation matching five twin pairs
  std::string matching_c12;  // interpretation matching six twin pairs
};

// Recomputes twin flags and determinants for every stored entry and checks
// them against the expected metadata; also verifies the product graphs and
// reports circulant twin-pair counts per candidate interpretation.
ReproductionReport verify_appendix();

}  // namespace catalog

namespace detail {

struct RawEntry {
  const char* name;
  const char* rows;  // semicolon-separated 0/1 rows
  bool has_twins;
  bool has_det;
  long long det;
  bool quantum_symmetric;
};

const std::vector<RawEntry>& raw_shipped_entries();
const char* raw_k2_box_k5();
const char* raw_c4_box_c3();

ClassicalGraph parse_rows(const char* rows);

}  // namespace detail

}  // namespace qmyc
