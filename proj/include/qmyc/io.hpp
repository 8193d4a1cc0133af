#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qmyc/symmetry.hpp"

namespace qmyc {

// Weight value that stays exact when the file carried a "p/q" string.
struct WeightValue {
  bool exact = false;
  Rational rational;
  double value = 0.0;

  double as_double() const { return exact ? rational.to_double() : value; }
};

struct RawClassicalFile {
  std::vector<std::vector<double>> adjacency;  // numbers as given, not validated
};

struct RawQuantumFile {
  std::vector<int> blocks;
  std::vector<std::vector<WeightValue>> weights;
  Mat<Cplx> adjacency;
  Normalization normalization = Normalization::SchurDeltaSq;
};

using RawGraphFile = std::variant<RawClassicalFile, RawQuantumFile>;

RawGraphFile read_graph_file(const std::string& path);
RawGraphFile parse_graph_json(const std::string& text);

// Strict conversions; throw Error when the data violates module invariants.
ClassicalGraph to_classical_graph(const RawClassicalFile& raw);
QuantumGraph<Cplx> to_quantum_graph(const RawGraphFile& raw, double tol = kDefaultTol);

std::string graph_to_json(const ClassicalGraph& g);
std::string graph_to_json(const RawQuantumFile& raw);
void write_graph_file(const std::string& path, const std::string& json_text);

// Mycielskian at the file level: classical files stay classical (exact
// path), quantum files are transformed on the float path with exact weight
// bookkeeping whenever the input weights were exact.
RawGraphFile mycielskian_file(const RawGraphFile& raw, int r, double tol = kDefaultTol);

struct RawCertificateFile {
  int aux_dim = 1;
  RawGraphFile source;
  RawGraphFile target;
  Mat<Cplx> p;
};

RawCertificateFile read_certificate_file(const std::string& path);
IsoCertificate<Cplx> to_certificate(const RawCertificateFile& raw, double tol = kDefaultTol);
std::string certificate_to_json(const RawCertificateFile& raw);
RawCertificateFile lift_certificate_file(const RawCertificateFile& raw, int r,
                                         double tol = kDefaultTol);

}  // namespace qmyc
