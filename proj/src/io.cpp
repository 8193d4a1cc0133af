#include "qmyc/io.hpp"

#include <fstream>

#include <json.hpp>

#include "qmyc/mycielski.hpp"

namespace qmyc {

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

WeightValue parse_weight(const json& j) {
  WeightValue w;
  if (j.is_string()) {
    w.exact = true;
    w.rational = Rational::from_string(j.get<std::string>());
  } else if (j.is_number()) {
    w.value = j.get<double>();
  } else {
    throw ParseError("weight must be a number or a \"p/q\" string");
  }
  return w;
}

Cplx parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex entries must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

RawGraphFile parse_graph(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("graph file: missing kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "classical") {
    RawClassicalFile raw;
    int n = j.at("n").get<int>();
    const json& adj = j.at("adjacency");
    if (!adj.is_array() || static_cast<int>(adj.size()) != n)
      throw ParseError("graph file: adjacency must be an n x n array");
    for (const auto& row : adj) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw ParseError("graph file: adjacency must be an n x n array");
      std::vector<double> r;
      for (const auto& v : row) {
        if (!v.is_number()) throw ParseError("graph file: adjacency entries must be numbers");
        r.push_back(v.get<double>());
      }
      raw.adjacency.push_back(std::move(r));
    }
    return raw;
  }
  if (kind == "quantum") {
    RawQuantumFile raw;
    for (const auto& b : j.at("blocks")) raw.blocks.push_back(b.get<int>());
    for (const auto& blk : j.at("weights")) {
      std::vector<WeightValue> w;
      for (const auto& v : blk) w.push_back(parse_weight(v));
      raw.weights.push_back(std::move(w));
    }
    int dim = 0;
    for (int b : raw.blocks) {
      if (b < 1) throw ParseError("graph file: block dims must be positive");
      dim += b * b;
    }
    const json& adj = j.at("adjacency");
    if (static_cast<int>(adj.size()) != dim)
      throw ParseError("graph file: adjacency must match the GNS dimension");
    raw.adjacency = Mat<Cplx>(dim, dim);
    for (int i = 0; i < dim; ++i) {
      if (static_cast<int>(adj[i].size()) != dim)
        throw ParseError("graph file: adjacency must be square");
      for (int c = 0; c < dim; ++c) raw.adjacency(i, c) = parse_complex(adj[i][c]);
    }
    std::string norm = j.value("normalization", "delta_sq");
    if (norm == "delta_sq")
      raw.normalization = Normalization::SchurDeltaSq;
    else if (norm == "one")
      raw.normalization = Normalization::SchurOne;
    else
      throw ParseError("graph file: normalization must be delta_sq or one");
    return raw;
  }
  throw ParseError("graph file: kind must be classical or quantum");
}

json weight_to_json(const WeightValue& w) {
  if (w.exact) return json(w.rational.to_string());
  return json(w.value);
}

json complex_to_json(const Cplx& z) { return json::array({z.real(), z.imag()}); }

json graph_json(const ClassicalGraph& g) {
  json adj = json::array();
  for (const auto& row : g.adj) adj.push_back(row);
  return json{{"kind", "classical"}, {"n", g.n}, {"adjacency", adj}};
}

json graph_json(const RawQuantumFile& raw) {
  json weights = json::array();
  for (const auto& blk : raw.weights) {
    json w = json::array();
    for (const auto& v : blk) w.push_back(weight_to_json(v));
    weights.push_back(w);
  }
  json adj = json::array();
  for (int i = 0; i < raw.adjacency.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < raw.adjacency.cols(); ++c)
      row.push_back(complex_to_json(raw.adjacency(i, c)));
    adj.push_back(row);
  }
  return json{{"kind", "quantum"},
              {"blocks", raw.blocks},
              {"weights", weights},
              {"adjacency", adj},
              {"normalization",
               raw.normalization == Normalization::SchurDeltaSq ? "delta_sq" : "one"}};
}

json graph_json(const RawGraphFile& raw) {
  if (std::holds_alternative<RawClassicalFile>(raw))
    return graph_json(to_classical_graph(std::get<RawClassicalFile>(raw)));
  return graph_json(std::get<RawQuantumFile>(raw));
}

}  // namespace

RawGraphFile read_graph_file(const std::string& path) { return parse_graph(load_json(path)); }

RawGraphFile parse_graph_json(const std::string& text) {
  try {
    return parse_graph(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

ClassicalGraph to_classical_graph(const RawClassicalFile& raw) {
  ClassicalGraph g;
  g.n = static_cast<int>(raw.adjacency.size());
  for (const auto& row : raw.adjacency) {
    std::vector<int> r;
    for (double v : row) {
      if (v != 0.0 && v != 1.0)
        throw Error("classical graph: adjacency entries must be 0 or 1");
      r.push_back(static_cast<int>(v));
    }
    g.adj.push_back(std::move(r));
  }
  g.validate();
  return g;
}

QuantumGraph<Cplx> to_quantum_graph(const RawGraphFile& raw, double tol) {
  if (std::holds_alternative<RawClassicalFile>(raw)) {
    const auto& c = std::get<RawClassicalFile>(raw);
    int n = static_cast<int>(c.adjacency.size());
    if (n < 1) throw Error("graph file: empty adjacency");
    BlockAlgebra alg = make_algebra(std::vector<int>(n, 1));
    std::vector<std::vector<Cplx>> weights(n, {Cplx{1.0 / n, 0.0}});
    DeltaForm<Cplx> form = validate_delta_form(alg, weights, tol);
    QuantumGraph<Cplx> qg{make_gns_space(alg, form), Mat<Cplx>(n, n),
                          Normalization::SchurDeltaSq};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) qg.adjacency(i, j) = Cplx{c.adjacency[i][j], 0.0};
    return qg;
  }
  const auto& q = std::get<RawQuantumFile>(raw);
  BlockAlgebra alg = make_algebra(q.blocks);
  std::vector<std::vector<Cplx>> weights;
  for (const auto& blk : q.weights) {
    std::vector<Cplx> w;
    for (const auto& v : blk) w.push_back(Cplx{v.as_double(), 0.0});
    weights.push_back(std::move(w));
  }
  DeltaForm<Cplx> form = validate_delta_form(alg, weights, tol);
  return QuantumGraph<Cplx>{make_gns_space(alg, form), q.adjacency, q.normalization};
}

std::string graph_to_json(const ClassicalGraph& g) { return graph_json(g).dump(2) + "\n"; }

std::string graph_to_json(const RawQuantumFile& raw) { return graph_json(raw).dump(2) + "\n"; }

void write_graph_file(const std::string& path, const std::string& json_text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << json_text;
}

RawGraphFile mycielskian_file(const RawGraphFile& raw, int r, double tol) {
  if (std::holds_alternative<RawClassicalFile>(raw)) {
    ClassicalGraph g = to_classical_graph(std::get<RawClassicalFile>(raw));
    QuantumGraph<Radical> mu = mycielskian(from_classical<Radical>(g), r);
    ClassicalGraph out = to_classical(mu);
    RawClassicalFile file;
    for (const auto& row : out.adj)
      file.adjacency.push_back(std::vector<double>(row.begin(), row.end()));
    return file;
  }
  const auto& q = std::get<RawQuantumFile>(raw);
  QuantumGraph<Cplx> qg = to_quantum_graph(raw, tol);
  QuantumGraph<Cplx> mu = mycielskian(qg, r, tol);
  if (r == 1) return raw;
  RawQuantumFile out;
  out.normalization = q.normalization;
  for (int b : mu.space.algebra.block_dims) out.blocks.push_back(b);
  bool exact = true;
  for (const auto& blk : q.weights)
    for (const auto& w : blk) exact = exact && w.exact;
  if (exact) {
    Rational delta_sq(0);
    for (const auto& w : q.weights[0]) delta_sq += Rational(1) / w.rational;
    Rational denom = Rational(1) + Rational(r) * delta_sq;
    out.weights.push_back({WeightValue{true, Rational(1) / denom, 0.0}});
    Rational scale = delta_sq / denom;
    for (int k = 0; k < r; ++k)
      for (const auto& blk : q.weights) {
        std::vector<WeightValue> w;
        for (const auto& v : blk) w.push_back(WeightValue{true, v.rational * scale, 0.0});
        out.weights.push_back(std::move(w));
      }
  } else {
    for (int b = 0; b < mu.space.algebra.num_blocks(); ++b) {
      std::vector<WeightValue> w;
      for (const auto& v : mu.space.form.weights[b])
        w.push_back(WeightValue{false, Rational(0), v.real()});
      out.weights.push_back(std::move(w));
    }
  }
  out.adjacency = mu.adjacency;
  return out;
}

RawCertificateFile read_certificate_file(const std::string& path) {
  json j = load_json(path);
  try {
    RawCertificateFile raw;
    raw.aux_dim = j.at("aux_dim").get<int>();
    if (raw.aux_dim < 1) throw ParseError("certificate: aux_dim must be >= 1");
    raw.source = parse_graph(j.at("source"));
    raw.target = parse_graph(j.at("target"));
    const json& p = j.at("p");
    int rows_blocks = static_cast<int>(p.size());
    if (rows_blocks == 0) throw ParseError("certificate: empty block matrix");
    int cols_blocks = static_cast<int>(p[0].size());
    int d = raw.aux_dim;
    raw.p = Mat<Cplx>(rows_blocks * d, cols_blocks * d);
    for (int i = 0; i < rows_blocks; ++i) {
      if (static_cast<int>(p[i].size()) != cols_blocks)
        throw ParseError("certificate: ragged block matrix");
      for (int jc = 0; jc < cols_blocks; ++jc) {
        const json& blk = p[i][jc];
        if (static_cast<int>(blk.size()) != d)
          throw ParseError("certificate: block is not d x d");
        for (int a = 0; a < d; ++a) {
          if (static_cast<int>(blk[a].size()) != d)
            throw ParseError("certificate: block is not d x d");
          for (int b = 0; b < d; ++b)
            raw.p(i * d + a, jc * d + b) = parse_complex(blk[a][b]);
        }
      }
    }
    return raw;
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate file: ") + e.what());
  }
}

IsoCertificate<Cplx> to_certificate(const RawCertificateFile& raw, double tol) {
  IsoCertificate<Cplx> cert;
  cert.source = to_quantum_graph(raw.source, tol);
  cert.target = to_quantum_graph(raw.target, tol);
  cert.aux_dim = raw.aux_dim;
  cert.p = raw.p;
  if (cert.p.rows() != cert.target.space.dim * raw.aux_dim ||
      cert.p.cols() != cert.source.space.dim * raw.aux_dim)
    throw ParseError("certificate: block matrix shape does not match the graphs");
  return cert;
}

std::string certificate_to_json(const RawCertificateFile& raw) {
  int d = raw.aux_dim;
  int rows_blocks = raw.p.rows() / d;
  int cols_blocks = raw.p.cols() / d;
  json p = json::array();
  for (int i = 0; i < rows_blocks; ++i) {
    json row = json::array();
    for (int jc = 0; jc < cols_blocks; ++jc) {
      json blk = json::array();
      for (int a = 0; a < d; ++a) {
        json brow = json::array();
        for (int b = 0; b < d; ++b)
          brow.push_back(complex_to_json(raw.p(i * d + a, jc * d + b)));
        blk.push_back(brow);
      }
      row.push_back(blk);
    }
    p.push_back(row);
  }
  json j{{"aux_dim", raw.aux_dim},
         {"source", graph_json(raw.source)},
         {"target", graph_json(raw.target)},
         {"p", p}};
  return j.dump(2) + "\n";
}

RawCertificateFile lift_certificate_file(const RawCertificateFile& raw, int r, double tol) {
  IsoCertificate<Cplx> cert = to_certificate(raw, tol);
  IsoCertificate<Cplx> lifted = lift_certificate(cert, r, tol);
  if (r == 1) return raw;
  RawCertificateFile out;
  out.aux_dim = lifted.aux_dim;
  out.source = mycielskian_file(raw.source, r, tol);
  out.target = mycielskian_file(raw.target, r, tol);
  out.p = lifted.p;
  return out;
}

}  // namespace qmyc
