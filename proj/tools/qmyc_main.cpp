#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmyc/catalog.hpp"
#include "qmyc/io.hpp"
#include "qmyc/labeling.hpp"
#include "qmyc/mycielski.hpp"
#include "qmyc/symmetry.hpp"

namespace {

using nlohmann::json;
using namespace qmyc;

constexpr int kSchemaVersion = 1;

double tolerance_from_env() {
  const char* env = std::getenv("QMYC_TOL");
  if (!env) return kDefaultTol;
  try {
    return std::stod(env);
  } catch (const std::logic_error&) {
    throw ParseError("QMYC_TOL is not a number");
  }
}

struct CheckOutcome {
  AxiomReport report;
  bool delta_form_ok = true;
  std::string delta_form_error;
};

CheckOutcome run_check(const RawGraphFile& raw, Normalization norm_override, bool has_override,
                       double tol) {
  CheckOutcome out;
  QuantumGraph<Cplx> qg;
  try {
    qg = to_quantum_graph(raw, tol);
  } catch (const Error& e) {
    out.delta_form_ok = false;
    out.delta_form_error = e.what();
    return out;
  }
  if (has_override) qg.normalization = norm_override;
  out.report = check_quantum_graph(qg, tol);
  return out;
}

int cmd_check(const std::string& path, const std::string& norm_flag, bool as_json, double tol) {
  RawGraphFile raw = read_graph_file(path);
  bool has_override = !norm_flag.empty();
  Normalization norm = Normalization::SchurDeltaSq;
  if (norm_flag == "one") norm = Normalization::SchurOne;
  else if (!norm_flag.empty() && norm_flag != "delta_sq")
    throw ParseError("--normalization must be delta_sq or one");

  CheckOutcome out = run_check(raw, norm, has_override, tol);
  bool pass = out.delta_form_ok && out.report.all_pass();
  if (as_json) {
    json j{{"schema_version", kSchemaVersion},
           {"command", "check"},
           {"pass", pass}};
    if (!out.delta_form_ok) {
      j["error"] = out.delta_form_error;
    } else {
      const AxiomReport& r = out.report;
      j["delta_sq"] = r.delta_sq;
      j["schur_constant"] = r.schur_constant;
      j["normalization"] =
          r.detected_normalization == Normalization::SchurDeltaSq ? "delta_sq" : "one";
      j["axioms"] = json{{"self_adjoint", r.self_adjoint},
                         {"schur_idempotent", r.schur_idempotent},
                         {"undirected", r.undirected}};
      j["irreflexive"] = r.irreflexive;
      j["residuals"] = json{{"self_adjoint", r.residual_self_adjoint},
                            {"schur", r.residual_schur},
                            {"undirected", r.residual_undirected},
                            {"irreflexive", r.residual_irreflexive}};
    }
    std::cout << j.dump(2) << "\n";
  } else if (!out.delta_form_ok) {
    std::cout << "fail: " << out.delta_form_error << "\n";
  } else {
    const AxiomReport& r = out.report;
    std::cout << "self-adjoint:     " << (r.self_adjoint ? "ok" : "FAIL")
              << "  (residual " << r.residual_self_adjoint << ")\n";
    std::cout << "schur idempotent: " << (r.schur_idempotent ? "ok" : "FAIL")
              << "  (residual " << r.residual_schur << ")\n";
    std::cout << "undirected:       " << (r.undirected ? "ok" : "FAIL")
              << "  (residual " << r.residual_undirected << ")\n";
    std::cout << "irreflexive:      " << (r.irreflexive ? "yes" : "no") << "\n";
    if (pass)
      std::cout << "pass, c = " << r.schur_constant << "\n";
    else
      std::cout << "FAIL\n";
  }
  return pass ? 0 : 1;
}

int cmd_mycielski(const std::string& in, int r, const std::string& out_path, double tol) {
  RawGraphFile raw = read_graph_file(in);
  RawGraphFile mu = mycielskian_file(raw, r, tol);
  std::string text = std::holds_alternative<RawClassicalFile>(mu)
                         ? graph_to_json(to_classical_graph(std::get<RawClassicalFile>(mu)))
                         : graph_to_json(std::get<RawQuantumFile>(mu));
  write_graph_file(out_path, text);
  QuantumGraph<Cplx> check = to_quantum_graph(mu, tol);
  std::cout << "wrote " << out_path << " (dim " << check.space.dim << ", delta_sq "
            << check.space.form.delta_sq.real() << ")\n";
  return 0;
}

int cmd_twins(const std::string& path, double tol) {
  RawGraphFile raw = read_graph_file(path);
  if (!std::holds_alternative<RawClassicalFile>(raw)) {
    // noncommutative graphs: only the invertible-adjacency fast path decides
    TwinVerdict verdict = quantum_twin_verdict(to_quantum_graph(raw, tol), tol);
    std::cout << "quantum-twin verdict: " << verdict.to_string() << "\n";
    return 0;
  }
  ClassicalGraph g = to_classical_graph(std::get<RawClassicalFile>(raw));
  auto pairs = classical_twins(g);
  if (pairs.empty()) {
    std::cout << "twin-free";
  } else {
    std::cout << "twins:";
    for (auto& [a, b] : pairs) std::cout << " (" << a << "," << b << ")";
  }
  TwinVerdict verdict = pattern_twin_solver(g, fulton_pattern(g));
  std::cout << "; quantum-twin verdict: " << verdict.to_string() << "\n";
  return 0;
}

int cmd_fulton(const std::string& path) {
  RawGraphFile raw = read_graph_file(path);
  if (!std::holds_alternative<RawClassicalFile>(raw))
    throw Error("fulton: requires a classical graph file");
  ClassicalGraph g = to_classical_graph(std::get<RawClassicalFile>(raw));
  GeneratingPattern pat = fulton_pattern(g);
  std::cout << pat.to_string();
  std::cout << "classes:";
  for (const auto& cls : pat.classes) {
    std::cout << " {";
    for (size_t i = 0; i < cls.size(); ++i) std::cout << (i ? "," : "") << cls[i];
    std::cout << "}";
  }
  std::cout << "\nsymbols: " << pat.num_symbols << (pat.affine ? "" : " (non-affine)") << "\n";
  return 0;
}

int cmd_dist(const std::string& path, int max_c) {
  RawGraphFile raw = read_graph_file(path);
  if (!std::holds_alternative<RawClassicalFile>(raw))
    throw Error("dist: requires a classical graph file");
  ClassicalGraph g = to_classical_graph(std::get<RawClassicalFile>(raw));
  int c = distinguishing_number(g, max_c <= 0 ? g.n : max_c);
  std::cout << c << "\n";
  return 0;
}

void print_cert_report(const CertReport& rep) {
  std::cout << "unitary (pp*):    " << rep.residual_unitary_left << "\n";
  std::cout << "unitary (p*p):    " << rep.residual_unitary_right << "\n";
  std::cout << "unital:           " << rep.residual_unital << "\n";
  std::cout << "multiplicative:   " << rep.residual_multiplicative << "\n";
  std::cout << "star-preserving:  " << rep.residual_star << "\n";
  std::cout << "intertwining:     " << rep.residual_intertwine << "\n";
  std::cout << (rep.valid ? "valid" : "INVALID") << "\n";
}

int cmd_iso_verify(const std::string& path, double tol) {
  IsoCertificate<Cplx> cert = to_certificate(read_certificate_file(path), tol);
  CertReport rep = verify_iso_certificate(cert, tol);
  print_cert_report(rep);
  return rep.valid ? 0 : 1;
}

int cmd_iso_lift(const std::string& path, int r, const std::string& out_path, double tol) {
  RawCertificateFile raw = read_certificate_file(path);
  RawCertificateFile lifted = lift_certificate_file(raw, r, tol);
  CertReport rep = verify_iso_certificate(to_certificate(lifted, tol), tol);
  print_cert_report(rep);
  if (!out_path.empty()) {
    write_graph_file(out_path, certificate_to_json(lifted));
    std::cout << "wrote " << out_path << "\n";
  }
  return rep.valid ? 0 : 1;
}

int cmd_catalog_verify(bool as_json) {
  catalog::ReproductionReport rep = catalog::verify_appendix();
  if (as_json) {
    json lines = json::array();
    for (const auto& line : rep.lines)
      lines.push_back(json{{"name", line.name}, {"ok", line.ok}, {"detail", line.detail}});
    json counts = json::array();
    for (const auto& [name, count] : rep.circulant_twin_counts)
      counts.push_back(json{{"name", name}, {"twin_pairs", count}});
    json j{{"schema_version", kSchemaVersion},
           {"command", "catalog verify-appendix"},
           {"mismatches", rep.mismatches},
           {"g38_unique_twin_free_singular", rep.g38_unique_twin_free_singular},
           {"circulant_twin_counts", counts},
           {"matching_c10", rep.matching_c10},
           {"matching_c12", rep.matching_c12},
           {"entries", lines}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& line : rep.lines)
      if (!line.ok) std::cout << "MISMATCH " << line.name << ": " << line.detail << "\n";
    std::cout << rep.lines.size() << " entries checked, " << rep.mismatches << " mismatches\n";
    std::cout << "G6_38 unique twin-free singular: "
              << (rep.g38_unique_twin_free_singular ? "yes" : "NO") << "\n";
    for (const auto& [name, count] : rep.circulant_twin_counts)
      std::cout << "circulant " << name << ": " << count << " twin pairs\n";
    std::cout << "C10(4) matches " << rep.matching_c10 << ", C12(5) matches "
              << rep.matching_c12 << "\n";
  }
  return rep.mismatches == 0 ? 0 : 1;
}

int cmd_catalog_export(const std::string& out_path) {
  json entries = json::array();
  for (const auto& e : catalog::entries()) {
    json je{{"name", e.name}, {"n", e.graph.n}};
    json adj = json::array();
    for (const auto& row : e.graph.adj) adj.push_back(row);
    je["adjacency"] = adj;
    json expected;
    if (e.expected.has_twins) expected["has_twins"] = *e.expected.has_twins;
    if (e.expected.det) expected["det"] = *e.expected.det;
    if (e.expected.quantum_symmetric)
      expected["quantum_symmetric"] = *e.expected.quantum_symmetric;
    if (e.expected.twin_pair_count) expected["twin_pairs"] = *e.expected.twin_pair_count;
    if (!expected.is_null()) je["expected"] = expected;
    if (!e.note.empty()) je["note"] = e.note;
    entries.push_back(je);
  }
  json j{{"schema_version", kSchemaVersion}, {"entries", entries}};
  std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_graph_file(out_path, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quantum graphs: Mycielskians, twins, certificates"};
  app.require_subcommand(1);

  std::string graph_path, out_path, norm_flag, cert_path;
  int r = 2;
  int max_c = 0;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "verify the quantum graph axioms of a file");
  check->add_option("graph-file", graph_path)->required();
  check->add_option("--normalization", norm_flag, "delta_sq or one");
  check->add_flag("--json", as_json);

  auto* myc = app.add_subcommand("mycielski", "write the Mycielskian of a graph file");
  myc->add_option("graph-file", graph_path)->required();
  myc->add_option("-r", r, "number of copies (r = 1 is the identity)")->required();
  myc->add_option("-o", out_path, "output file")->required();

  auto* twins = app.add_subcommand("twins", "twin pairs and the quantum-twin verdict");
  twins->add_option("graph-file", graph_path)->required();

  auto* fulton = app.add_subcommand("fulton", "Fulton pattern of the generating matrix");
  fulton->add_option("graph-file", graph_path)->required();

  auto* dist = app.add_subcommand("dist", "distinguishing number");
  dist->add_option("graph-file", graph_path)->required();
  dist->add_option("--max-colors", max_c);

  auto* iso = app.add_subcommand("iso", "quantum-isomorphism certificates");
  iso->require_subcommand(1);
  auto* iso_verify = iso->add_subcommand("verify", "verify a certificate file");
  iso_verify->add_option("certificate", cert_path)->required();
  auto* iso_lift = iso->add_subcommand("lift", "lift a certificate to the Mycielskians");
  iso_lift->add_option("certificate", cert_path)->required();
  iso_lift->add_option("-r", r)->required();
  iso_lift->add_option("-o", out_path);

  auto* cat = app.add_subcommand("catalog", "shipped graph data");
  cat->require_subcommand(1);
  auto* cat_verify = cat->add_subcommand("verify-appendix", "recompute the shipped annotations");
  cat_verify->add_flag("--json", as_json);
  auto* cat_export = cat->add_subcommand("export", "dump the catalog as JSON");
  cat_export->add_option("-o", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    double tol = tolerance_from_env();
    if (*check) return cmd_check(graph_path, norm_flag, as_json, tol);
    if (*myc) return cmd_mycielski(graph_path, r, out_path, tol);
    if (*twins) return cmd_twins(graph_path, tol);
    if (*fulton) return cmd_fulton(graph_path);
    if (*dist) return cmd_dist(graph_path, max_c);
    if (*iso_verify) return cmd_iso_verify(cert_path, tol);
    if (*iso_lift) return cmd_iso_lift(cert_path, r, out_path, tol);
    if (*cat_verify) return cmd_catalog_verify(as_json);
    if (*cat_export) return cmd_catalog_export(out_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
