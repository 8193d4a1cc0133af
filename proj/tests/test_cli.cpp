#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "qmyc/catalog.hpp"
#include "qmyc/io.hpp"

using namespace qmyc;

namespace {

struct TempDir {
  std::string path;
  TempDir() {
    char tmpl[] = "/tmp/qmyc_cli_XXXXXX";
    path = mkdtemp(tmpl);
  }
  std::string file(const std::string& name) const { return path + "/" + name; }
};

int run_cli(const std::string& args) {
  std::string cmd = std::string(QMYC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string run_cli_capture(const std::string& args) {
  TempDir tmp;
  std::string out_file = tmp.file("out.txt");
  std::string cmd = std::string(QMYC_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  (void)!std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kC4 =
    R"({"kind":"classical","n":4,"adjacency":[[0,1,0,1],[1,0,1,0],[0,1,0,1],[1,0,1,0]]})";

}  // namespace

TEST_CASE("check: pass, axiom failure, parse failure") {
  TempDir tmp;
  write_file(tmp.file("c4.json"), kC4);
  CHECK(run_cli("check " + tmp.file("c4.json")) == 0);
  std::string out = run_cli_capture("check " + tmp.file("c4.json"));
  CHECK(out.find("pass, c = 4") != std::string::npos);

  // tampered: not symmetric -> exit 1, names the failed axiom
  write_file(tmp.file("bad.json"),
             R"({"kind":"classical","n":3,"adjacency":[[0,1,0],[0,0,1],[0,1,0]]})");
  CHECK(run_cli("check " + tmp.file("bad.json")) == 1);
  std::string bad = run_cli_capture("check " + tmp.file("bad.json"));
  CHECK(bad.find("self-adjoint:     FAIL") != std::string::npos);

  write_file(tmp.file("broken.json"), "{not json");
  CHECK(run_cli("check " + tmp.file("broken.json")) == 2);
  CHECK(run_cli("check " + tmp.file("missing.json")) == 2);
}

TEST_CASE("check --json carries a schema version and residuals") {
  TempDir tmp;
  write_file(tmp.file("c4.json"), kC4);
  std::string out = run_cli_capture("check --json " + tmp.file("c4.json"));
  CHECK(out.find("\"schema_version\": 1") != std::string::npos);
  CHECK(out.find("\"pass\": true") != std::string::npos);
  CHECK(out.find("\"delta_sq\": 4.0") != std::string::npos);
}

TEST_CASE("check on a quantum graph file (complete on M2)") {
  TempDir tmp;
  // adjacency of delta^2 eta eta* - id on M2/trace in GNS coordinates
  QuantumGraph<Cplx> qg = [] {
    BlockAlgebra alg = make_algebra({2});
    DeltaForm<Cplx> form = validate_delta_form(
        alg, std::vector<std::vector<Cplx>>{{Cplx{0.5, 0}, Cplx{0.5, 0}}});
    GnsSpace<Cplx> sp = make_gns_space(alg, form);
    Mat<Cplx> eta = unit_operator(sp);
    QuantumGraph<Cplx> g{sp, (eta * eta.adjoint()).scaled(Cplx{4, 0}) -
                                 Mat<Cplx>::identity(4),
                         Normalization::SchurDeltaSq};
    return g;
  }();
  RawQuantumFile raw;
  raw.blocks = {2};
  raw.weights = {{WeightValue{true, Rational(1, 2), 0.0}, WeightValue{true, Rational(1, 2), 0.0}}};
  raw.adjacency = qg.adjacency;
  write_file(tmp.file("m2.json"), graph_to_json(raw));
  CHECK(run_cli("check " + tmp.file("m2.json")) == 0);

  // graph round trip is bit-exact
  std::string text = read_file(tmp.file("m2.json"));
  RawGraphFile parsed = parse_graph_json(text);
  CHECK(graph_to_json(std::get<RawQuantumFile>(parsed)) == text);
}

TEST_CASE("mycielski command: growth, identity at r = 1") {
  TempDir tmp;
  write_file(tmp.file("k2.json"),
             R"({"kind":"classical","n":2,"adjacency":[[0,1],[1,0]]})");
  CHECK(run_cli("mycielski " + tmp.file("k2.json") + " -r 2 -o " + tmp.file("mu.json")) == 0);
  RawGraphFile mu = read_graph_file(tmp.file("mu.json"));
  ClassicalGraph g = to_classical_graph(std::get<RawClassicalFile>(mu));
  CHECK(g.n == 5);
  CHECK(g.edge_count() == 5);
  CHECK(run_cli("check " + tmp.file("mu.json")) == 0);

  // r = 1: output content identical to the canonical serialization of the input
  CHECK(run_cli("mycielski " + tmp.file("mu.json") + " -r 1 -o " + tmp.file("id.json")) == 0);
  CHECK(read_file(tmp.file("id.json")) == read_file(tmp.file("mu.json")));

  CHECK(run_cli("mycielski " + tmp.file("k2.json") + " -r 0 -o " + tmp.file("x.json")) == 1);
}

TEST_CASE("twins / fulton / dist commands") {
  TempDir tmp;
  const CatalogEntry& g38 = catalog::get("G6_38");
  write_file(tmp.file("g38.json"), graph_to_json(g38.graph));
  std::string out = run_cli_capture("twins " + tmp.file("g38.json"));
  CHECK(out.find("twin-free; quantum-twin verdict: NoQuantumTwins(PatternForced)") !=
        std::string::npos);

  std::string fulton = run_cli_capture("fulton " + tmp.file("g38.json"));
  CHECK(fulton.find("symbols: 3") != std::string::npos);

  write_file(tmp.file("c6.json"), graph_to_json(catalog::cycle(6)));
  std::string dist = run_cli_capture("dist " + tmp.file("c6.json"));
  CHECK(dist == "2\n");

  // size limit -> exit 3
  write_file(tmp.file("q4.json"), graph_to_json(catalog::hypercube(4)));
  CHECK(run_cli("dist " + tmp.file("q4.json")) == 3);

  // twins on a quantum file: only the fast path is reported
  QuantumGraph<Cplx> m2 = [] {
    BlockAlgebra alg = make_algebra({2});
    DeltaForm<Cplx> form = validate_delta_form(
        alg, std::vector<std::vector<Cplx>>{{Cplx{0.5, 0}, Cplx{0.5, 0}}});
    return complete_graph(make_gns_space(alg, form), false);
  }();
  RawQuantumFile raw;
  raw.blocks = {2};
  raw.weights = {{WeightValue{false, Rational(0), 0.5}, WeightValue{false, Rational(0), 0.5}}};
  raw.adjacency = m2.adjacency;
  write_file(tmp.file("m2c.json"), graph_to_json(raw));
  std::string qt = run_cli_capture("twins " + tmp.file("m2c.json"));
  CHECK(qt.find("quantum-twin verdict:") != std::string::npos);
}

TEST_CASE("iso verify and lift") {
  TempDir tmp;
  RawCertificateFile cert;
  cert.aux_dim = 1;
  cert.source = parse_graph_json(kC4);
  cert.target = parse_graph_json(kC4);
  cert.p = Mat<Cplx>::identity(4);
  write_file(tmp.file("cert.json"), certificate_to_json(cert));
  CHECK(run_cli("iso verify " + tmp.file("cert.json")) == 0);

  CHECK(run_cli("iso lift " + tmp.file("cert.json") + " -r 2 -o " + tmp.file("lifted.json")) ==
        0);
  CHECK(run_cli("iso verify " + tmp.file("lifted.json")) == 0);

  // delta mismatch: C3 vs C4 -> semantic failure
  RawCertificateFile bad;
  bad.aux_dim = 1;
  bad.source = parse_graph_json(
      R"({"kind":"classical","n":3,"adjacency":[[0,1,1],[1,0,1],[1,1,0]]})");
  bad.target = parse_graph_json(kC4);
  bad.p = Mat<Cplx>(4, 3);
  write_file(tmp.file("bad.json"), certificate_to_json(bad));
  CHECK(run_cli("iso verify " + tmp.file("bad.json")) == 1);
}

TEST_CASE("catalog commands") {
  CHECK(run_cli("catalog verify-appendix") == 0);
  std::string js = run_cli_capture("catalog verify-appendix --json");
  CHECK(js.find("\"mismatches\": 0") != std::string::npos);
  CHECK(js.find("\"schema_version\": 1") != std::string::npos);

  TempDir tmp;
  CHECK(run_cli("catalog export -o " + tmp.file("bundle.json")) == 0);
  std::string bundle = read_file(tmp.file("bundle.json"));
  CHECK(bundle.find("\"G6_38\"") != std::string::npos);
  CHECK(bundle.find("\"K2_box_K5\"") != std::string::npos);
}

TEST_CASE("mycielski command on a quantum file") {
  TempDir tmp;
  QuantumGraph<Cplx> qg = [] {
    BlockAlgebra alg = make_algebra({2});
    DeltaForm<Cplx> form = validate_delta_form(
        alg, std::vector<std::vector<Cplx>>{{Cplx{0.5, 0}, Cplx{0.5, 0}}});
    GnsSpace<Cplx> sp = make_gns_space(alg, form);
    return complete_graph(sp, false);
  }();
  RawQuantumFile raw;
  raw.blocks = {2};
  raw.weights = {{WeightValue{true, Rational(1, 2), 0.0}, WeightValue{true, Rational(1, 2), 0.0}}};
  raw.adjacency = qg.adjacency;
  write_file(tmp.file("m2.json"), graph_to_json(raw));
  CHECK(run_cli("mycielski " + tmp.file("m2.json") + " -r 2 -o " + tmp.file("mu.json")) == 0);
  CHECK(run_cli("check " + tmp.file("mu.json")) == 0);
  RawGraphFile mu = read_graph_file(tmp.file("mu.json"));
  const auto& muq = std::get<RawQuantumFile>(mu);
  CHECK(muq.blocks == std::vector<int>{1, 2, 2});
  // exact rational weights survive the transformation: master 1/9, copies
  // (1/2) * (4/9) = 2/9 per diagonal entry
  CHECK(muq.weights[0][0].exact);
  CHECK(muq.weights[0][0].rational == Rational(1, 9));
  CHECK(muq.weights[1][0].rational == Rational(2, 9));
}

TEST_CASE("check honors the declared and overridden normalization") {
  TempDir tmp;
  // classical C4 rescaled by 1/delta_sq satisfies the Schur identity with c = 1
  RawQuantumFile raw;
  raw.blocks = {1, 1, 1, 1};
  for (int i = 0; i < 4; ++i)
    raw.weights.push_back({WeightValue{true, Rational(1, 4), 0.0}});
  ClassicalGraph c4 = catalog::cycle(4);
  raw.adjacency = Mat<Cplx>(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) raw.adjacency(i, j) = Cplx{c4.adj[i][j] / 4.0, 0.0};
  raw.normalization = Normalization::SchurOne;
  write_file(tmp.file("one.json"), graph_to_json(raw));
  CHECK(run_cli("check " + tmp.file("one.json")) == 0);
  CHECK(run_cli("check --normalization delta_sq " + tmp.file("one.json")) == 1);

  write_file(tmp.file("c4.json"), kC4);
  CHECK(run_cli("check --normalization one " + tmp.file("c4.json")) == 1);
  CHECK(run_cli("check --normalization delta_sq " + tmp.file("c4.json")) == 0);
}

TEST_CASE("certificate file round trip") {
  TempDir tmp;
  RawCertificateFile cert;
  cert.aux_dim = 2;
  cert.source = parse_graph_json(kC4);
  cert.target = parse_graph_json(kC4);
  Mat<Cplx> q(2, 2);
  q(0, 0) = q(0, 1) = q(1, 0) = q(1, 1) = Cplx{0.5, 0};
  cert.p = permutation_matrix<Cplx>(Permutation{1, 2, 3, 0}).kron(q) +
           permutation_matrix<Cplx>(Permutation{0, 3, 2, 1}).kron(Mat<Cplx>::identity(2) - q);
  std::string text = certificate_to_json(cert);
  write_file(tmp.file("cert.json"), text);
  RawCertificateFile back = read_certificate_file(tmp.file("cert.json"));
  CHECK(back.aux_dim == 2);
  CHECK(back.p == cert.p);
  CHECK(certificate_to_json(back) == text);
}

TEST_CASE("classical graph file round trip is exact") {
  ClassicalGraph g = catalog::get("G6_37").graph;
  std::string text = graph_to_json(g);
  RawGraphFile parsed = parse_graph_json(text);
  CHECK(to_classical_graph(std::get<RawClassicalFile>(parsed)) == g);
  CHECK(graph_to_json(to_classical_graph(std::get<RawClassicalFile>(parsed))) == text);
}

TEST_CASE("QMYC_TOL env var loosens the tolerance") {
  TempDir tmp;
  // slightly perturbed C4: fails at 1e-9, passes at 1e-2
  std::string perturbed =
      R"({"kind":"classical","n":4,"adjacency":[[0,1.0001,0,1],[1.0001,0,1,0],[0,1,0,1],[1,0,1,0]]})";
  write_file(tmp.file("p.json"), perturbed);
  CHECK(run_cli("check " + tmp.file("p.json")) == 1);
  std::string cmd = std::string("QMYC_TOL=1e-2 ") + QMYC_CLI_PATH + " check " +
                    tmp.file("p.json") + " > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
}
