#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmyc/catalog.hpp"
#include "qmyc/io.hpp"
#include "qmyc/labeling.hpp"
#include "qmyc/mycielski.hpp"
#include "qmyc/symmetry.hpp"

namespace py = pybind11;
using namespace qmyc;

namespace {

ClassicalGraph graph_from_rows(const std::vector<std::vector<int>>& rows) {
  ClassicalGraph g;
  g.n = static_cast<int>(rows.size());
  g.adj = rows;
  g.validate();
  return g;
}

py::dict axiom_report_dict(const AxiomReport& r) {
  py::dict d;
  d["self_adjoint"] = r.self_adjoint;
  d["schur_idempotent"] = r.schur_idempotent;
  d["undirected"] = r.undirected;
  d["irreflexive"] = r.irreflexive;
  d["all_pass"] = r.all_pass();
  d["delta_sq"] = r.delta_sq;
  d["schur_constant"] = r.schur_constant;
  d["residual_self_adjoint"] = r.residual_self_adjoint;
  d["residual_schur"] = r.residual_schur;
  d["residual_undirected"] = r.residual_undirected;
  d["residual_irreflexive"] = r.residual_irreflexive;
  return d;
}

std::vector<std::vector<Cplx>> mat_to_rows(const Mat<Cplx>& m) {
  std::vector<std::vector<Cplx>> rows(m.rows(), std::vector<Cplx>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

QuantumGraph<Cplx> quantum_graph_from_parts(const std::vector<int>& blocks,
                                            const std::vector<std::vector<double>>& weights,
                                            const std::vector<std::vector<Cplx>>& adjacency) {
  BlockAlgebra alg = make_algebra(blocks);
  std::vector<std::vector<Cplx>> w;
  for (const auto& blk : weights) {
    std::vector<Cplx> row;
    for (double v : blk) row.push_back(Cplx{v, 0.0});
    w.push_back(std::move(row));
  }
  DeltaForm<Cplx> form = validate_delta_form(alg, w);
  QuantumGraph<Cplx> qg{make_gns_space(alg, form),
                        Mat<Cplx>(alg.dim(), alg.dim()),
                        Normalization::SchurDeltaSq};
  if (static_cast<int>(adjacency.size()) != alg.dim())
    throw Error("adjacency does not match the GNS dimension");
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) qg.adjacency(i, j) = adjacency[i][j];
  return qg;
}

}  // namespace

PYBIND11_MODULE(_qmyc, m) {
  m.doc() = "finite quantum graphs: Mycielskians, twins, distinguishing numbers";

  // translators run most-recent-first, so the base goes in first
  auto base = py::register_exception<Error>(m, "QmycError");
  py::register_exception<ParseError>(m, "QmycParseError", base.ptr());
  py::register_exception<SizeLimitError>(m, "QmycSizeLimitError", base.ptr());

  py::class_<ClassicalGraph>(m, "ClassicalGraph")
      .def(py::init(&graph_from_rows), py::arg("adjacency"))
      .def_readonly("n", &ClassicalGraph::n)
      .def_readonly("adjacency", &ClassicalGraph::adj)
      .def("degree", &ClassicalGraph::degree)
      .def("edge_count", &ClassicalGraph::edge_count)
      .def("connected", &ClassicalGraph::connected)
      .def("__eq__", [](const ClassicalGraph& a, const ClassicalGraph& b) { return a == b; });

  m.def("complete", &catalog::complete, py::arg("n"));
  m.def("cycle", &catalog::cycle, py::arg("n"));
  m.def("path", &catalog::path, py::arg("n"));
  m.def("circulant", &catalog::circulant, py::arg("n"), py::arg("jumps"));
  m.def("hypercube", &catalog::hypercube, py::arg("k"));
  m.def("cartesian_product", &catalog::cartesian_product);

  m.def("catalog_names", &catalog::names);
  m.def("catalog_get", [](const std::string& name) {
    const CatalogEntry& e = catalog::get(name);
    py::dict d;
    d["name"] = e.name;
    d["graph"] = e.graph;
    if (e.expected.has_twins) d["has_twins"] = *e.expected.has_twins;
    if (e.expected.det) d["det"] = *e.expected.det;
    if (e.expected.quantum_symmetric) d["quantum_symmetric"] = *e.expected.quantum_symmetric;
    if (e.expected.twin_pair_count) d["twin_pairs"] = *e.expected.twin_pair_count;
    if (!e.note.empty()) d["note"] = e.note;
    return d;
  });
  m.def("verify_appendix", [] {
    catalog::ReproductionReport rep = catalog::verify_appendix();
    py::dict d;
    d["mismatches"] = rep.mismatches;
    d["entries_checked"] = rep.lines.size();
    d["g38_unique_twin_free_singular"] = rep.g38_unique_twin_free_singular;
    d["circulant_twin_counts"] = rep.circulant_twin_counts;
    d["matching_c10"] = rep.matching_c10;
    d["matching_c12"] = rep.matching_c12;
    return d;
  });

  m.def("classical_twins", &classical_twins);
  m.def("det_adjacency", &det_adjacency);
  m.def("automorphism_group", &automorphism_group, py::arg("g"), py::arg("limit") = 12);
  m.def("classical_mycielskian", &classical_mycielskian, py::arg("g"), py::arg("r") = 2);

  m.def("fulton_pattern_string", [](const ClassicalGraph& g) {
    return fulton_pattern(g).to_string();
  });
  m.def("fulton_classes", [](const ClassicalGraph& g) { return fulton_pattern(g).classes; });
  m.def("twin_verdict", [](const ClassicalGraph& g) {
    return pattern_twin_solver(g, fulton_pattern(g)).to_string();
  });

  m.def("is_distinguishing",
        [](const ClassicalGraph& g, const std::vector<int>& labels, int limit) {
          return is_distinguishing(g, ClassicalLabeling{labels}, limit);
        },
        py::arg("g"), py::arg("labels"), py::arg("limit") = 12);
  m.def("distinguishing_number", &distinguishing_number, py::arg("g"), py::arg("max_c"),
        py::arg("limit") = 12);
  m.def("mycielski_distinguishing_bound", [](const ClassicalGraph& g, int max_c, int limit) {
    BoundReport rep = check_mycielski_distinguishing_bound(g, max_c, limit);
    py::dict d;
    d["d_g"] = rep.d_g;
    d["d_mu"] = rep.d_mu;
    d["induced_is_distinguishing"] = rep.induced_is_distinguishing;
    d["bound_holds"] = rep.bound_holds;
    return d;
  }, py::arg("g"), py::arg("max_c"), py::arg("limit") = 13);
  m.def("quantum_distinguishing_verdict",
        [](const ClassicalGraph& g, const std::vector<int>& labels, int limit) {
          return to_string(quantum_distinguishing_verdict(g, ClassicalLabeling{labels}, limit));
        },
        py::arg("g"), py::arg("labels"), py::arg("limit") = 12);

  m.def("check_classical", [](const ClassicalGraph& g) {
    return axiom_report_dict(check_quantum_graph(from_classical<Cplx>(g)));
  });
  m.def("check_quantum", [](const std::vector<int>& blocks,
                            const std::vector<std::vector<double>>& weights,
                            const std::vector<std::vector<Cplx>>& adjacency) {
    return axiom_report_dict(check_quantum_graph(quantum_graph_from_parts(blocks, weights, adjacency)));
  });
  m.def("mycielskian_classical", [](const ClassicalGraph& g, int r) {
    return to_classical(mycielskian(from_classical<Radical>(g), r));
  }, py::arg("g"), py::arg("r") = 2);
  m.def("mycielskian_quantum", [](const std::vector<int>& blocks,
                                  const std::vector<std::vector<double>>& weights,
                                  const std::vector<std::vector<Cplx>>& adjacency, int r) {
    QuantumGraph<Cplx> mu = mycielskian(quantum_graph_from_parts(blocks, weights, adjacency), r);
    py::dict d;
    d["blocks"] = mu.space.algebra.block_dims;
    std::vector<std::vector<double>> w;
    for (const auto& blk : mu.space.form.weights) {
      std::vector<double> row;
      for (const auto& v : blk) row.push_back(v.real());
      w.push_back(std::move(row));
    }
    d["weights"] = w;
    d["adjacency"] = mat_to_rows(mu.adjacency);
    d["delta_sq"] = mu.space.form.delta_sq.real();
    return d;
  }, py::arg("blocks"), py::arg("weights"), py::arg("adjacency"), py::arg("r") = 2);
}
