#pragma once

#include <string>
#include <vector>

#include "qmyc/algebra.hpp"

namespace qmyc {

// Simple undirected graph as a {0,1} adjacency matrix.
struct ClassicalGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  void validate() const;
  int degree(int v) const;
  int edge_count() const;
  bool connected() const;
  bool operator==(const ClassicalGraph& o) const { return n == o.n && adj == o.adj; }
};

enum class Normalization { SchurDeltaSq, SchurOne };

template <class S>
struct QuantumGraph {
  GnsSpace<S> space;
  Mat<S> adjacency;
  Normalization normalization = Normalization::SchurDeltaSq;
};

struct AxiomReport {
  bool self_adjoint = false;
  bool schur_idempotent = false;
  bool undirected = false;
  bool irreflexive = false;
  Normalization detected_normalization = Normalization::SchurDeltaSq;
  double schur_constant = 0.0;      // value of the matched constant c
  double delta_sq = 0.0;
  double residual_self_adjoint = 0.0;
  double residual_schur = 0.0;      // against the declared normalization
  double residual_undirected = 0.0;
  double residual_irreflexive = 0.0;

  // The quantum-graph axioms; irreflexivity is reported separately.
  bool all_pass() const { return self_adjoint && schur_idempotent && undirected; }
};

// Classical graph as a quantum graph: C^n, uniform weights 1/n, A acting on
// functions. In GNS coordinates the adjacency operator is the adjacency
// matrix itself.
template <class S>
QuantumGraph<S> from_classical(const ClassicalGraph& g) {
  g.validate();
  BlockAlgebra alg = make_algebra(std::vector<int>(g.n, 1));
  std::vector<std::vector<S>> weights(g.n, std::vector<S>{
      scalar_traits<S>::from_rational(Rational(1, g.n))});
  DeltaForm<S> form = validate_delta_form(alg, weights);
  QuantumGraph<S> qg{make_gns_space(alg, form), Mat<S>(g.n, g.n),
                     Normalization::SchurDeltaSq};
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) qg.adjacency(i, j) = scalar_traits<S>::from_int(g.adj[i][j]);
  return qg;
}

template <class S>
AxiomReport check_quantum_graph(const QuantumGraph<S>& qg, double tol = kDefaultTol) {
  const GnsSpace<S>& sp = qg.space;
  const Mat<S>& A = qg.adjacency;
  AxiomReport rep;
  rep.delta_sq = scalar_traits<S>::abs(sp.form.delta_sq);

  rep.residual_self_adjoint = residual(A, A.adjoint());
  rep.self_adjoint = rep.residual_self_adjoint <= tol;

  Mat<S> schur = schur_composite(sp, A, A);
  double r_delta = residual(schur, A.scaled(sp.form.delta_sq));
  double r_one = residual(schur, A);
  if (r_delta <= r_one) {
    rep.detected_normalization = Normalization::SchurDeltaSq;
    rep.schur_constant = rep.delta_sq;
  } else {
    rep.detected_normalization = Normalization::SchurOne;
    rep.schur_constant = 1.0;
  }
  rep.residual_schur = qg.normalization == Normalization::SchurDeltaSq ? r_delta : r_one;
  rep.schur_idempotent = rep.residual_schur <= tol;
  if (rep.schur_idempotent) {
    rep.detected_normalization = qg.normalization;
    rep.schur_constant = qg.normalization == Normalization::SchurDeltaSq ? rep.delta_sq : 1.0;
  }

  rep.residual_undirected = residual(undirected_composite(sp, A), A);
  rep.undirected = rep.residual_undirected <= tol;

  rep.residual_irreflexive = schur_composite(sp, A, Mat<S>::identity(sp.dim)).frobenius_norm();
  rep.irreflexive = rep.residual_irreflexive <= tol;
  return rep;
}

template <class S>
bool is_irreflexive(const QuantumGraph<S>& qg, double tol = kDefaultTol) {
  Mat<S> c = schur_composite(qg.space, qg.adjacency, Mat<S>::identity(qg.space.dim));
  return c.frobenius_norm() <= tol;
}

template <class S>
QuantumGraph<S> empty_graph(const GnsSpace<S>& sp) {
  return QuantumGraph<S>{sp, Mat<S>(sp.dim, sp.dim), Normalization::SchurDeltaSq};
}

// Reflexive complete graph delta^2 eta eta*; irreflexive variant subtracts id.
template <class S>
QuantumGraph<S> complete_graph(const GnsSpace<S>& sp, bool reflexive) {
  Mat<S> eta = unit_operator(sp);
  Mat<S> A = (eta * eta.adjoint()).scaled(sp.form.delta_sq);
  if (!reflexive) A = A - Mat<S>::identity(sp.dim);
  return QuantumGraph<S>{sp, A, Normalization::SchurDeltaSq};
}

// Basis of the operator system S_G = {m(A (x) X)m*}: sweep X over matrix
// units of B(L2) and keep a maximal linearly independent subset.
template <class S>
struct OperatorSystemBasis {
  std::vector<Mat<S>> ops;
  int dim = 0;
};

template <class S>
OperatorSystemBasis<S> operator_system(const QuantumGraph<S>& qg, double tol = kDefaultTol) {
  const int n = qg.space.dim;
  OperatorSystemBasis<S> basis;
  std::vector<Mat<Cplx>> ortho;  // Gram-Schmidt shadows for rank detection
  Mat<S> X(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      X(i, j) = scalar_traits<S>::one();
      Mat<S> op = schur_composite(qg.space, qg.adjacency, X);
      X(i, j) = scalar_traits<S>::zero();
      Mat<Cplx> shadow = op.to_cplx();
      double scale = shadow.frobenius_norm();
      if (scale <= tol) continue;
      for (const auto& q : ortho) {
        Cplx proj{0, 0};
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) proj += std::conj(q(r, c)) * shadow(r, c);
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) shadow(r, c) -= proj * q(r, c);
      }
      double rem = shadow.frobenius_norm();
      if (rem > tol * std::max(1.0, scale)) {
        ortho.push_back(shadow.scaled(Cplx{1.0 / rem, 0.0}));
        basis.ops.push_back(op);
      }
    }
  basis.dim = static_cast<int>(basis.ops.size());
  return basis;
}

// Inverse of from_classical; requires commutative algebra, uniform weights
// and a {0,1} adjacency with zero diagonal in the function basis.
template <class S>
ClassicalGraph to_classical(const QuantumGraph<S>& qg, double tol = kDefaultTol) {
  const GnsSpace<S>& sp = qg.space;
  if (!sp.algebra.commutative()) throw Error("to_classical: algebra is not commutative");
  const int n = sp.dim;
  S uniform = scalar_traits<S>::from_rational(Rational(1, n));
  for (const auto& blk : sp.form.weights)
    if (scalar_traits<S>::abs(blk[0] - uniform) > tol)
      throw Error("to_classical: weights are not uniform");
  ClassicalGraph g;
  g.n = n;
  g.adj.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const S& v = qg.adjacency(i, j);
      if (scalar_traits<S>::abs(v) <= tol)
        g.adj[i][j] = 0;
      else if (scalar_traits<S>::abs(v - scalar_traits<S>::one()) <= tol)
        g.adj[i][j] = 1;
      else
        throw Error("to_classical: adjacency entry is not 0 or 1");
    }
  for (int i = 0; i < n; ++i)
    if (g.adj[i][i] != 0) throw Error("to_classical: nonzero diagonal");
  g.validate();
  return g;
}

}  // namespace qmyc
