#pragma once

#include <vector>

#include "qmyc/quantum_graph.hpp"

namespace qmyc {

// Isometric embeddings iota_0, ..., iota_r of the direct summands of
// L2(mu_{r-1}(G)). In orthonormal GNS coordinates these are plain 0/1
// coordinate inclusions; the element-level scalings are kept as metadata.
template <class S>
struct MycielskiEmbeddings {
  int r = 0;
  std::vector<Mat<S>> iota;       // iota[0]: dim_mu x 1, iota[k]: dim_mu x dim
  std::vector<Mat<S>> iota_star;
  S scaling_master;               // sqrt(1 + r delta^2)
  S scaling_copy;                 // sqrt((1 + r delta^2) / delta^2)
};

namespace detail {

template <class S>
GnsSpace<S> mycielski_space(const GnsSpace<S>& sp, int r) {
  std::vector<int> dims{1};
  std::vector<std::vector<S>> weights;
  S one = scalar_traits<S>::one();
  S denom = one + scalar_traits<S>::from_int(r) * sp.form.delta_sq;
  weights.push_back({one / denom});
  S copy_scale = sp.form.delta_sq / denom;
  for (int k = 0; k < r; ++k)
    for (int b = 0; b < sp.algebra.num_blocks(); ++b) {
      dims.push_back(sp.algebra.block_dims[b]);
      std::vector<S> w;
      for (const auto& wv : sp.form.weights[b]) w.push_back(wv * copy_scale);
      weights.push_back(std::move(w));
    }
  DeltaForm<S> form{std::move(weights), denom};
  return make_gns_space(make_algebra(dims), form);
}

// Linear map on element coordinates -> matrix in GNS coordinates.
template <class S>
Mat<S> element_map_to_gns(const GnsSpace<S>& sp, const Mat<S>& elem_map) {
  Mat<S> out = elem_map;
  for (int i = 0; i < sp.dim; ++i)
    for (int j = 0; j < sp.dim; ++j)
      out(i, j) = sp.sqrt_w[i] * elem_map(i, j) * sp.inv_sqrt_w[j];
  return out;
}

}  // namespace detail

template <class S>
MycielskiEmbeddings<S> embeddings(const QuantumGraph<S>& qg, int r) {
  if (r < 1) throw Error("embeddings: r must be >= 1");
  const GnsSpace<S>& sp = qg.space;
  int dim = sp.dim;
  int dim_mu = 1 + r * dim;
  MycielskiEmbeddings<S> emb;
  emb.r = r;
  S one = scalar_traits<S>::one();
  S denom = one + scalar_traits<S>::from_int(r) * sp.form.delta_sq;
  emb.scaling_master = scalar_traits<S>::sqrt_nonneg(denom);
  emb.scaling_copy = scalar_traits<S>::sqrt_nonneg(denom / sp.form.delta_sq);
  Mat<S> i0(dim_mu, 1);
  i0(0, 0) = one;
  emb.iota.push_back(i0);
  for (int k = 1; k <= r; ++k) {
    Mat<S> ik(dim_mu, dim);
    for (int t = 0; t < dim; ++t) ik(1 + (k - 1) * dim + t, t) = one;
    emb.iota.push_back(std::move(ik));
  }
  for (const auto& m : emb.iota) emb.iota_star.push_back(m.adjoint());
  return emb;
}

// The quantum Mycielskian mu_{r-1}(G), built from the componentwise action of
// the adjacency on C (+) C(G)^r; r = 1 returns the input graph unchanged.
template <class S>
QuantumGraph<S> mycielskian(const QuantumGraph<S>& qg, int r, double tol = kDefaultTol) {
  if (r < 1) throw Error("mycielskian: r must be >= 1");
  AxiomReport in = check_quantum_graph(qg, tol);
  if (!in.all_pass()) throw Error("mycielskian: input fails the quantum graph axioms");
  if (r == 1) return qg;
  // the construction's corner terms carry delta_G, so it is compatible with
  // the Schur constant delta^2 only
  if (qg.normalization != Normalization::SchurDeltaSq)
    throw Error("mycielskian: requires the delta_sq Schur normalization");

  const GnsSpace<S>& sp = qg.space;
  const int dim = sp.dim;
  GnsSpace<S> msp = detail::mycielski_space(sp, r);
  const int dim_mu = msp.dim;

  // Adjacency on element coordinates of C (+) C(G)^r. Component 0 reads
  // delta^2 psi(x_r); component l reads A(x_{l-1} + x_{l+1}) with the
  // conventions x_0 = 0 and component r picking up lambda 1 instead.
  Mat<S> A_elem(dim, dim);
  {
    Mat<S> d_inv_sqrt(dim, dim), d_sqrt(dim, dim);
    for (int i = 0; i < dim; ++i) {
      d_inv_sqrt(i, i) = sp.inv_sqrt_w[i];
      d_sqrt(i, i) = sp.sqrt_w[i];
    }
    A_elem = d_inv_sqrt * qg.adjacency * d_sqrt;
  }
  Mat<S> psi_row(1, dim);  // psi on element coordinates
  for (int b = 0; b < sp.algebra.num_blocks(); ++b)
    for (int k = 0; k < sp.algebra.block_dims[b]; ++k)
      psi_row(0, sp.algebra.basis_index(b, k, k)) = sp.form.weights[b][k];
  Mat<S> unit_col(dim, 1);  // the unit element
  for (int b = 0; b < sp.algebra.num_blocks(); ++b)
    for (int k = 0; k < sp.algebra.block_dims[b]; ++k)
      unit_col(sp.algebra.basis_index(b, k, k), 0) = scalar_traits<S>::one();

  auto copy_off = [dim](int k) { return 1 + (k - 1) * dim; };
  Mat<S> M(dim_mu, dim_mu);
  M.place(0, copy_off(r), psi_row.scaled(sp.form.delta_sq));
  for (int l = 1; l <= r; ++l) {
    if (l >= 2) M.place(copy_off(l), copy_off(l - 1), A_elem);
    if (l == 1) M.place(copy_off(1), copy_off(1), A_elem);
    if (l + 1 <= r) {
      Mat<S> cur = M.block(copy_off(l), copy_off(l + 1), dim, dim) + A_elem;
      M.place(copy_off(l), copy_off(l + 1), cur);
    }
  }
  M.place(copy_off(r), 0, unit_col);

  QuantumGraph<S> out{msp, detail::element_map_to_gns(msp, M), qg.normalization};
  AxiomReport rep = check_quantum_graph(out, tol);
  if (!rep.all_pass()) throw Error("mycielskian: output fails the quantum graph axioms");
  return out;
}

// The operator-sum form
//   A_mu = delta iota_r eta iota_0* + delta iota_0 eta* iota_r*
//          + iota_1 A iota_1* + sum_k (iota_k A iota_{k+1}* + iota_{k+1} A iota_k*).
// Cross-validates the componentwise construction; r = 1 is the identity case.
template <class S>
Mat<S> adjacency_via_embeddings(const QuantumGraph<S>& qg, int r) {
  if (r < 1) throw Error("adjacency_via_embeddings: r must be >= 1");
  if (r == 1) return qg.adjacency;
  MycielskiEmbeddings<S> emb = embeddings(qg, r);
  Mat<S> eta = unit_operator(qg.space);
  S delta = scalar_traits<S>::sqrt_nonneg(qg.space.form.delta_sq);
  Mat<S> A = (emb.iota[r] * eta * emb.iota_star[0]).scaled(delta);
  A = A + (emb.iota[0] * eta.adjoint() * emb.iota_star[r]).scaled(delta);
  A = A + emb.iota[1] * qg.adjacency * emb.iota_star[1];
  for (int k = 1; k <= r - 1; ++k) {
    A = A + emb.iota[k] * qg.adjacency * emb.iota_star[k + 1];
    A = A + emb.iota[k + 1] * qg.adjacency * emb.iota_star[k];
  }
  return A;
}

// Classical r-Mycielskian (higher cone): vertex order [master, V^1, ..., V^r];
// copy 1 keeps the original edges, consecutive copies are joined along edges,
// the master vertex is joined to all of copy r. For r = 2 this is the block
// matrix [[0,0,1],[0,A,A],[1,A,0]].
ClassicalGraph classical_mycielskian(const ClassicalGraph& g, int r);

// Representation-level automorphism extension id (+) alpha (+) ... (+) alpha.
// alpha must be the GNS matrix of a *-automorphism of C(G) preserving psi and
// commuting with the adjacency; all preconditions are checked.
template <class S>
Mat<S> extend_automorphism(const QuantumGraph<S>& qg, int r, const Mat<S>& alpha,
                           double tol = kDefaultTol) {
  if (r < 1) throw Error("extend_automorphism: r must be >= 1");
  const GnsSpace<S>& sp = qg.space;
  const int dim = sp.dim;
  if (alpha.rows() != dim || alpha.cols() != dim)
    throw Error("extend_automorphism: operator has wrong shape");
  if (!is_multiplicative(sp, alpha, tol))
    throw Error("extend_automorphism: alpha is not multiplicative");
  if (!is_unital_map(sp, alpha, tol)) throw Error("extend_automorphism: alpha is not unital");
  if (!preserves_psi(sp, alpha, tol))
    throw Error("extend_automorphism: alpha does not preserve psi");
  if (!is_star_map(sp, alpha, tol)) throw Error("extend_automorphism: alpha is not a *-map");
  if (residual(alpha * qg.adjacency, qg.adjacency * alpha) > tol)
    throw Error("extend_automorphism: alpha does not commute with the adjacency");
  if (r == 1) return alpha;
  MycielskiEmbeddings<S> emb = embeddings(qg, r);
  Mat<S> ext = emb.iota[0] * emb.iota_star[0];
  for (int k = 1; k <= r; ++k) ext = ext + emb.iota[k] * alpha * emb.iota_star[k];
  return ext;
}

// Copy-block decomposition of a master-fixing automorphism of mu(G) (r = 2).
template <class S>
struct BlockDecomposition {
  Mat<S> rho11, rho12, rho21, rho22;
  bool off_diagonal_zero = false;  // rho12 = rho21 = 0
  bool diagonal_equal = false;     // rho11 = rho22
  bool chain_holds = false;        // rho22 A = A rho11 = rho11 A = A rho22
};

template <class S>
BlockDecomposition<S> analyze_mycielski_automorphism(const QuantumGraph<S>& qg, const Mat<S>& U,
                                                     double tol = kDefaultTol) {
  constexpr int r = 2;
  QuantumGraph<S> mu = mycielskian(qg, r);
  MycielskiEmbeddings<S> emb = embeddings(qg, r);
  if (U.rows() != mu.space.dim || U.cols() != mu.space.dim)
    throw Error("analyze_mycielski_automorphism: operator has wrong shape");
  if (!is_multiplicative(mu.space, U, tol))
    throw Error("analyze_mycielski_automorphism: U is not multiplicative");
  if (!preserves_psi(mu.space, U, tol))
    throw Error("analyze_mycielski_automorphism: U does not preserve psi");
  if (!is_star_map(mu.space, U, tol))
    throw Error("analyze_mycielski_automorphism: U is not a *-map");
  if (residual(U * mu.adjacency, mu.adjacency * U) > tol)
    throw Error("analyze_mycielski_automorphism: U does not commute with A_mu");
  Mat<S> master = emb.iota[0] * emb.iota_star[0];
  if (residual(U * master, master * U) > tol)
    throw Error("analyze_mycielski_automorphism: U does not fix the master projection");

  BlockDecomposition<S> dec{emb.iota_star[1] * U * emb.iota[1],
                            emb.iota_star[1] * U * emb.iota[2],
                            emb.iota_star[2] * U * emb.iota[1],
                            emb.iota_star[2] * U * emb.iota[2]};
  dec.off_diagonal_zero =
      dec.rho12.frobenius_norm() <= tol && dec.rho21.frobenius_norm() <= tol;
  if (!dec.off_diagonal_zero)
    throw Error("analyze_mycielski_automorphism: off-diagonal copy blocks are nonzero");
  dec.diagonal_equal = residual(dec.rho11, dec.rho22) <= tol;
  const Mat<S>& A = qg.adjacency;
  dec.chain_holds = residual(dec.rho22 * A, A * dec.rho11) <= tol &&
                    residual(A * dec.rho11, dec.rho11 * A) <= tol &&
                    residual(dec.rho11 * A, A * dec.rho22) <= tol;
  return dec;
}

}  // namespace qmyc
