#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmyc/symmetry.hpp"

namespace qmyc {

// Projections P_1..P_c in C(G) (x) B(C^d) represented on L2(G) (x) C^d,
// GNS factor major.
template <class S>
struct PartitionOfUnity {
  int aux_dim = 1;
  std::vector<Mat<S>> projections;
};

// Vertex labels 1..c.
struct ClassicalLabeling {
  std::vector<int> labels;
  int num_labels() const {
    int c = 0;
    for (int l : labels) c = std::max(c, l);
    return c;
  }
};

namespace detail {

// Least-squares membership of C in the span of left-multiplication operators
// of the algebra (tolerance check on the double shadow).
template <class S>
double left_multiplication_residual(const GnsSpace<S>& sp, const Mat<Cplx>& C) {
  const int N = sp.dim;
  std::vector<Mat<Cplx>> basis;
  Mat<S> col(N, 1);
  for (int alpha = 0; alpha < N; ++alpha) {
    Mat<S> op(N, N);
    for (int j = 0; j < N; ++j) {
      for (int t = 0; t < N; ++t) col(t, 0) = scalar_traits<S>::zero();
      col(j, 0) = scalar_traits<S>::one();
      Mat<S> ecol(N, 1);
      ecol(alpha, 0) = scalar_traits<S>::one();
      Mat<S> prod = multiply_vectors(sp, ecol, col);
      for (int t = 0; t < N; ++t) op(t, j) = prod(t, 0);
    }
    basis.push_back(op.to_cplx());
  }
  // Gram solve of min || sum x_a B_a - C ||_F
  const int m = static_cast<int>(basis.size());
  std::vector<std::vector<Cplx>> gram(m, std::vector<Cplx>(m + 1));
  auto dot = [N](const Mat<Cplx>& a, const Mat<Cplx>& b) {
    Cplx s{0, 0};
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) s += std::conj(a(i, j)) * b(i, j);
    return s;
  };
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) gram[a][b] = dot(basis[a], basis[b]);
    gram[a][m] = dot(basis[a], C);
  }
  // Gaussian elimination with partial pivoting.
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  for (int k = 0; k < m; ++k) {
    int piv = k;
    for (int r = k + 1; r < m; ++r)
      if (std::abs(gram[r][k]) > std::abs(gram[piv][k])) piv = r;
    std::swap(gram[k], gram[piv]);
    if (std::abs(gram[k][k]) < 1e-14) continue;
    for (int r = 0; r < m; ++r) {
      if (r == k) continue;
      Cplx f = gram[r][k] / gram[k][k];
      for (int c = k; c <= m; ++c) gram[r][c] -= f * gram[k][c];
    }
  }
  Mat<Cplx> recon(N, N);
  for (int a = 0; a < m; ++a) {
    Cplx coeff = std::abs(gram[a][a]) < 1e-14 ? Cplx{0, 0} : gram[a][m] / gram[a][a];
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) recon(i, j) += coeff * basis[a](i, j);
  }
  return residual(recon, C);
}

}  // namespace detail

template <class S>
PartitionOfUnity<S> validate_partition(const QuantumGraph<S>& qg,
                                       const std::vector<Mat<S>>& parts, int aux_dim,
                                       double tol = kDefaultTol) {
  if (parts.empty()) throw Error("partition: empty");
  if (aux_dim < 1) throw Error("partition: aux_dim must be >= 1");
  const int N = qg.space.dim;
  const int total = N * aux_dim;
  Mat<S> sum(total, total);
  for (size_t a = 0; a < parts.size(); ++a) {
    const Mat<S>& P = parts[a];
    std::string tag = " (projection " + std::to_string(a + 1) + ")";
    if (P.rows() != total || P.cols() != total) throw Error("partition: wrong shape" + tag);
    if (residual(P, P.adjoint()) > tol) throw Error("partition: not self-adjoint" + tag);
    if (residual(P * P, P) > tol) throw Error("partition: not idempotent" + tag);
    // membership: every auxiliary block must lie in the left-multiplication algebra
    for (int a1 = 0; a1 < aux_dim; ++a1)
      for (int a2 = 0; a2 < aux_dim; ++a2) {
        Mat<Cplx> C(N, N);
        for (int i = 0; i < N; ++i)
          for (int j = 0; j < N; ++j)
            C(i, j) = scalar_traits<S>::to_cplx(P(i * aux_dim + a1, j * aux_dim + a2));
        if (detail::left_multiplication_residual(qg.space, C) > tol)
          throw Error("partition: not in C(G) (x) B(H)" + tag);
      }
    sum = sum + P;
  }
  if (residual(sum, Mat<S>::identity(total)) > tol)
    throw Error("partition: projections do not sum to the identity");
  return PartitionOfUnity<S>{aux_dim, parts};
}

// Induced partition on mu_{r-1}(G): the master projection plus copy-summed
// images of the original projections.
template <class S>
PartitionOfUnity<S> induce_partition(const QuantumGraph<S>& qg, const PartitionOfUnity<S>& parts,
                                     int r) {
  if (r < 2) throw Error("induce_partition: r must be >= 2");
  MycielskiEmbeddings<S> emb = embeddings(qg, r);
  const int d = parts.aux_dim;
  Mat<S> idd = Mat<S>::identity(d);
  PartitionOfUnity<S> out;
  out.aux_dim = d;
  out.projections.push_back((emb.iota[0] * emb.iota_star[0]).kron(idd));
  for (const Mat<S>& P : parts.projections) {
    Mat<S> q(emb.iota[0].rows() * d, emb.iota[0].rows() * d);
    for (int k = 1; k <= r; ++k)
      q = q + emb.iota[k].kron(idd) * P * emb.iota_star[k].kron(idd);
    out.projections.push_back(std::move(q));
  }
  return out;
}

// P_a (X (x) 1n) P_a = 0 for all X in the operator system basis.
template <class S>
bool is_quantum_coloring(const QuantumGraph<S>& qg, const PartitionOfUnity<S>& parts,
                         double tol = kDefaultTol) {
  if (!is_irreflexive(qg, tol)) throw Error("is_quantum_coloring: graph is not irreflexive");
  OperatorSystemBasis<S> sys = operator_system(qg, tol);
  Mat<S> idd = Mat<S>::identity(parts.aux_dim);
  for (const Mat<S>& P : parts.projections)
    for (const Mat<S>& X : sys.ops)
      if ((P * X.kron(idd) * P).frobenius_norm() > tol) return false;
  return true;
}

// Diagonal projections of a classical labeling, aux_dim 1.
template <class S>
PartitionOfUnity<S> labeling_to_partition(const ClassicalGraph& g, const ClassicalLabeling& lab) {
  g.validate();
  if (static_cast<int>(lab.labels.size()) != g.n)
    throw Error("labeling: wrong number of labels");
  int c = lab.num_labels();
  for (int l : lab.labels)
    if (l < 1 || l > c) throw Error("labeling: label out of range");
  PartitionOfUnity<S> parts;
  parts.aux_dim = 1;
  for (int a = 1; a <= c; ++a) {
    Mat<S> P(g.n, g.n);
    for (int v = 0; v < g.n; ++v)
      if (lab.labels[v] == a) P(v, v) = scalar_traits<S>::one();
    parts.projections.push_back(std::move(P));
  }
  return parts;
}

// True iff the amplified conjugation by U fixes every projection. U must be
// a verified automorphism of qg.
template <class S>
bool preserves_partition(const QuantumGraph<S>& qg, const Mat<S>& U,
                         const PartitionOfUnity<S>& parts, double tol = kDefaultTol) {
  if (!is_multiplicative(qg.space, U, tol) || !is_unital_map(qg.space, U, tol) ||
      !preserves_psi(qg.space, U, tol) || !is_star_map(qg.space, U, tol) ||
      residual(U * qg.adjacency, qg.adjacency * U) > tol)
    throw Error("preserves_partition: U is not a verified automorphism");
  Mat<S> amp = U.kron(Mat<S>::identity(parts.aux_dim));
  Mat<S> amp_inv = amp.adjoint();
  for (const Mat<S>& P : parts.projections)
    if (residual(amp * P * amp_inv, P) > tol) return false;
  return true;
}

template <class S>
bool preserves_partition(const QuantumGraph<S>& qg, const Permutation& sigma,
                         const PartitionOfUnity<S>& parts, double tol = kDefaultTol) {
  return preserves_partition(qg, permutation_matrix<S>(sigma), parts, tol);
}

// --- distinguishing numbers (classical, oracle-backed) ---

bool is_distinguishing(const ClassicalGraph& g, const ClassicalLabeling& lab, int limit = 12);

// Smallest c <= max_c admitting a distinguishing labeling; exhaustive search
// with canonical-first label introduction and early automorphism pruning.
int distinguishing_number(const ClassicalGraph& g, int max_c, int limit = 12);

struct BoundReport {
  int d_g = 0;
  int d_mu = 0;
  bool induced_is_distinguishing = false;
  bool bound_holds = false;
};

// Builds the induced labeling on mu(G) (labels duplicated across copies,
// fresh label on the master vertex), verifies it distinguishes, and compares
// D(mu(G)) against D(G) + 1. Requires a twin-free input.
BoundReport check_mycielski_distinguishing_bound(const ClassicalGraph& g, int max_c,
                                                 int limit = 13);

enum class DistinguishingVerdict { Distinguishing, NotDistinguishing, Unknown };

std::string to_string(DistinguishingVerdict v);

// Three-valued quantum verdict for a classical labeling: "NotDistinguishing"
// when some non-identity automorphism preserves it, "Distinguishing" when the
// Fulton pattern constrained by label preservation collapses to the identity,
// "Unknown" otherwise.
DistinguishingVerdict quantum_distinguishing_verdict(const ClassicalGraph& g,
                                                     const ClassicalLabeling& lab,
                                                     int limit = 12);

}  // namespace qmyc
