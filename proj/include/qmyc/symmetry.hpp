#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmyc/mycielski.hpp"
#include "qmyc/quantum_graph.hpp"

namespace qmyc {

using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b

template <class S>
Mat<S> permutation_matrix(const Permutation& sigma) {
  int n = static_cast<int>(sigma.size());
  Mat<S> p(n, n);
  for (int j = 0; j < n; ++j) p(sigma[j], j) = scalar_traits<S>::one();
  return p;
}

// Unordered pairs of vertices with identical adjacency rows (open twins).
std::vector<std::pair<int, int>> classical_twins(const ClassicalGraph& g);

// Exact integer determinant by fraction-free elimination.
long long det_adjacency(const ClassicalGraph& g);

// Full automorphism group by backtracking with degree and adjacency pruning.
std::vector<Permutation> automorphism_group(const ClassicalGraph& g, int limit = 12);

bool is_automorphism(const ClassicalGraph& g, const Permutation& sigma);

// Symbolic shape of the generating matrix u of the quantum automorphism
// group after Fulton filtering and magic-unitary row/column sums. Entries
// within a surviving class of size two are parameterized as p, 1-p; classes
// of size >= 3 are left unparameterized and flagged non-affine.
struct PatternEntry {
  enum class Kind { Zero, One, Sym, OneMinusSym, Free };
  Kind kind = Kind::Zero;
  int sym = -1;
  int free_class = -1;
};

struct GeneratingPattern {
  int n = 0;
  std::vector<std::vector<PatternEntry>> entries;
  std::vector<std::vector<int>> classes;  // Fulton profile classes, each sorted
  std::vector<int> class_of;
  std::vector<int> sym_of_class;          // -1 when the class carries no symbol
  int num_symbols = 0;
  bool affine = true;

  std::string entry_string(int i, int j) const;
  std::string to_string() const;
};

GeneratingPattern fulton_pattern(const ClassicalGraph& g, int l_max = 0);

namespace detail {

// Row-reduced linear system over the formal span of the scalar 1 and the
// projection symbols; membership of a vector decides whether an equality is
// forced by the constraints.
class RationalRowSpace {
 public:
  explicit RationalRowSpace(int width) : width_(width) {}

  std::vector<Rational> reduce(std::vector<Rational> v) const {
    for (const auto& row : rows_) {
      const Rational lead = v[row.second];
      if (!lead.is_zero())
        for (int c = 0; c < width_; ++c) v[c] -= lead * row.first[c];
    }
    return v;
  }

  void add(std::vector<Rational> v) {
    v = reduce(std::move(v));
    int pivot = -1;
    for (int c = 0; c < width_; ++c)
      if (!v[c].is_zero()) {
        pivot = c;
        break;
      }
    if (pivot < 0) return;
    Rational inv = Rational(1) / v[pivot];
    for (int c = 0; c < width_; ++c) v[c] *= inv;
    for (auto& row : rows_) {
      Rational f = row.first[pivot];
      if (!f.is_zero())
        for (int c = 0; c < width_; ++c) row.first[c] -= f * v[c];
    }
    rows_.push_back({std::move(v), pivot});
  }

  bool contains(const std::vector<Rational>& v) const {
    for (const auto& x : reduce(v))
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  int width_;
  std::vector<std::pair<std::vector<Rational>, int>> rows_;
};

}  // namespace detail

struct TwinVerdict {
  enum class Status { HasClassicalTwins, NoQuantumTwins, Unknown };
  enum class Proof { None, InvertibleA, PatternForced };
  Status status = Status::Unknown;
  Proof proof = Proof::None;
  std::vector<std::pair<int, int>> twin_pairs;
  // Symbol equalities p_a = p_b forced by commutation with A alone.
  std::vector<std::pair<int, int>> commutation_equalities;
  // Symbols s with p_s = q_s forced by the full system {PA=AP, QA=AQ, PA=QA}.
  std::vector<int> forced_equal_pq;
  bool p_equals_q = false;
  long long det = 0;

  std::string to_string() const;
};

// Decides the quantum-twin question for a classical graph along the
// pattern route: classical twins and invertibility short-circuit, otherwise
// the affine pattern is solved linearly over the free symbols.
TwinVerdict pattern_twin_solver(const ClassicalGraph& g, const GeneratingPattern& pat);

namespace detail {
// Affine pattern entry as a coefficient vector over [1, p_0.., q_0..].
std::vector<Rational> pattern_entry_vector(const GeneratingPattern& pat, int i, int j,
                                           bool q_side, int num_symbols);
}  // namespace detail

// Fast-path verdict for a general quantum graph: invertible adjacency rules
// quantum twins out; anything else is not decided here.
template <class S>
TwinVerdict quantum_twin_verdict(const QuantumGraph<S>& qg, double tol = kDefaultTol) {
  TwinVerdict v;
  Mat<Cplx> a = qg.adjacency.to_cplx();
  const int n = a.rows();
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    double best = tol;
    for (int r = rank; r < n; ++r)
      if (std::abs(a(r, col)) > best) {
        best = std::abs(a(r, col));
        piv = r;
      }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(rank, j));
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      Cplx f = a(r, col) / a(rank, col);
      for (int j = 0; j < n; ++j) a(r, j) -= f * a(rank, j);
    }
    ++rank;
  }
  if (rank == n) {
    v.status = TwinVerdict::Status::NoQuantumTwins;
    v.proof = TwinVerdict::Proof::InvertibleA;
  }
  return v;
}

// Quantum-isomorphism witness: a unitary block matrix p with d x d operator
// entries making x -> p(x (x) 1) a unital *-homomorphism intertwining the
// adjacencies.
template <class S>
struct IsoCertificate {
  QuantumGraph<S> source;  // G
  QuantumGraph<S> target;  // F
  int aux_dim = 1;
  Mat<S> p;                // (dim F * d) x (dim G * d)
};

struct CertReport {
  double residual_unitary_left = 0.0;   // p p* - id
  double residual_unitary_right = 0.0;  // p* p - id
  double residual_unital = 0.0;
  double residual_multiplicative = 0.0;
  double residual_star = 0.0;
  double residual_intertwine = 0.0;
  bool valid = false;
};

namespace detail {

// rho(basis_j) = sum_i e_i^F (x) p_ij as an element of C(F) (x) M_d.
template <class S>
AlgebraElement<S> certificate_rho_basis(const IsoCertificate<S>& cert, int j) {
  const GnsSpace<S>& spf = cert.target.space;
  const int d = cert.aux_dim;
  AlgebraElement<S> out;
  for (int n : spf.algebra.block_dims) out.blocks.emplace_back(n * d, n * d);
  for (int b = 0; b < spf.algebra.num_blocks(); ++b) {
    int n = spf.algebra.block_dims[b];
    for (int jr = 0; jr < n; ++jr)
      for (int kc = 0; kc < n; ++kc) {
        int i = spf.algebra.basis_index(b, jr, kc);
        S coeff = spf.inv_sqrt_w[i];
        for (int a = 0; a < d; ++a)
          for (int bb = 0; bb < d; ++bb)
            out.blocks[b](jr * d + a, kc * d + bb) += coeff * cert.p(i * d + a, j * d + bb);
      }
  }
  return out;
}

template <class S>
AlgebraElement<S> certificate_rho(const IsoCertificate<S>& cert, const AlgebraElement<S>& x) {
  const GnsSpace<S>& spg = cert.source.space;
  Mat<S> coords = to_gns_vector(spg, x);
  const int d = cert.aux_dim;
  AlgebraElement<S> out;
  for (int n : cert.target.space.algebra.block_dims) out.blocks.emplace_back(n * d, n * d);
  for (int j = 0; j < spg.dim; ++j) {
    if (scalar_traits<S>::abs(coords(j, 0)) == 0.0) continue;
    AlgebraElement<S> term = certificate_rho_basis(cert, j);
    for (size_t b = 0; b < out.blocks.size(); ++b)
      out.blocks[b] = out.blocks[b] + term.blocks[b].scaled(coords(j, 0));
  }
  return out;
}

template <class S>
double element_distance(const AlgebraElement<S>& x, const AlgebraElement<S>& y) {
  double acc = 0;
  for (size_t b = 0; b < x.blocks.size(); ++b) {
    double r = residual(x.blocks[b], y.blocks[b]);
    acc += r * r;
  }
  return std::sqrt(acc);
}

}  // namespace detail

template <class S>
CertReport verify_iso_certificate(const IsoCertificate<S>& cert, double tol = kDefaultTol) {
  const GnsSpace<S>& spg = cert.source.space;
  const GnsSpace<S>& spf = cert.target.space;
  const int d = cert.aux_dim;
  if (d < 1) throw Error("certificate: aux_dim must be >= 1");
  if (cert.p.rows() != spf.dim * d || cert.p.cols() != spg.dim * d)
    throw Error("certificate: block matrix has wrong shape");
  if (!check_quantum_graph(cert.source, tol).all_pass())
    throw Error("certificate: source fails the quantum graph axioms");
  if (!check_quantum_graph(cert.target, tol).all_pass())
    throw Error("certificate: target fails the quantum graph axioms");
  if (scalar_traits<S>::abs(spf.form.delta_sq - spg.form.delta_sq) >
      tol * (1.0 + scalar_traits<S>::abs(spg.form.delta_sq)))
    throw Error("certificate: delta forms disagree between source and target");

  CertReport rep;
  rep.residual_unitary_left =
      residual(cert.p * cert.p.adjoint(), Mat<S>::identity(spf.dim * d));
  rep.residual_unitary_right =
      residual(cert.p.adjoint() * cert.p, Mat<S>::identity(spg.dim * d));

  rep.residual_unital = detail::element_distance(
      detail::certificate_rho(cert, identity_element<S>(spg.algebra)),
      [&] {
        AlgebraElement<S> one;
        for (int n : spf.algebra.block_dims) one.blocks.push_back(Mat<S>::identity(n * d));
        return one;
      }());

  // Multiplicativity and star-preservation over the matrix-unit basis.
  double worst_mult = 0, worst_star = 0;
  std::vector<AlgebraElement<S>> units;
  std::vector<AlgebraElement<S>> images;
  for (int b = 0; b < spg.algebra.num_blocks(); ++b) {
    int n = spg.algebra.block_dims[b];
    for (int jr = 0; jr < n; ++jr)
      for (int kc = 0; kc < n; ++kc) {
        AlgebraElement<S> e = zero_element<S>(spg.algebra);
        e.blocks[b](jr, kc) = scalar_traits<S>::one();
        units.push_back(e);
        images.push_back(detail::certificate_rho(cert, e));
      }
  }
  for (size_t a = 0; a < units.size(); ++a) {
    worst_star = std::max(worst_star,
                          detail::element_distance(detail::certificate_rho(cert, star(units[a])),
                                                   star(images[a])));
    for (size_t b = 0; b < units.size(); ++b) {
      AlgebraElement<S> lhs = detail::certificate_rho(cert, multiply(units[a], units[b]));
      AlgebraElement<S> rhs = multiply(images[a], images[b]);
      worst_mult = std::max(worst_mult, detail::element_distance(lhs, rhs));
    }
  }
  rep.residual_multiplicative = worst_mult;
  rep.residual_star = worst_star;

  Mat<S> idd = Mat<S>::identity(d);
  rep.residual_intertwine = residual(cert.target.adjacency.kron(idd) * cert.p,
                                     cert.p * cert.source.adjacency.kron(idd));

  rep.valid = rep.residual_unitary_left <= tol && rep.residual_unitary_right <= tol &&
              rep.residual_unital <= tol && rep.residual_multiplicative <= tol &&
              rep.residual_star <= tol && rep.residual_intertwine <= tol;
  return rep;
}

// Mycielski lift of a certificate (the element p-hat built from the
// embeddings of both sides); r = 1 returns the certificate unchanged.
template <class S>
IsoCertificate<S> lift_certificate(const IsoCertificate<S>& cert, int r,
                                   double tol = kDefaultTol) {
  if (r < 1) throw Error("lift_certificate: r must be >= 1");
  CertReport rep = verify_iso_certificate(cert, tol);
  if (!rep.valid) throw Error("lift_certificate: input certificate is invalid");
  if (r == 1) return cert;
  QuantumGraph<S> mug = mycielskian(cert.source, r, tol);
  QuantumGraph<S> muf = mycielskian(cert.target, r, tol);
  MycielskiEmbeddings<S> embg = embeddings(cert.source, r);
  MycielskiEmbeddings<S> embf = embeddings(cert.target, r);
  Mat<S> idd = Mat<S>::identity(cert.aux_dim);
  Mat<S> phat = embf.iota[0].kron(idd) * embg.iota[0].kron(idd).adjoint();
  for (int k = 1; k <= r; ++k)
    phat = phat + embf.iota[k].kron(idd) * cert.p * embg.iota[k].kron(idd).adjoint();
  return IsoCertificate<S>{std::move(mug), std::move(muf), cert.aux_dim, std::move(phat)};
}

}  // namespace qmyc
