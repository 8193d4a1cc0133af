#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "qmyc/errors.hpp"
#include "qmyc/matrix.hpp"

namespace qmyc {

// Finite-dimensional C*-algebra given as a direct sum of full matrix blocks.
struct BlockAlgebra {
  std::vector<int> block_dims;

  int num_blocks() const { return static_cast<int>(block_dims.size()); }

  // Dimension of the algebra and of its GNS space: sum of squares.
  int dim() const {
    int d = 0;
    for (int n : block_dims) d += n * n;
    return d;
  }

  bool commutative() const {
    for (int n : block_dims)
      if (n != 1) return false;
    return true;
  }

  int block_offset(int b) const {
    int off = 0;
    for (int i = 0; i < b; ++i) off += block_dims[i] * block_dims[i];
    return off;
  }

  // Basis order is block-major, then row-major within a block.
  int basis_index(int b, int row, int col) const {
    return block_offset(b) + row * block_dims[b] + col;
  }

  bool operator==(const BlockAlgebra& o) const { return block_dims == o.block_dims; }
};

BlockAlgebra make_algebra(const std::vector<int>& block_dims);

template <class S>
struct AlgebraElement {
  std::vector<Mat<S>> blocks;
};

template <class S>
AlgebraElement<S> zero_element(const BlockAlgebra& alg) {
  AlgebraElement<S> e;
  for (int n : alg.block_dims) e.blocks.emplace_back(n, n);
  return e;
}

template <class S>
AlgebraElement<S> identity_element(const BlockAlgebra& alg) {
  AlgebraElement<S> e;
  for (int n : alg.block_dims) e.blocks.push_back(Mat<S>::identity(n));
  return e;
}

template <class S>
AlgebraElement<S> multiply(const AlgebraElement<S>& a, const AlgebraElement<S>& b) {
  AlgebraElement<S> r;
  for (size_t i = 0; i < a.blocks.size(); ++i) r.blocks.push_back(a.blocks[i] * b.blocks[i]);
  return r;
}

template <class S>
AlgebraElement<S> star(const AlgebraElement<S>& a) {
  AlgebraElement<S> r;
  for (const auto& blk : a.blocks) r.blocks.push_back(blk.adjoint());
  return r;
}

// A faithful state with diagonal densities; delta_sq is the common per-block
// value of sum_k 1/w_k once validate_delta_form has accepted the weights.
template <class S>
struct DeltaForm {
  std::vector<std::vector<S>> weights;
  S delta_sq;
};

// GNS coordinates: orthonormal basis e_{jk}^(i)/sqrt(w[i][k]), block-major
// then row-major. All operators in this library are matrices in this basis.
template <class S>
struct GnsSpace {
  BlockAlgebra algebra;
  DeltaForm<S> form;
  int dim = 0;
  std::vector<S> sqrt_w;      // per basis index: sqrt of the column weight
  std::vector<S> inv_sqrt_w;
};

template <class S>
GnsSpace<S> make_gns_space(const BlockAlgebra& alg, const DeltaForm<S>& form) {
  GnsSpace<S> sp;
  sp.algebra = alg;
  sp.form = form;
  sp.dim = alg.dim();
  sp.sqrt_w.resize(sp.dim);
  sp.inv_sqrt_w.resize(sp.dim);
  for (int b = 0; b < alg.num_blocks(); ++b) {
    int n = alg.block_dims[b];
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int idx = alg.basis_index(b, j, k);
        S root = scalar_traits<S>::sqrt_nonneg(form.weights[b][k]);
        sp.sqrt_w[idx] = root;
        sp.inv_sqrt_w[idx] = scalar_traits<S>::one() / root;
      }
  }
  return sp;
}

template <class S>
Mat<S> to_gns_vector(const GnsSpace<S>& sp, const AlgebraElement<S>& x) {
  Mat<S> v(sp.dim, 1);
  for (int b = 0; b < sp.algebra.num_blocks(); ++b) {
    int n = sp.algebra.block_dims[b];
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int idx = sp.algebra.basis_index(b, j, k);
        v(idx, 0) = x.blocks[b](j, k) * sp.sqrt_w[idx];
      }
  }
  return v;
}

template <class S>
AlgebraElement<S> from_gns_vector(const GnsSpace<S>& sp, const Mat<S>& v) {
  AlgebraElement<S> x = zero_element<S>(sp.algebra);
  for (int b = 0; b < sp.algebra.num_blocks(); ++b) {
    int n = sp.algebra.block_dims[b];
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int idx = sp.algebra.basis_index(b, j, k);
        x.blocks[b](j, k) = v(idx, 0) * sp.inv_sqrt_w[idx];
      }
  }
  return x;
}

template <class S>
S psi(const GnsSpace<S>& sp, const AlgebraElement<S>& x) {
  S acc = scalar_traits<S>::zero();
  for (int b = 0; b < sp.algebra.num_blocks(); ++b) {
    int n = sp.algebra.block_dims[b];
    for (int k = 0; k < n; ++k) acc += sp.form.weights[b][k] * x.blocks[b](k, k);
  }
  return acc;
}

// <x, y> = psi(x* y)
template <class S>
S gns_inner(const GnsSpace<S>& sp, const AlgebraElement<S>& x, const AlgebraElement<S>& y) {
  if (x.blocks.size() != sp.algebra.block_dims.size() ||
      y.blocks.size() != sp.algebra.block_dims.size())
    throw Error("gns_inner: element shape mismatch");
  for (int b = 0; b < sp.algebra.num_blocks(); ++b)
    if (x.blocks[b].rows() != sp.algebra.block_dims[b] ||
        y.blocks[b].rows() != sp.algebra.block_dims[b])
      throw Error("gns_inner: element shape mismatch");
  return psi(sp, multiply(star(x), y));
}

// m as a matrix L2 (x) L2 -> L2; tensor index is (left * dim + right).
template <class S>
Mat<S> mult_operator(const GnsSpace<S>& sp) {
  Mat<S> m(sp.dim, sp.dim * sp.dim);
  for (int b = 0; b < sp.algebra.num_blocks(); ++b) {
    int n = sp.algebra.block_dims[b];
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          int left = sp.algebra.basis_index(b, j, k);
          int right = sp.algebra.basis_index(b, k, l);
          int out = sp.algebra.basis_index(b, j, l);
          m(out, left * sp.dim + right) = sp.inv_sqrt_w[sp.algebra.basis_index(b, j, k)];
        }
  }
  return m;
}

// eta: C -> L2, 1 |-> GNS image of the unit.
template <class S>
Mat<S> unit_operator(const GnsSpace<S>& sp) {
  return to_gns_vector(sp, identity_element<S>(sp.algebra));
}

template <class S>
Mat<S> adjoint(const Mat<S>& op) {
  return op.adjoint();
}

// m applied to a pair of GNS vectors: the GNS image of the element product.
template <class S>
Mat<S> multiply_vectors(const GnsSpace<S>& sp, const Mat<S>& u, const Mat<S>& v) {
  return to_gns_vector(sp, multiply(from_gns_vector(sp, u), from_gns_vector(sp, v)));
}

// eta* applied to a GNS vector: psi of the underlying element.
template <class S>
S psi_of_vector(const GnsSpace<S>& sp, const Mat<S>& v) {
  S acc = scalar_traits<S>::zero();
  for (int b = 0; b < sp.algebra.num_blocks(); ++b) {
    int n = sp.algebra.block_dims[b];
    for (int k = 0; k < n; ++k) {
      int idx = sp.algebra.basis_index(b, k, k);
      acc += sp.sqrt_w[idx] * v(idx, 0);
    }
  }
  return acc;
}

// GNS image of x* as a function of the GNS image of x (antilinear).
template <class S>
Mat<S> apply_star(const GnsSpace<S>& sp, const Mat<S>& v) {
  return to_gns_vector(sp, star(from_gns_vector(sp, v)));
}

// m (X (x) Y) m* assembled column by column; avoids dim^2 x dim^2 blowup.
template <class S>
Mat<S> schur_composite(const GnsSpace<S>& sp, const Mat<S>& X, const Mat<S>& Y) {
  Mat<S> result(sp.dim, sp.dim);
  Mat<S> xcol(sp.dim, 1), ycol(sp.dim, 1);
  for (int b = 0; b < sp.algebra.num_blocks(); ++b) {
    int n = sp.algebra.block_dims[b];
    for (int j = 0; j < n; ++j)
      for (int mcol = 0; mcol < n; ++mcol) {
        int gamma = sp.algebra.basis_index(b, j, mcol);
        for (int k = 0; k < n; ++k) {
          int left = sp.algebra.basis_index(b, j, k);
          int right = sp.algebra.basis_index(b, k, mcol);
          for (int t = 0; t < sp.dim; ++t) {
            xcol(t, 0) = X(t, left);
            ycol(t, 0) = Y(t, right);
          }
          Mat<S> prod = multiply_vectors(sp, xcol, ycol);
          S coeff = scalar_traits<S>::conj(sp.inv_sqrt_w[left]);
          for (int t = 0; t < sp.dim; ++t) result(t, gamma) += coeff * prod(t, 0);
        }
      }
  }
  return result;
}

// (id (x) eta* m)(id (x) A (x) id)(m* eta (x) id), the undirectedness composite.
template <class S>
Mat<S> undirected_composite(const GnsSpace<S>& sp, const Mat<S>& A) {
  Mat<S> result(sp.dim, sp.dim);
  Mat<S> acol(sp.dim, 1), basis(sp.dim, 1);
  for (int gamma = 0; gamma < sp.dim; ++gamma) {
    for (int t = 0; t < sp.dim; ++t) basis(t, 0) = scalar_traits<S>::zero();
    basis(gamma, 0) = scalar_traits<S>::one();
    for (int b = 0; b < sp.algebra.num_blocks(); ++b) {
      int n = sp.algebra.block_dims[b];
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          int out = sp.algebra.basis_index(b, j, k);
          int mid = sp.algebra.basis_index(b, k, j);
          for (int t = 0; t < sp.dim; ++t) acol(t, 0) = A(t, mid);
          S scalar = psi_of_vector(sp, multiply_vectors(sp, acol, basis));
          S coeff = sp.sqrt_w[sp.algebra.basis_index(b, j, j)] *
                    scalar_traits<S>::conj(sp.inv_sqrt_w[out]);
          result(out, gamma) += coeff * scalar;
        }
    }
  }
  return result;
}

// Predicates for *-automorphism preconditions, all in GNS coordinates.
template <class S>
bool is_multiplicative(const GnsSpace<S>& sp, const Mat<S>& U, double tol = kDefaultTol) {
  Mat<S> m = mult_operator(sp);
  return residual(U * m, m * U.kron(U)) <= tol;
}

template <class S>
bool is_unital_map(const GnsSpace<S>& sp, const Mat<S>& U, double tol = kDefaultTol) {
  Mat<S> eta = unit_operator(sp);
  return residual(U * eta, eta) <= tol;
}

template <class S>
bool preserves_psi(const GnsSpace<S>& sp, const Mat<S>& U, double tol = kDefaultTol) {
  Mat<S> eta_star = unit_operator(sp).adjoint();
  return residual(eta_star * U, eta_star) <= tol;
}

template <class S>
bool is_star_map(const GnsSpace<S>& sp, const Mat<S>& U, double tol = kDefaultTol) {
  Mat<S> basis(sp.dim, 1);
  for (int j = 0; j < sp.dim; ++j) {
    for (int t = 0; t < sp.dim; ++t) basis(t, 0) = scalar_traits<S>::zero();
    basis(j, 0) = scalar_traits<S>::one();
    Mat<S> starred = U * apply_star(sp, basis);
    Mat<S> col(sp.dim, 1);
    for (int t = 0; t < sp.dim; ++t) col(t, 0) = U(t, j);
    if (residual(starred, apply_star(sp, col)) > tol) return false;
  }
  return true;
}

namespace detail {
template <class S>
void check_state_shape(const BlockAlgebra& alg, const std::vector<std::vector<S>>& weights) {
  if (static_cast<int>(weights.size()) != alg.num_blocks())
    throw Error("delta form: weight blocks do not match algebra");
  for (int b = 0; b < alg.num_blocks(); ++b)
    if (static_cast<int>(weights[b].size()) != alg.block_dims[b])
      throw Error("delta form: weight length mismatch in block " + std::to_string(b));
}
}  // namespace detail

// Checks faithfulness, psi(1) = 1 and mm* = delta^2 id, then cross-checks the
// per-block closed form delta^2 = sum_k 1/w_k.
template <class S>
DeltaForm<S> validate_delta_form(const BlockAlgebra& alg,
                                 const std::vector<std::vector<S>>& weights,
                                 double tol = kDefaultTol) {
  detail::check_state_shape(alg, weights);
  S total = scalar_traits<S>::zero();
  for (const auto& blk : weights)
    for (const auto& w : blk) {
      if (!scalar_traits<S>::is_positive(w)) throw Error("delta form: state is not faithful");
      total += w;
    }
  if (scalar_traits<S>::abs(total - scalar_traits<S>::one()) > tol)
    throw Error("delta form: psi(1) != 1");

  DeltaForm<S> form{weights, scalar_traits<S>::zero()};
  for (const auto& w : weights[0]) form.delta_sq += scalar_traits<S>::one() / w;

  GnsSpace<S> sp = make_gns_space(alg, form);
  Mat<S> m = mult_operator(sp);
  Mat<S> mmstar = m * m.adjoint();
  double dsq = scalar_traits<S>::abs(form.delta_sq);
  if (residual(mmstar, Mat<S>::identity(sp.dim).scaled(form.delta_sq)) > tol * dsq)
    throw Error("delta form: mm* is not a scalar multiple of the identity");
  for (const auto& blk : weights) {
    S acc = scalar_traits<S>::zero();
    for (const auto& w : blk) acc += scalar_traits<S>::one() / w;
    if (scalar_traits<S>::abs(acc - form.delta_sq) > tol * dsq)
      throw Error("delta form: per-block 1/w sums disagree");
  }
  return form;
}

}  // namespace qmyc
