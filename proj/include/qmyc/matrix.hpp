#pragma once

#include <cassert>
#include <cmath>
#include <vector>

#include "qmyc/scalar.hpp"

namespace qmyc {

// Dense row-major matrix over either arithmetic path.
template <class S>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, scalar_traits<S>::zero()) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const S& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  Mat operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  Mat operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const S& a = (*this)(i, k);
        if (scalar_traits<S>::abs(a) == 0.0) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    }
    return r;
  }

  Mat scaled(const S& s) const {
    Mat r = *this;
    for (auto& v : r.data_) v = v * s;
    return r;
  }

  // Conjugate transpose; an exact adjoint in orthonormal coordinates.
  Mat adjoint() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = scalar_traits<S>::conj((*this)(i, j));
    return r;
  }

  Mat kron(const Mat& o) const {
    Mat r(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const S& a = (*this)(i, j);
        if (scalar_traits<S>::abs(a) == 0.0) continue;
        for (int k = 0; k < o.rows_; ++k)
          for (int l = 0; l < o.cols_; ++l)
            r(i * o.rows_ + k, j * o.cols_ + l) = a * o(k, l);
      }
    return r;
  }

  // Writes o into this matrix with top-left corner at (r0, c0).
  void place(int r0, int c0, const Mat& o) {
    for (int i = 0; i < o.rows_; ++i)
      for (int j = 0; j < o.cols_; ++j) (*this)(r0 + i, c0 + j) = o(i, j);
  }

  Mat block(int r0, int c0, int nr, int nc) const {
    Mat r(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }

  double frobenius_norm() const {
    double s = 0;
    for (const auto& v : data_) {
      double a = scalar_traits<S>::abs(v);
      s += a * a;
    }
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0;
    for (const auto& v : data_) m = std::max(m, scalar_traits<S>::abs(v));
    return m;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Mat<Cplx> to_cplx() const {
    Mat<Cplx> r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = scalar_traits<S>::to_cplx((*this)(i, j));
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<S> data_;
};

template <class S>
double residual(const Mat<S>& a, const Mat<S>& b) {
  return (a - b).frobenius_norm();
}

}  // namespace qmyc
