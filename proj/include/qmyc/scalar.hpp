#pragma once

#include <cmath>
#include <complex>

#include "qmyc/radical.hpp"

namespace qmyc {

using Cplx = std::complex<double>;

// Uniform interface over the two arithmetic paths: complex floating point
// and exact real radicals (classical graphs with rational weights).
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Cplx> {
  static Cplx zero() { return {0.0, 0.0}; }
  static Cplx one() { return {1.0, 0.0}; }
  static Cplx from_int(long long n) { return {static_cast<double>(n), 0.0}; }
  static Cplx from_rational(const Rational& q) { return {q.to_double(), 0.0}; }
  static Cplx conj(const Cplx& s) { return std::conj(s); }
  static double abs(const Cplx& s) { return std::abs(s); }
  static Cplx to_cplx(const Cplx& s) { return s; }
  static Cplx sqrt_nonneg(const Cplx& s) { return std::sqrt(s.real()); }
  static bool is_positive(const Cplx& s) { return s.imag() == 0.0 && s.real() > 0.0; }
  static constexpr bool exact = false;
};

template <>
struct scalar_traits<Radical> {
  static Radical zero() { return Radical(); }
  static Radical one() { return Radical(1); }
  static Radical from_int(long long n) { return Radical(n); }
  static Radical from_rational(const Rational& q) { return Radical(q); }
  static Radical conj(const Radical& s) { return s; }
  static double abs(const Radical& s) { return std::fabs(s.to_double()); }
  static Cplx to_cplx(const Radical& s) { return {s.to_double(), 0.0}; }
  static Radical sqrt_nonneg(const Radical& s) { return s.sqrt(); }
  static bool is_positive(const Radical& s) {
    return !s.is_zero() && s.to_double() > 0.0;
  }
  static constexpr bool exact = true;
};

inline constexpr double kDefaultTol = 1e-9;

}  // namespace qmyc
