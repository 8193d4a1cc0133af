#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmyc/rational.hpp"

namespace qmyc {

// Exact real scalar of the form sum_i c_i * sqrt(d_i) with rational c_i and
// squarefree positive integer radicands d_i (d = 1 is the rational part).
// Closed under +, -, *; division and sqrt are supported in the cases the
// GNS constructions actually produce (single-term divisors, rational sqrt).
class Radical {
 public:
  Radical() = default;
  Radical(long long n) { if (n != 0) terms_.push_back({1, Rational(n)}); }
  Radical(const Rational& q) { if (!q.is_zero()) terms_.push_back({1, q}); }

  // c * sqrt(radicand) for a nonnegative rational radicand.
  static Radical sqrt_of(const Rational& radicand);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1);
  }
  Rational rational_value() const;  // throws if not rational
  double to_double() const;
  std::string to_string() const;

  Radical operator-() const;
  Radical operator+(const Radical& o) const;
  Radical operator-(const Radical& o) const { return *this + (-o); }
  Radical operator*(const Radical& o) const;
  Radical operator/(const Radical& o) const;
  Radical& operator+=(const Radical& o) { return *this = *this + o; }
  Radical& operator-=(const Radical& o) { return *this = *this - o; }
  Radical& operator*=(const Radical& o) { return *this = *this * o; }

  bool operator==(const Radical& o) const { return terms_ == o.terms_; }
  bool operator!=(const Radical& o) const { return !(*this == o); }

  Radical sqrt() const;  // exact; requires a nonnegative rational value

 private:
  void add_term(long long d, const Rational& c);
  // sorted by radicand; no zero coefficients
  std::vector<std::pair<long long, Rational>> terms_;
};

}  // namespace qmyc
