#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "qmyc/errors.hpp"

namespace qmyc {

// Exact rational over int64 with overflow-checked arithmetic.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  static Rational from_string(const std::string& s);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  Rational operator-() const { return Rational(-num_, den_, NoReduce{}); }
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

 private:
  struct NoReduce {};
  Rational(long long n, long long d, NoReduce) : num_(n), den_(d) {}
  void normalize();
  static long long checked(__int128 v);

  long long num_;
  long long den_;  // always > 0
};

}  // namespace qmyc
