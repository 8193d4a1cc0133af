#include "qmyc/rational.hpp"

#include <cstdlib>

namespace qmyc {

long long Rational::checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error("rational overflow");
  return static_cast<long long>(v);
}

void Rational::normalize() {
  if (den_ == 0) throw Error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw ParseError("bad rational literal: " + s);
  }
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  __int128 g = 1;
  {
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    g = a == 0 ? 1 : a;
  }
  return Rational(checked(n / g), checked(d / g));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  long long g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
  long long g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
  __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
  __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
  return Rational(checked(n), checked(d));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw Error("rational division by zero");
  return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

}  // namespace qmyc
