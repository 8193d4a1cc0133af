#include "qmyc/radical.hpp"

#include <algorithm>
#include <cmath>

namespace qmyc {

namespace {

// n = square * squarefree; returns (squarefree, sqrt(square))
std::pair<long long, long long> squarefree_split(long long n) {
  long long root = 1, core = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) root *= p;
    if (e % 2 == 1) core *= p;
  }
  core *= n;
  return {core, root};
}

}  // namespace

Radical Radical::sqrt_of(const Rational& radicand) {
  if (radicand.is_negative()) throw Error("sqrt of negative rational");
  if (radicand.is_zero()) return Radical();
  // sqrt(p/q) = sqrt(p*q) / q
  __int128 pq = static_cast<__int128>(radicand.num()) * radicand.den();
  if (pq > INT64_MAX) throw Error("radical overflow");
  auto [core, root] = squarefree_split(static_cast<long long>(pq));
  Radical r;
  r.terms_.push_back({core, Rational(root, radicand.den())});
  return r;
}

Rational Radical::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].first == 1) return terms_[0].second;
  throw Error("radical is not rational");
}

double Radical::to_double() const {
  double v = 0;
  for (const auto& [d, c] : terms_) v += c.to_double() * std::sqrt(static_cast<double>(d));
  return v;
}

std::string Radical::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.to_string();
    if (d != 1) s += "*sqrt(" + std::to_string(d) + ")";
  }
  return s;
}

void Radical::add_term(long long d, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                             [](const auto& t, long long key) { return t.first < key; });
  if (it != terms_.end() && it->first == d) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {d, c});
  }
}

Radical Radical::operator-() const {
  Radical r = *this;
  for (auto& [d, c] : r.terms_) c = -c;
  return r;
}

Radical Radical::operator+(const Radical& o) const {
  Radical r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, c);
  return r;
}

Radical Radical::operator*(const Radical& o) const {
  Radical r;
  for (const auto& [d1, c1] : terms_) {
    for (const auto& [d2, c2] : o.terms_) {
      __int128 prod = static_cast<__int128>(d1) * d2;
      if (prod > INT64_MAX) throw Error("radical overflow");
      auto [core, root] = squarefree_split(static_cast<long long>(prod));
      r.add_term(core, c1 * c2 * Rational(root));
    }
  }
  return r;
}

Radical Radical::operator/(const Radical& o) const {
  if (o.terms_.empty()) throw Error("radical division by zero");
  if (o.terms_.size() != 1) throw Error("division by non-simple radical");
  // 1 / (c*sqrt(d)) = (1/(c*d)) * sqrt(d)
  Radical inv;
  inv.terms_.push_back({o.terms_[0].first,
                        Rational(1) / (o.terms_[0].second * Rational(o.terms_[0].first))});
  return *this * inv;
}

Radical Radical::sqrt() const {
  return sqrt_of(rational_value());
}

}  // namespace qmyc
