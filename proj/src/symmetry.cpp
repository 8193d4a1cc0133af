#include "qmyc/symmetry.hpp"

#include <algorithm>
#include <map>

#include "qmyc/rational.hpp"

namespace qmyc {

Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

std::vector<std::pair<int, int>> classical_twins(const ClassicalGraph& g) {
  g.validate();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.adj[i] == g.adj[j]) pairs.push_back({i, j});
  return pairs;
}

long long det_adjacency(const ClassicalGraph& g) {
  g.validate();
  const int n = g.n;
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = g.adj[i][j];
  long long sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(m[i][j]) * m[k][k] -
                     static_cast<__int128>(m[i][k]) * m[k][j];
        v /= prev;
        if (v > INT64_MAX || v < INT64_MIN) throw Error("det: overflow");
        m[i][j] = static_cast<long long>(v);
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_automorphism(const ClassicalGraph& g, const Permutation& sigma) {
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (g.adj[i][j] != g.adj[sigma[i]][sigma[j]]) return false;
  return true;
}

namespace {

void search_automorphisms(const ClassicalGraph& g, std::vector<int>& perm,
                          std::vector<bool>& used, int depth,
                          std::vector<Permutation>& out) {
  const int n = g.n;
  if (depth == n) {
    out.push_back(perm);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (used[v] || g.degree(v) != g.degree(depth)) continue;
    bool ok = true;
    for (int j = 0; j < depth && ok; ++j)
      if (g.adj[depth][j] != g.adj[v][perm[j]]) ok = false;
    if (!ok) continue;
    perm[depth] = v;
    used[v] = true;
    search_automorphisms(g, perm, used, depth + 1, out);
    used[v] = false;
  }
}

}  // namespace

std::vector<Permutation> automorphism_group(const ClassicalGraph& g, int limit) {
  g.validate();
  if (g.n > limit)
    throw SizeLimitError("automorphism_group: graph exceeds the vertex limit");
  std::vector<Permutation> out;
  std::vector<int> perm(g.n);
  std::vector<bool> used(g.n, false);
  search_automorphisms(g, perm, used, 0, out);
  return out;
}

GeneratingPattern fulton_pattern(const ClassicalGraph& g, int l_max) {
  g.validate();
  const int n = g.n;
  if (l_max <= 0) l_max = n;

  // Diagonal profiles ((A^l)_ii)_{l<=l_max}, exact integers.
  std::vector<std::vector<long long>> profile(n);
  {
    std::vector<std::vector<long long>> power(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) power[i][j] = g.adj[i][j];
    for (int l = 1; l <= l_max; ++l) {
      for (int i = 0; i < n; ++i) profile[i].push_back(power[i][i]);
      if (l == l_max) break;
      std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          if (power[i][k] == 0) continue;
          for (int j = 0; j < n; ++j) {
            if (!g.adj[k][j]) continue;
            next[i][j] += power[i][k];
            if (next[i][j] > (1LL << 60)) throw Error("fulton_pattern: profile overflow");
          }
        }
      power = std::move(next);
    }
  }

  GeneratingPattern pat;
  pat.n = n;
  pat.class_of.assign(n, -1);
  std::map<std::vector<long long>, int> by_profile;
  for (int v = 0; v < n; ++v) {
    auto it = by_profile.find(profile[v]);
    if (it == by_profile.end()) {
      it = by_profile.emplace(profile[v], static_cast<int>(pat.classes.size())).first;
      pat.classes.push_back({});
    }
    pat.class_of[v] = it->second;
    pat.classes[it->second].push_back(v);
  }
  pat.sym_of_class.assign(pat.classes.size(), -1);
  for (size_t c = 0; c < pat.classes.size(); ++c) {
    if (pat.classes[c].size() == 2) pat.sym_of_class[c] = pat.num_symbols++;
    if (pat.classes[c].size() >= 3) pat.affine = false;
  }

  pat.entries.assign(n, std::vector<PatternEntry>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PatternEntry& e = pat.entries[i][j];
      if (pat.class_of[i] != pat.class_of[j]) {
        e.kind = PatternEntry::Kind::Zero;
        continue;
      }
      int c = pat.class_of[i];
      size_t size = pat.classes[c].size();
      if (size == 1) {
        e.kind = PatternEntry::Kind::One;
      } else if (size == 2) {
        e.kind = i == j ? PatternEntry::Kind::Sym : PatternEntry::Kind::OneMinusSym;
        e.sym = pat.sym_of_class[c];
      } else {
        e.kind = PatternEntry::Kind::Free;
        e.free_class = c;
      }
    }
  return pat;
}

std::string GeneratingPattern::entry_string(int i, int j) const {
  const PatternEntry& e = entries[i][j];
  switch (e.kind) {
    case PatternEntry::Kind::Zero:
      return "0";
    case PatternEntry::Kind::One:
      return "1";
    case PatternEntry::Kind::Sym:
      return "p" + std::to_string(e.sym + 1);
    case PatternEntry::Kind::OneMinusSym:
      return "1-p" + std::to_string(e.sym + 1);
    case PatternEntry::Kind::Free:
      return "*";
  }
  return "?";
}

std::string GeneratingPattern::to_string() const {
  std::string out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out += ' ';
      std::string s = entry_string(i, j);
      out += s;
      for (size_t pad = s.size(); pad < 5; ++pad) out += ' ';
    }
    out += '\n';
  }
  return out;
}

namespace detail {

std::vector<Rational> pattern_entry_vector(const GeneratingPattern& pat, int i, int j,
                                           bool q_side, int num_symbols) {
  std::vector<Rational> v(1 + 2 * num_symbols);
  const PatternEntry& e = pat.entries[i][j];
  int base = 1 + (q_side ? num_symbols : 0);
  switch (e.kind) {
    case PatternEntry::Kind::Zero:
      break;
    case PatternEntry::Kind::One:
      v[0] = Rational(1);
      break;
    case PatternEntry::Kind::Sym:
      v[base + e.sym] = Rational(1);
      break;
    case PatternEntry::Kind::OneMinusSym:
      v[0] = Rational(1);
      v[base + e.sym] = Rational(-1);
      break;
    case PatternEntry::Kind::Free:
      throw Error("pattern solver: non-affine pattern");
  }
  return v;
}

}  // namespace detail

TwinVerdict pattern_twin_solver(const ClassicalGraph& g, const GeneratingPattern& pat) {
  TwinVerdict verdict;
  verdict.twin_pairs = classical_twins(g);
  verdict.det = det_adjacency(g);
  if (!verdict.twin_pairs.empty()) {
    verdict.status = TwinVerdict::Status::HasClassicalTwins;
    return verdict;
  }
  if (verdict.det != 0) {
    verdict.status = TwinVerdict::Status::NoQuantumTwins;
    verdict.proof = TwinVerdict::Proof::InvertibleA;
    return verdict;
  }
  if (!pat.affine) {
    verdict.status = TwinVerdict::Status::Unknown;
    return verdict;
  }

  const int n = pat.n;
  const int s = pat.num_symbols;
  const int width = 1 + 2 * s;

  auto add_difference_rows = [&](detail::RationalRowSpace& space, bool left_q, bool right_q,
                                 bool right_is_AP) {
    // rows of L*A - A*R = 0 entrywise, L, R in {P, Q}
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<Rational> row(width);
        for (int k = 0; k < n; ++k) {
          if (g.adj[k][j]) {
            auto v = detail::pattern_entry_vector(pat, i, k, left_q, s);
            for (int c = 0; c < width; ++c) row[c] += v[c];
          }
          if (right_is_AP && g.adj[i][k]) {
            auto v = detail::pattern_entry_vector(pat, k, j, right_q, s);
            for (int c = 0; c < width; ++c) row[c] -= v[c];
          }
          if (!right_is_AP && g.adj[k][j]) {
            auto v = detail::pattern_entry_vector(pat, i, k, right_q, s);
            for (int c = 0; c < width; ++c) row[c] -= v[c];
          }
        }
        space.add(std::move(row));
      }
  };

  // Stage 1: commutation PA = AP alone; record forced symbol equalities.
  detail::RationalRowSpace commutation(width);
  add_difference_rows(commutation, false, false, true);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < a; ++b) {
      std::vector<Rational> diff(width);
      diff[1 + a] = Rational(1);
      diff[1 + b] = Rational(-1);
      if (commutation.contains(diff)) verdict.commutation_equalities.push_back({a, b});
    }

  // Stage 2: full system {PA = AP, QA = AQ, PA = QA}.
  detail::RationalRowSpace full(width);
  add_difference_rows(full, false, false, true);
  add_difference_rows(full, true, true, true);
  add_difference_rows(full, false, true, false);
  verdict.p_equals_q = true;
  for (int a = 0; a < s; ++a) {
    std::vector<Rational> diff(width);
    diff[1 + a] = Rational(1);
    diff[1 + s + a] = Rational(-1);
    if (full.contains(diff))
      verdict.forced_equal_pq.push_back(a);
    else
      verdict.p_equals_q = false;
  }
  if (verdict.p_equals_q) {
    verdict.status = TwinVerdict::Status::NoQuantumTwins;
    verdict.proof = TwinVerdict::Proof::PatternForced;
  } else {
    verdict.status = TwinVerdict::Status::Unknown;
  }
  return verdict;
}

std::string TwinVerdict::to_string() const {
  switch (status) {
    case Status::HasClassicalTwins: {
      std::string out = "HasClassicalTwins(";
      for (size_t i = 0; i < twin_pairs.size(); ++i) {
        if (i) out += ", ";
        out += "{" + std::to_string(twin_pairs[i].first) + "," +
               std::to_string(twin_pairs[i].second) + "}";
      }
      return out + ")";
    }
    case Status::NoQuantumTwins:
      return proof == Proof::InvertibleA ? "NoQuantumTwins(InvertibleA)"
                                         : "NoQuantumTwins(PatternForced)";
    case Status::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

}  // namespace qmyc
