#include "qmyc/labeling.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace qmyc {

namespace {

bool labeling_preserved_by(const ClassicalLabeling& lab, const Permutation& sigma) {
  for (size_t v = 0; v < lab.labels.size(); ++v)
    if (lab.labels[v] != lab.labels[sigma[v]]) return false;
  return true;
}

// Backtracking existence search for a c-distinguishing labeling. Labels are
// introduced canonically (label k+1 only after k) and automorphisms are
// dropped as soon as the partial labeling breaks them; an empty surviving
// set means any completion works.
bool exists_distinguishing(const ClassicalGraph& g, const std::vector<Permutation>& nontrivial,
                           int c, std::vector<int>* witness) {
  const int n = g.n;
  std::vector<int> labels(n, 0);
  std::vector<const Permutation*> alive(nontrivial.size());
  for (size_t i = 0; i < nontrivial.size(); ++i) alive[i] = &nontrivial[i];

  // inverse permutations, aligned with `alive`
  std::vector<Permutation> inverses(nontrivial.size());
  for (size_t i = 0; i < nontrivial.size(); ++i) {
    inverses[i].resize(n);
    for (int v = 0; v < n; ++v) inverses[i][nontrivial[i][v]] = v;
  }
  std::vector<const Permutation*> alive_inv(nontrivial.size());
  for (size_t i = 0; i < nontrivial.size(); ++i) alive_inv[i] = &inverses[i];

  std::function<bool(int, int, const std::vector<const Permutation*>&,
                     const std::vector<const Permutation*>&)>
      rec = [&](int v, int max_used, const std::vector<const Permutation*>& cur,
                const std::vector<const Permutation*>& cur_inv) -> bool {
    if (cur.empty()) {
      for (int u = v; u < n; ++u) labels[u] = 1;
      if (witness) *witness = labels;
      return true;
    }
    if (v == n) return false;
    int top = std::min(c, max_used + 1);
    for (int l = 1; l <= top; ++l) {
      labels[v] = l;
      std::vector<const Permutation*> next, next_inv;
      for (size_t i = 0; i < cur.size(); ++i) {
        const Permutation& sig = *cur[i];
        const Permutation& inv = *cur_inv[i];
        int u = sig[v];
        if (u <= v && labels[u] != l) continue;  // broken
        int w = inv[v];
        if (w <= v && labels[w] != l) continue;
        next.push_back(cur[i]);
        next_inv.push_back(cur_inv[i]);
      }
      if (rec(v + 1, std::max(max_used, l), next, next_inv)) return true;
    }
    labels[v] = 0;
    return false;
  };
  return rec(0, 0, alive, alive_inv);
}

std::optional<std::pair<int, std::vector<int>>> distinguishing_search(
    const ClassicalGraph& g, int max_c, int limit) {
  g.validate();
  if (max_c < 1) throw Error("distinguishing_number: max_c must be >= 1");
  std::vector<Permutation> auts = automorphism_group(g, limit);
  std::vector<Permutation> nontrivial;
  for (auto& p : auts)
    if (p != identity_permutation(g.n)) nontrivial.push_back(std::move(p));
  for (int c = 1; c <= max_c; ++c) {
    std::vector<int> witness;
    if (exists_distinguishing(g, nontrivial, c, &witness))
      return std::make_pair(c, witness);
  }
  return std::nullopt;
}

}  // namespace

bool is_distinguishing(const ClassicalGraph& g, const ClassicalLabeling& lab, int limit) {
  g.validate();
  if (static_cast<int>(lab.labels.size()) != g.n)
    throw Error("is_distinguishing: wrong number of labels");
  int c = lab.num_labels();
  for (int l : lab.labels)
    if (l < 1 || l > c) throw Error("is_distinguishing: label out of range");
  Permutation id = identity_permutation(g.n);
  for (const Permutation& sigma : automorphism_group(g, limit)) {
    if (sigma == id) continue;
    if (labeling_preserved_by(lab, sigma)) return false;
  }
  return true;
}

int distinguishing_number(const ClassicalGraph& g, int max_c, int limit) {
  auto found = distinguishing_search(g, max_c, limit);
  if (!found) throw Error("distinguishing_number: no labeling within max_c colors");
  return found->first;
}

BoundReport check_mycielski_distinguishing_bound(const ClassicalGraph& g, int max_c,
                                                 int limit) {
  g.validate();
  if (!classical_twins(g).empty())
    throw Error("check_mycielski_distinguishing_bound: graph has twins");
  auto base = distinguishing_search(g, max_c, limit);
  if (!base) throw Error("check_mycielski_distinguishing_bound: D(G) exceeds max_c");
  BoundReport rep;
  rep.d_g = base->first;

  ClassicalGraph mu = classical_mycielskian(g, 2);
  ClassicalLabeling induced;
  induced.labels.resize(mu.n);
  induced.labels[0] = rep.d_g + 1;
  for (int v = 0; v < g.n; ++v) {
    induced.labels[1 + v] = base->second[v];
    induced.labels[1 + g.n + v] = base->second[v];
  }
  rep.induced_is_distinguishing = is_distinguishing(mu, induced, mu.n);

  auto lifted = distinguishing_search(mu, rep.d_g + 1, mu.n);
  rep.d_mu = lifted ? lifted->first : 0;
  rep.bound_holds = rep.induced_is_distinguishing && lifted && rep.d_mu <= rep.d_g + 1;
  return rep;
}

std::string to_string(DistinguishingVerdict v) {
  switch (v) {
    case DistinguishingVerdict::Distinguishing:
      return "Distinguishing";
    case DistinguishingVerdict::NotDistinguishing:
      return "NotDistinguishing";
    case DistinguishingVerdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

DistinguishingVerdict quantum_distinguishing_verdict(const ClassicalGraph& g,
                                                     const ClassicalLabeling& lab, int limit) {
  g.validate();
  // Necessary direction: a preserved non-identity classical automorphism
  // already defeats the labeling.
  Permutation id = identity_permutation(g.n);
  for (const Permutation& sigma : automorphism_group(g, limit)) {
    if (sigma == id) continue;
    if (labeling_preserved_by(lab, sigma)) return DistinguishingVerdict::NotDistinguishing;
  }

  // Sufficient direction: zero out label-crossing entries of the Fulton
  // pattern and see whether commutation forces the identity pattern.
  GeneratingPattern pat = fulton_pattern(g);
  std::vector<int> same_label_syms;
  for (size_t c = 0; c < pat.classes.size(); ++c) {
    const auto& cls = pat.classes[c];
    if (cls.size() >= 3) {
      // identity is forced only if every label subclass is a singleton
      for (size_t a = 0; a < cls.size(); ++a)
        for (size_t b = a + 1; b < cls.size(); ++b)
          if (lab.labels[cls[a]] == lab.labels[cls[b]]) return DistinguishingVerdict::Unknown;
    } else if (cls.size() == 2 && lab.labels[cls[0]] == lab.labels[cls[1]]) {
      same_label_syms.push_back(pat.sym_of_class[c]);
    }
  }
  if (same_label_syms.empty()) return DistinguishingVerdict::Distinguishing;

  const int s = pat.num_symbols;
  const int width = 1 + 2 * s;
  // Entries in size >= 3 classes are label-separated here (all subclasses are
  // singletons), so they are already forced to the identity pattern.
  auto entry_vec = [&](int i, int j) {
    if (pat.entries[i][j].kind == PatternEntry::Kind::Free) {
      std::vector<Rational> v(width);
      if (i == j) v[0] = Rational(1);
      return v;
    }
    return detail::pattern_entry_vector(pat, i, j, false, s);
  };
  detail::RationalRowSpace space(width);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      std::vector<Rational> row(width);
      for (int k = 0; k < g.n; ++k) {
        if (g.adj[k][j]) {
          auto v = entry_vec(i, k);
          for (int c = 0; c < width; ++c) row[c] += v[c];
        }
        if (g.adj[i][k]) {
          auto v = entry_vec(k, j);
          for (int c = 0; c < width; ++c) row[c] -= v[c];
        }
      }
      space.add(std::move(row));
    }
  // label preservation kills the off-diagonal of every cross-label pair
  for (size_t c = 0; c < pat.classes.size(); ++c) {
    const auto& cls = pat.classes[c];
    if (cls.size() == 2 && lab.labels[cls[0]] != lab.labels[cls[1]]) {
      std::vector<Rational> row(width);
      row[0] = Rational(-1);
      row[1 + pat.sym_of_class[c]] = Rational(1);  // p_c - 1 = 0
      space.add(std::move(row));
    }
  }
  for (int sym : same_label_syms) {
    std::vector<Rational> target(width);
    target[0] = Rational(-1);
    target[1 + sym] = Rational(1);
    if (!space.contains(target)) return DistinguishingVerdict::Unknown;
  }
  return DistinguishingVerdict::Distinguishing;
}

}  // namespace qmyc
