#include "qmyc/mycielski.hpp"

namespace qmyc {

ClassicalGraph classical_mycielskian(const ClassicalGraph& g, int r) {
  g.validate();
  if (r < 1) throw Error("classical_mycielskian: r must be >= 1");
  if (r == 1) return g;
  const int n = g.n;
  ClassicalGraph out;
  out.n = 1 + r * n;
  out.adj.assign(out.n, std::vector<int>(out.n, 0));
  auto off = [n](int k) { return 1 + (k - 1) * n; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!g.adj[i][j]) continue;
      out.adj[off(1) + i][off(1) + j] = 1;
      for (int k = 1; k < r; ++k) {
        out.adj[off(k) + i][off(k + 1) + j] = 1;
        out.adj[off(k + 1) + j][off(k) + i] = 1;
      }
    }
  for (int i = 0; i < n; ++i) {
    out.adj[0][off(r) + i] = 1;
    out.adj[off(r) + i][0] = 1;
  }
  out.validate();
  return out;
}

}  // namespace qmyc
