#include "qmyc/quantum_graph.hpp"

namespace qmyc {

void ClassicalGraph::validate() const {
  if (n < 1 || static_cast<int>(adj.size()) != n)
    throw Error("classical graph: bad vertex count");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(adj[i].size()) != n) throw Error("classical graph: ragged adjacency");
    if (adj[i][i] != 0) throw Error("classical graph: nonzero diagonal");
    for (int j = 0; j < n; ++j) {
      if (adj[i][j] != 0 && adj[i][j] != 1)
        throw Error("classical graph: adjacency entries must be 0 or 1");
      if (adj[i][j] != adj[j][i]) throw Error("classical graph: adjacency is not symmetric");
    }
  }
}

int ClassicalGraph::degree(int v) const {
  int d = 0;
  for (int j = 0; j < n; ++j) d += adj[v][j];
  return d;
}

int ClassicalGraph::edge_count() const {
  int e = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e += adj[i][j];
  return e;
}

bool ClassicalGraph::connected() const {
  std::vector<int> seen(n, 0), stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j)
      if (adj[v][j] && !seen[j]) {
        seen[j] = 1;
        stack.push_back(j);
      }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) return false;
  return true;
}

}  // namespace qmyc
