#include <algorithm>
#include <deque>

#include "tcg/error.hpp"
#include "tcg/graph.hpp"

namespace tcg {

bool is_connected(const RegularMultigraph& g) {
  // theta maps are bijections, so in-degree equals out-degree everywhere and
  // forward reachability from one vertex decides connectivity.
  const int n = g.n();
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& t : g.theta()) {
      const int w = t[v];
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == n;
}

BipartiteResult check_bipartite(const RegularMultigraph& g) {
  if (!is_undirected(g))
    throw Error(ErrorKind::precondition, "bipartiteness needs an undirected graph");
  const int n = g.n();
  std::vector<int> color(n, -1);
  std::vector<int> parent(n, -1);

  auto path_to_root = [&](int v) {
    std::vector<int> path;
    for (; v >= 0; v = parent[v]) path.push_back(v);
    return path;  // v ... root
  };

  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& t : g.theta()) {
        const int w = t[u];
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          parent[w] = u;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // root .. u, w .. root has odd length
          std::vector<int> up = path_to_root(u);
          std::reverse(up.begin(), up.end());
          std::vector<int> down = path_to_root(w);
          BipartiteResult r;
          r.odd_walk = std::move(up);
          r.odd_walk.insert(r.odd_walk.end(), down.begin(), down.end());
          return r;
        }
      }
    }
  }
  return BipartiteResult{true, std::move(color), {}};
}

VertexSet neighborhood(const RegularMultigraph& g, const VertexSet& v1) {
  VertexSet out(g.n());
  for (int v : v1.members())
    for (const auto& t : g.theta()) out.insert(t[v]);
  return out;
}

VertexSet boundary(const RegularMultigraph& g, const VertexSet& v1) {
  VertexSet out = neighborhood(g, v1);
  for (int v : v1.members()) out.erase(v);
  return out;
}

}  // namespace tcg
