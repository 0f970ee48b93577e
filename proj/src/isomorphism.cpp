#include <algorithm>
#include <cmath>

#include "tcg/error.hpp"
#include "tcg/graph.hpp"
#include "tcg/spectra.hpp"

namespace tcg {

bool is_isomorphism(const RegularMultigraph& a, const RegularMultigraph& b,
                    std::span<const int> map) {
  const int n = a.n();
  if (b.n() != n || static_cast<int>(map.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int x : map) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (a.count(v, w) != b.count(map[v], map[w])) return false;
  return true;
}

namespace {

// Loop count followed by the sorted off-diagonal row.
std::vector<int> vertex_profile(const RegularMultigraph& g, int v) {
  std::vector<int> row;
  for (int w = 0; w < g.n(); ++w)
    if (w != v) row.push_back(g.count(v, w));
  std::sort(row.begin(), row.end());
  row.insert(row.begin(), g.count(v, v));
  return row;
}

}  // namespace

IsomorphismResult are_isomorphic(const RegularMultigraph& g1,
                                 const RegularMultigraph& g2, int size_cap) {
  if (g1.n() > size_cap || g2.n() > size_cap)
    throw Error(ErrorKind::size_cap,
                "isomorphism test limited to n <= " + std::to_string(size_cap));
  if (!is_undirected(g1) || !is_undirected(g2))
    throw Error(ErrorKind::precondition, "isomorphism test needs undirected graphs");
  if (g1.n() != g2.n() || g1.d() != g2.d()) return {};
  const int n = g1.n();

  std::vector<std::vector<int>> p1(n), p2(n);
  for (int v = 0; v < n; ++v) {
    p1[v] = vertex_profile(g1, v);
    p2[v] = vertex_profile(g2, v);
  }
  {
    auto s1 = p1, s2 = p2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return {};
  }
  {
    const auto e1 = sym_eigenvalues(normalized_adjacency(g1));
    const auto e2 = sym_eigenvalues(normalized_adjacency(g2));
    for (int i = 0; i < n; ++i)
      if (std::abs(e1[i] - e2[i]) > 1e-8) return {};
  }

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || p1[v] != p2[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = g1.count(v, u) == g2.count(w, map[u]);
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
      map[v] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return {};
  return IsomorphismResult{true, std::move(map)};
}

}  // namespace tcg
