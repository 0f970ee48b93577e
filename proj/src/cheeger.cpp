#include "tcg/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "tcg/error.hpp"

namespace tcg {

namespace {

using Mask = std::uint64_t;

struct Scanner {
  int n;
  int d;
  std::vector<Mask> neighbors;                // union of theta_i(v)
  std::vector<std::vector<Mask>> layers;      // layers[v][m] = {w : A[v][w] > m}
  std::vector<int> loops;                     // A[v][v]

  // best (numerator, size) so far for each constant
  std::int64_t vb_num = 0, vb_den = 0;
  std::int64_t eb_num = 0, eb_den = 0;
  Mask v_witness = 0, e_witness = 0;
  std::uint64_t scanned = 0;

  void visit(int start, Mask set, Mask nbrs, std::int64_t inner, int size) {
    for (int u = start; u < n; ++u) {
      const Mask bit = Mask{1} << u;
      std::int64_t internal = 0;
      for (Mask layer : layers[u]) internal += std::popcount(layer & set);
      const std::int64_t inner2 = inner + loops[u] + 2 * internal;
      const Mask set2 = set | bit;
      const Mask nbrs2 = nbrs | neighbors[u];
      const int size2 = size + 1;
      ++scanned;

      const std::int64_t vb = std::popcount(nbrs2 & ~set2);
      if (vb_den == 0 || vb * vb_den < vb_num * size2) {
        vb_num = vb;
        vb_den = size2;
        v_witness = set2;
      }
      const std::int64_t eb = static_cast<std::int64_t>(d) * size2 - inner2;
      // eb / (d size2) < eb_num / (d eb_den)
      if (eb_den == 0 || eb * eb_den < eb_num * size2) {
        eb_num = eb;
        eb_den = size2;
        e_witness = set2;
      }
      if (2 * (size2 + 1) <= n) visit(u + 1, set2, nbrs2, inner2, size2);
    }
  }
};

}  // namespace

CheegerReport cheeger_constants(const RegularMultigraph& g, int cap) {
  const int n = g.n();
  if (n > cap || n > 63)
    throw Error(ErrorKind::size_cap, "Cheeger enumeration limited to n <= " +
                                         std::to_string(std::min(cap, 63)) +
                                         ", got " + std::to_string(n));
  if (!is_undirected(g))
    throw Error(ErrorKind::precondition, "Cheeger constants need an undirected graph");

  CheegerReport report{Rational(0), Rational(0), VertexSet(n), VertexSet(n), 0};
  if (n < 2) return report;

  Scanner s{n, g.d(), std::vector<Mask>(n, 0), std::vector<std::vector<Mask>>(n),
            std::vector<int>(n, 0)};
  for (int v = 0; v < n; ++v) {
    for (const auto& t : g.theta()) s.neighbors[v] |= Mask{1} << t[v];
    s.loops[v] = g.count(v, v);
    int max_mult = 0;
    for (int w = 0; w < n; ++w)
      if (w != v) max_mult = std::max(max_mult, g.count(v, w));
    for (int m = 0; m < max_mult; ++m) {
      Mask layer = 0;
      for (int w = 0; w < n; ++w)
        if (w != v && g.count(v, w) > m) layer |= Mask{1} << w;
      s.layers[v].push_back(layer);
    }
  }
  s.visit(0, 0, 0, 0, 0);

  report.h = Rational(s.vb_num, s.vb_den);
  report.edge_h = Rational(s.eb_num, static_cast<std::int64_t>(g.d()) * s.eb_den);
  report.h_witness = VertexSet::from_mask(n, s.v_witness);
  report.edge_witness = VertexSet::from_mask(n, s.e_witness);
  report.subsets_scanned = s.scanned;
  return report;
}

CheegerInterval spectral_cheeger_interval(double lambda2) {
  if (!(lambda2 >= 0.0 && lambda2 <= 2.0))
    throw Error(ErrorKind::precondition,
                "lambda2 must lie in [0, 2], got " + std::to_string(lambda2));
  return {lambda2 / 2.0, std::sqrt(2.0 * lambda2)};
}

}  // namespace tcg
