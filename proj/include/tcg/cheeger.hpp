#pragma once

#include <cstdint>

#include "tcg/graph.hpp"
#include "tcg/rational.hpp"

namespace tcg {

inline constexpr int kDefaultCheegerCap = 24;

/// Exact vertex and edge Cheeger constants of an undirected regular
/// multigraph, minimised over all nonempty V1 with 2|V1| <= n.
///
/// Witnesses are the lexicographically least minimisers, comparing the sorted
/// member lists. A single-vertex graph has no admissible V1; both constants
/// are reported as 0 with empty witnesses.
struct CheegerReport {
  Rational h;       // min |boundary(V1)| / |V1|
  Rational edge_h;  // min (crossing half-edges) / (d |V1|)
  VertexSet h_witness;
  VertexSet edge_witness;
  std::uint64_t subsets_scanned = 0;
};

/// Throws Error(precondition) for directed input and Error(size_cap) when
/// n exceeds `cap` (or 63).
CheegerReport cheeger_constants(const RegularMultigraph& g,
                                int cap = kDefaultCheegerCap);

inline Rational vertex_cheeger(const RegularMultigraph& g,
                               int cap = kDefaultCheegerCap) {
  return cheeger_constants(g, cap).h;
}
inline Rational edge_cheeger(const RegularMultigraph& g,
                             int cap = kDefaultCheegerCap) {
  return cheeger_constants(g, cap).edge_h;
}

struct CheegerInterval {
  double lower = 0;
  double upper = 0;
  bool contains(double x, double tol = 0) const {
    return x >= lower - tol && x <= upper + tol;
  }
};

/// [lambda2 / 2, sqrt(2 lambda2)]: where the edge constant must lie given the
/// Laplacian gap. Throws Error(precondition) outside 0 <= lambda2 <= 2.
CheegerInterval spectral_cheeger_interval(double lambda2);

}  // namespace tcg
