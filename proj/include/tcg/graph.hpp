#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcg/group.hpp"

namespace tcg {

enum class GraphKind {
  cayley,
  cayley_sum,
  twisted_cayley,
  twisted_cayley_sum,
  schreier,
  power,
  raw,
};

const char* to_string(GraphKind kind);
GraphKind graph_kind_from_string(std::string_view s);

struct SigmaInfo {
  std::vector<Element> perm;
  MapKind kind = MapKind::automorphism;
  int order = 1;
  friend bool operator==(const SigmaInfo&, const SigmaInfo&) = default;
};

/// Where a graph came from. Fields not applicable to a family stay empty.
struct Provenance {
  std::string group;
  std::vector<Element> generators;
  std::optional<SigmaInfo> sigma;
  std::optional<std::vector<Element>> subgroup;
  std::optional<int> power;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Degree-regular multigraph given by d vertex bijections: the i-th neighbour
/// of v is theta[i][v]. A loop theta[i][v] == v adds one to the degree and one
/// to the adjacency count A[v][v].
class RegularMultigraph {
 public:
  /// Throws Error(validation) unless every map is a bijection on 0..n-1.
  RegularMultigraph(int n, std::vector<std::vector<int>> theta, GraphKind kind,
                    Provenance provenance = {});

  int n() const noexcept { return n_; }
  int d() const noexcept { return static_cast<int>(theta_.size()); }
  GraphKind kind() const noexcept { return kind_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  const std::vector<std::vector<int>>& theta() const noexcept { return theta_; }
  int neighbor(int i, int v) const noexcept { return theta_[i][v]; }

  /// Adjacency counts, row-major n x n.
  std::span<const int> adjacency() const noexcept { return adjacency_; }
  int count(int v, int w) const noexcept { return adjacency_[v * n_ + w]; }

  friend bool operator==(const RegularMultigraph& a,
                         const RegularMultigraph& b) {
    return a.n_ == b.n_ && a.theta_ == b.theta_ && a.kind_ == b.kind_ &&
           a.provenance_ == b.provenance_;
  }

 private:
  int n_;
  std::vector<std::vector<int>> theta_;
  GraphKind kind_;
  Provenance provenance_;
  std::vector<int> adjacency_;
};

/// Subset of 0..n-1.
class VertexSet {
 public:
  explicit VertexSet(int n = 0) : n_(n), words_((n + 63) / 64, 0) {}
  VertexSet(int n, std::initializer_list<int> members);
  static VertexSet from_mask(int n, std::uint64_t mask);
  static VertexSet all(int n);

  int universe() const noexcept { return n_; }
  bool contains(int v) const noexcept {
    return (words_[v / 64] >> (v % 64)) & 1U;
  }
  void insert(int v) noexcept { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void erase(int v) noexcept { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  int size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::vector<int> members() const;
  /// Low 64 vertices as a mask.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

// ---------------------------------------------------------------------------
// Builders. Generator i is the i-th smallest member of S.

RegularMultigraph build_cayley(const FiniteGroup& g, const ElementSet& s);
RegularMultigraph build_cayley_sum(const FiniteGroup& g, const ElementSet& s);
RegularMultigraph build_twisted_cayley(const FiniteGroup& g, const ElementSet& s,
                                       const GroupMap& sigma);
RegularMultigraph build_twisted_cayley_sum(const FiniteGroup& g,
                                           const ElementSet& s,
                                           const GroupMap& sigma);
/// Vertices are right cosets Hg numbered as in right_cosets. S must satisfy
/// S = S^-1 (Error(symmetry_violation) otherwise).
RegularMultigraph build_schreier(const FiniteGroup& g, const Subgroup& h,
                                 const ElementSet& s);

inline constexpr long long kDefaultDegreeCap = 4096;

/// Degree d^k graph with one map per k-tuple (i_1..i_k), lexicographic in
/// the tuple, equal to theta[i_1] o ... o theta[i_k].
RegularMultigraph graph_power(const RegularMultigraph& g, int k,
                              long long degree_cap = kDefaultDegreeCap);

// ---------------------------------------------------------------------------
// Queries

bool is_undirected(const RegularMultigraph& g);

/// Evaluates the closed-form undirectedness condition for the four families
/// that have one:
///   cayley:               S = S^-1
///   cayley_sum:           S closed under conjugation
///   twisted_cayley_sum:   sigma^2(g) sigma(s) g^-1 in S   (sigma automorphism)
///   twisted_cayley:       sigma^2(g) sigma(s^-1) g^-1 in S (sigma anti-automorphism)
/// Any other combination throws Error(no_criterion).
bool undirected_criterion(GraphKind kind, const FiniteGroup& g,
                          const ElementSet& s,
                          const GroupMap* sigma = nullptr);

bool is_connected(const RegularMultigraph& g);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> coloring;  // 0/1 per vertex when bipartite
  std::vector<int> odd_walk;  // closed walk v0 v1 ... v0 of odd length otherwise
};

/// Throws Error(precondition) for a directed graph.
BipartiteResult check_bipartite(const RegularMultigraph& g);
inline bool is_bipartite(const RegularMultigraph& g) {
  return check_bipartite(g).bipartite;
}

VertexSet neighborhood(const RegularMultigraph& g, const VertexSet& v1);
VertexSet boundary(const RegularMultigraph& g, const VertexSet& v1);

inline constexpr int kDefaultIsomorphismCap = 10;

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<int> witness;  // vertex map g1 -> g2
};

/// Multiplicity-aware isomorphism of undirected multigraphs by backtracking
/// with loop-count, row-profile and spectrum pruning.
IsomorphismResult are_isomorphic(const RegularMultigraph& g1,
                                 const RegularMultigraph& g2,
                                 int size_cap = kDefaultIsomorphismCap);

/// True when `map` carries the adjacency counts of a onto those of b exactly.
bool is_isomorphism(const RegularMultigraph& a, const RegularMultigraph& b,
                    std::span<const int> map);

std::string to_dot(const RegularMultigraph& g);

}  // namespace tcg
