#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcg/graph.hpp"

namespace tcg {

/// One graph from a family the construction is claimed to avoid, together
/// with an isomorphism onto the target.
struct ScanMatch {
  GraphKind family = GraphKind::cayley;
  std::string group;
  std::vector<Element> generators;
  std::optional<std::vector<Element>> sigma;
  std::vector<int> witness;  // target vertex -> match vertex
  friend bool operator==(const ScanMatch&, const ScanMatch&) = default;
};

struct ScanTarget {
  std::string name;
  GraphKind family = GraphKind::twisted_cayley;
  std::string group;
  std::vector<Element> generators;
  std::vector<Element> sigma;
  int n = 0;
  int d = 0;
  bool undirected = false;
  bool connected = false;
  std::vector<GraphKind> excluded_families;
  std::uint64_t candidates_compared = 0;
  std::vector<ScanMatch> matches;
  friend bool operator==(const ScanTarget&, const ScanTarget&) = default;
};

struct ScanReport {
  int schema_version = 1;
  int p = 0;
  std::vector<std::string> groups;  // the groups of order 2p searched
  std::vector<ScanTarget> targets;
  std::uint64_t candidates_built = 0;
  std::string ambiguity_note;
  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// Builds the dihedral and cyclic target graphs for odd prime p and compares
/// each against every undirected member of its excluded families over Z/2p
/// and D_2p. Throws Error(size_cap) unless p is 3 or 5.
ScanReport counterexample_scan(int p);

}  // namespace tcg
