#pragma once

#include <vector>

#include "tcg/graph.hpp"

namespace tcg {

struct CorpusOptions {
  int max_order = 8;
  bool twisted = true;
  bool schreier = true;
};

/// Undirected graphs built from every catalog group up to `max_order`:
/// Cayley and Cayley sum graphs for every S, twisted graphs for every S and
/// every automorphism or anti-automorphism, Schreier graphs over small-seed
/// subgroups and symmetric S. Duplicates (equal adjacency) are dropped; the
/// first construction wins.
std::vector<RegularMultigraph> graph_corpus(const CorpusOptions& options = {});

}  // namespace tcg
