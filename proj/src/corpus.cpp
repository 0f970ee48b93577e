#include "tcg/corpus.hpp"

#include <algorithm>
#include <set>

namespace tcg {

std::vector<RegularMultigraph> graph_corpus(const CorpusOptions& options) {
  std::vector<RegularMultigraph> out;
  std::set<std::vector<int>> seen;
  auto add = [&](RegularMultigraph g) {
    if (!is_undirected(g)) return;
    std::vector<int> key(g.adjacency().begin(), g.adjacency().end());
    key.push_back(g.n());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(g));
  };

  for (const FiniteGroup& g : group_catalog(options.max_order)) {
    const int n = g.order();
    std::vector<GroupMap> maps;
    if (options.twisted) {
      maps = enumerate_automorphisms(g);
      for (GroupMap& m : enumerate_anti_automorphisms(g))
        if (std::find(maps.begin(), maps.end(), m) == maps.end())
          maps.push_back(std::move(m));
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      const ElementSet s = ElementSet::from_mask(mask);
      add(build_cayley(g, s));
      add(build_cayley_sum(g, s));
      for (const GroupMap& m : maps) {
        add(build_twisted_cayley(g, s, m));
        add(build_twisted_cayley_sum(g, s, m));
      }
    }
    if (!options.schreier) continue;
    for (const Subgroup& h : small_seed_subgroups(g)) {
      if (h.index < 2) continue;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const ElementSet s = ElementSet::from_mask(mask);
        bool symmetric = true;
        for (Element x : s.members()) symmetric = symmetric && s.contains(g.inv(x));
        if (symmetric) add(build_schreier(g, h, s));
      }
    }
  }
  return out;
}

}  // namespace tcg
