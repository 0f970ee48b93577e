#include "tcg/counterexample.hpp"

#include <algorithm>
#include <map>

#include "tcg/error.hpp"

namespace tcg {

namespace {

struct Candidate {
  GraphKind family;
  const FiniteGroup* group;
  std::vector<Element> generators;
  std::optional<std::vector<Element>> sigma;
  RegularMultigraph graph;
};

std::vector<Candidate> build_candidates(const FiniteGroup& g, GraphKind family,
                                        std::uint64_t& built) {
  std::vector<Candidate> out;
  const int n = g.order();
  std::vector<GroupMap> sigmas;
  if (family == GraphKind::twisted_cayley || family == GraphKind::twisted_cayley_sum)
    sigmas = enumerate_automorphisms(g);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const ElementSet s = ElementSet::from_mask(mask);
    auto keep = [&](RegularMultigraph graph, std::optional<std::vector<Element>> sigma) {
      ++built;
      if (!is_undirected(graph)) return;
      out.push_back({family, &g, {s.members().begin(), s.members().end()},
                     std::move(sigma), std::move(graph)});
    };
    switch (family) {
      case GraphKind::cayley: keep(build_cayley(g, s), std::nullopt); break;
      case GraphKind::cayley_sum: keep(build_cayley_sum(g, s), std::nullopt); break;
      case GraphKind::twisted_cayley:
        for (const GroupMap& m : sigmas)
          keep(build_twisted_cayley(g, s, m),
               std::vector<Element>(m.perm().begin(), m.perm().end()));
        break;
      case GraphKind::twisted_cayley_sum:
        for (const GroupMap& m : sigmas)
          keep(build_twisted_cayley_sum(g, s, m),
               std::vector<Element>(m.perm().begin(), m.perm().end()));
        break;
      default: break;
    }
  }
  return out;
}

void compare(ScanTarget& target, const RegularMultigraph& graph,
             const std::vector<const std::vector<Candidate>*>& pools) {
  for (const auto* pool : pools)
    for (const Candidate& c : *pool) {
      if (c.graph.d() != graph.d() || c.graph.n() != graph.n()) continue;
      if (std::find(target.excluded_families.begin(), target.excluded_families.end(),
                    c.family) == target.excluded_families.end())
        continue;
      ++target.candidates_compared;
      IsomorphismResult iso = are_isomorphic(graph, c.graph, graph.n());
      if (iso.isomorphic)
        target.matches.push_back({c.family, c.group->label(), c.generators, c.sigma,
                                  std::move(iso.witness)});
    }
}

ScanTarget describe(std::string name, GraphKind family, const FiniteGroup& g,
                    const ElementSet& s, const GroupMap& sigma,
                    const RegularMultigraph& graph,
                    std::vector<GraphKind> excluded) {
  ScanTarget t;
  t.name = std::move(name);
  t.family = family;
  t.group = g.label();
  t.generators.assign(s.members().begin(), s.members().end());
  t.sigma.assign(sigma.perm().begin(), sigma.perm().end());
  t.n = graph.n();
  t.d = graph.d();
  t.undirected = is_undirected(graph);
  t.connected = is_connected(graph);
  t.excluded_families = std::move(excluded);
  return t;
}

}  // namespace

ScanReport counterexample_scan(int p) {
  if (p != 3 && p != 5)
    throw Error(ErrorKind::size_cap,
                "counterexample scan supports p = 3 or 5, got " + std::to_string(p));
  ScanReport report;
  report.p = p;
  const FiniteGroup cyclic = make_cyclic(2 * p);
  const FiniteGroup dihedral = make_dihedral(p);
  report.groups = {cyclic.label(), dihedral.label()};
  report.ambiguity_note =
      "Matches are isomorphisms of abstract multigraphs: adjacency counts are "
      "preserved, vertex labels, edge colours and group structure are not. "
      "The exclusion claim may intend a finer notion of isomorphism, so a "
      "match is evidence to review rather than a refutation.";

  std::map<std::pair<int, GraphKind>, std::vector<Candidate>> pools;
  auto pool = [&](const FiniteGroup& g, int gid, GraphKind family)
      -> const std::vector<Candidate>* {
    auto key = std::make_pair(gid, family);
    auto it = pools.find(key);
    if (it == pools.end())
      it = pools.emplace(key, build_candidates(g, family, report.candidates_built)).first;
    return &it->second;
  };
  auto pools_for = [&](const std::vector<GraphKind>& families) {
    std::vector<const std::vector<Candidate>*> out;
    for (GraphKind f : families) {
      out.push_back(pool(cyclic, 0, f));
      out.push_back(pool(dihedral, 1, f));
    }
    return out;
  };

  // Dihedral targets: an order-2 automorphism inverting every rotation and
  // fixing the reflection used as the single generator.
  const std::vector<GraphKind> dihedral_excluded = {
      GraphKind::cayley, GraphKind::cayley_sum, GraphKind::twisted_cayley_sum};
  for (const GroupMap& sigma : enumerate_automorphisms(dihedral)) {
    if (sigma.order() != 2) continue;
    bool inverts = true;
    for (Element k = 0; k < p; ++k)
      inverts = inverts && sigma(k) == dihedral.inv(k);
    if (!inverts) continue;
    for (Element s = p; s < 2 * p; ++s) {
      if (sigma(s) != s) continue;
      const ElementSet gens({s});
      const RegularMultigraph graph = build_twisted_cayley(dihedral, gens, sigma);
      ScanTarget t = describe("C(" + dihedral.label() + ",{r^" + std::to_string(s - p) +
                                  "s})^sigma",
                              GraphKind::twisted_cayley, dihedral, gens, sigma, graph,
                              dihedral_excluded);
      compare(t, graph, pools_for(dihedral_excluded));
      report.targets.push_back(std::move(t));
    }
  }

  // Cyclic targets: every involutive automorphism tau and every symmetric S
  // containing 0 with |S| <= p - 1.
  const std::vector<GraphKind> cyclic_excluded = {
      GraphKind::cayley, GraphKind::cayley_sum, GraphKind::twisted_cayley};
  const int n = 2 * p;
  for (const GroupMap& tau : enumerate_automorphisms(cyclic)) {
    if (tau.order() != 2) continue;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
      const ElementSet s = ElementSet::from_mask(mask);
      if (static_cast<int>(s.size()) > p - 1) continue;
      bool symmetric = true;
      for (Element x : s.members()) symmetric = symmetric && s.contains(cyclic.inv(x));
      if (!symmetric) continue;
      const RegularMultigraph graph = build_twisted_cayley_sum(cyclic, s, tau);
      std::string gens;
      for (Element x : s.members()) gens += (gens.empty() ? "" : ",") + std::to_string(x);
      ScanTarget t = describe("C_sum(" + cyclic.label() + ",{" + gens + "})^tau",
                              GraphKind::twisted_cayley_sum, cyclic, s, tau, graph,
                              cyclic_excluded);
      compare(t, graph, pools_for(cyclic_excluded));
      report.targets.push_back(std::move(t));
    }
  }
  return report;
}

}  // namespace tcg
