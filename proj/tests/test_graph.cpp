#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sample_graphs.hpp"
#include "tcg/error.hpp"
#include "tcg/graph.hpp"
#include "tcg/io.hpp"

using namespace tcg;

namespace {

std::vector<std::pair<int, int>> edges(const RegularMultigraph& g) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < g.n(); ++v)
    for (int w = v; w < g.n(); ++w)
      for (int m = 0; m < g.count(v, w); ++m) out.emplace_back(v, w);
  return out;
}

bool all_bijections(const RegularMultigraph& g) {
  for (const auto& map : g.theta()) {
    std::vector<int> hit(g.n(), 0);
    for (int w : map) ++hit[w];
    for (int c : hit)
      if (c != 1) return false;
  }
  return true;
}

ElementSet from_mask(std::uint64_t mask) { return ElementSet::from_mask(mask); }

GroupMap fix_s_invert_r(const FiniteGroup& d6) {
  return require_map(d6, std::vector<Element>{0, 2, 1, 3, 5, 4});
}

// Every (kind, sigma) pairing that has a closed-form criterion.
template <typename F>
void for_each_criterion_case(const FiniteGroup& g, F&& f) {
  f(GraphKind::cayley, nullptr);
  f(GraphKind::cayley_sum, nullptr);
  for (const GroupMap& a : enumerate_automorphisms(g)) f(GraphKind::twisted_cayley_sum, &a);
  for (const GroupMap& a : enumerate_anti_automorphisms(g)) f(GraphKind::twisted_cayley, &a);
}

RegularMultigraph build(GraphKind kind, const FiniteGroup& g, const ElementSet& s,
                        const GroupMap* sigma) {
  switch (kind) {
    case GraphKind::cayley: return build_cayley(g, s);
    case GraphKind::cayley_sum: return build_cayley_sum(g, s);
    case GraphKind::twisted_cayley: return build_twisted_cayley(g, s, *sigma);
    default: return build_twisted_cayley_sum(g, s, *sigma);
  }
}

}  // namespace

TEST_CASE("Cayley builders") {
  const auto c6 = sample::cycle(6);
  CHECK(c6.d() == 2);
  CHECK(edges(c6) == std::vector<std::pair<int, int>>{{0, 1}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});

  const auto k4 = sample::complete(4);
  for (int v = 0; v < 4; ++v)
    for (int w = 0; w < 4; ++w) CHECK(k4.count(v, w) == (v == w ? 0 : 1));

  const auto m = build_cayley(make_cyclic(6), ElementSet({3}));
  CHECK(edges(m) == std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}});

  CHECK_THROWS_AS(build_cayley(make_cyclic(6), ElementSet()), Error);
  try {
    build_cayley(make_cyclic(6), ElementSet());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::empty_generating_set);
  }

  const auto sum = build_cayley_sum(make_cyclic(5), ElementSet({0}));
  CHECK(sum.theta()[0] == std::vector<int>{0, 4, 3, 2, 1});
  CHECK(sum.count(0, 0) == 1);
  CHECK(is_undirected(sum));

  const auto full = build_cayley_sum(make_cyclic(4), ElementSet({0, 1, 2, 3}));
  for (int v = 0; v < 4; ++v) {
    int row = 0;
    for (int w = 0; w < 4; ++w) row += full.count(v, w);
    CHECK(row == 4);
  }
  CHECK(is_undirected(build_cayley_sum(make_dihedral(3), ElementSet({0, 1, 2, 3, 4, 5}))));
}

TEST_CASE("twisted builders") {
  const FiniteGroup d6 = make_dihedral(3);
  const auto g = build_twisted_cayley(d6, ElementSet({3}), fix_s_invert_r(d6));
  CHECK(g.d() == 1);
  CHECK(edges(g) == std::vector<std::pair<int, int>>{{0, 3}, {1, 5}, {2, 4}});
  CHECK(is_undirected(g));
  CHECK_FALSE(is_connected(g));
  REQUIRE(g.provenance().sigma.has_value());
  CHECK(g.provenance().sigma->order == 2);

  const FiniteGroup z5 = make_cyclic(5);
  const auto t = build_twisted_cayley(z5, ElementSet({1, 4}), inversion_map(z5));
  for (int x = 0; x < 5; ++x) {
    CHECK(t.theta()[0][x] == ((-x - 1) % 5 + 10) % 5);
    CHECK(t.theta()[1][x] == ((-x - 4) % 5 + 10) % 5);
  }
  CHECK(is_undirected(t));

  const FiniteGroup z6 = make_cyclic(6);
  CHECK(is_undirected(build_twisted_cayley_sum(z6, ElementSet({1, 5}), inversion_map(z6))));
  const GroupMap neg6 = inversion_map(z6);
  CHECK(undirected_criterion(GraphKind::twisted_cayley_sum, z6, ElementSet({1, 5}), &neg6));
  CHECK_FALSE(undirected_criterion(GraphKind::twisted_cayley_sum, z6, ElementSet({1}), &neg6));

  // sigma from another group
  CHECK_THROWS_AS(build_twisted_cayley(z5, ElementSet({1}), inversion_map(z6)), Error);
}

TEST_CASE("identity twist collapses to the untwisted builders") {
  for (const FiniteGroup& g : group_catalog(8)) {
    const GroupMap id = identity_map(g);
    const int n = g.order();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 7) {
      const ElementSet s = from_mask(mask);
      CHECK(build_twisted_cayley(g, s, id).theta() == build_cayley(g, s).theta());
      CHECK(build_twisted_cayley_sum(g, s, id).theta() == build_cayley_sum(g, s).theta());
    }
  }
}

TEST_CASE("builder outputs are bijective theta tables") {
  for (const FiniteGroup& g : group_catalog(6))
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
      const ElementSet s = from_mask(mask);
      CHECK(all_bijections(build_cayley(g, s)));
      CHECK(all_bijections(build_cayley_sum(g, s)));
      for (const GroupMap& a : enumerate_automorphisms(g)) {
        CHECK(all_bijections(build_twisted_cayley(g, s, a)));
        CHECK(all_bijections(build_twisted_cayley_sum(g, s, a)));
      }
    }
  CHECK_THROWS_AS(RegularMultigraph(3, {{0, 0, 1}}, GraphKind::raw), Error);
}

TEST_CASE("Schreier graphs") {
  const FiniteGroup d6 = make_dihedral(3);
  const Subgroup trivial = subgroup_closure(d6, ElementSet());
  for (std::uint64_t mask = 1; mask < 64; ++mask) {
    const ElementSet s = from_mask(mask);
    bool symmetric = true;
    for (Element x : s.members()) symmetric = symmetric && s.contains(d6.inv(x));
    if (!symmetric) {
      CHECK_THROWS_AS(build_schreier(d6, trivial, s), Error);
      continue;
    }
    CHECK(build_schreier(d6, trivial, s).theta() == build_cayley(d6, s).theta());
  }
  try {
    build_schreier(d6, trivial, ElementSet({1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::symmetry_violation);
  }

  const Subgroup whole = subgroup_closure(d6, ElementSet({1, 3}));
  const auto point = build_schreier(d6, whole, ElementSet({1, 2, 3}));
  CHECK(point.n() == 1);
  CHECK(point.count(0, 0) == 3);

  const auto tri = build_schreier(d6, subgroup_closure(d6, ElementSet({3})), ElementSet({1, 2}));
  CHECK(tri.n() == 3);
  CHECK(tri.d() == 2);
  CHECK(is_undirected(tri));
  CHECK(is_connected(tri));
}

TEST_CASE("graph powers") {
  const auto c6 = sample::cycle(6);
  CHECK(graph_power(c6, 1).theta() == c6.theta());
  const auto sq = graph_power(c6, 2);
  CHECK(sq.d() == 4);
  for (int v = 0; v < 6; ++v) {
    CHECK(sq.count(v, v) == 2);
    CHECK(sq.count(v, (v + 2) % 6) == 1);
    CHECK(sq.count(v, (v + 4) % 6) == 1);
  }
  const auto k4 = graph_power(sample::complete(4), 3);
  for (int v = 0; v < 4; ++v)
    for (int w = 0; w < 4; ++w) CHECK(k4.count(v, w) == (v == w ? 6 : 7));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = oracle::random_undirected(rng, 3 + trial % 6, 1, trial % 2 == 0);
    for (int k = 1; k <= 3; ++k) {
      const auto p = graph_power(g, k);
      const auto expect = oracle::matrix_power(g, k);
      for (int i = 0; i < g.n() * g.n(); ++i) CHECK(p.adjacency()[i] == expect[i]);
    }
  }
  CHECK_THROWS_AS(graph_power(sample::complete(8), 5), Error);
  CHECK_THROWS_AS(graph_power(c6, 0), Error);
}

TEST_CASE("undirectedness, connectivity, bipartiteness") {
  CHECK(is_undirected(sample::cycle(6)));
  CHECK_FALSE(is_undirected(build_cayley(make_cyclic(5), ElementSet({1}))));

  const auto c6 = check_bipartite(sample::cycle(6));
  CHECK(c6.bipartite);
  for (int v = 0; v < 6; ++v) CHECK(c6.coloring[v] != c6.coloring[(v + 1) % 6]);
  CHECK(is_connected(sample::cycle(6)));

  const auto k4 = sample::complete(4);
  const auto odd = check_bipartite(k4);
  CHECK_FALSE(odd.bipartite);
  REQUIRE(odd.odd_walk.size() >= 2);
  CHECK(odd.odd_walk.front() == odd.odd_walk.back());
  CHECK((odd.odd_walk.size() - 1) % 2 == 1);
  for (std::size_t i = 0; i + 1 < odd.odd_walk.size(); ++i)
    CHECK(k4.count(odd.odd_walk[i], odd.odd_walk[i + 1]) > 0);

  CHECK_FALSE(is_connected(sample::matching({3, 4, 5, 0, 1, 2})));
  CHECK_THROWS_AS(check_bipartite(build_cayley(make_cyclic(5), ElementSet({1}))), Error);
  // a loop is an odd cycle
  CHECK_FALSE(is_bipartite(build_cayley_sum(make_cyclic(5), ElementSet({0}))));
}

TEST_CASE("criterion agrees with matrix symmetry on small groups") {
  std::size_t compared = 0;
  for (const FiniteGroup& g : group_catalog(6)) {
    const int n = g.order();
    for_each_criterion_case(g, [&](GraphKind kind, const GroupMap* sigma) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const ElementSet s = from_mask(mask);
        CHECK(undirected_criterion(kind, g, s, sigma) ==
              is_undirected(build(kind, g, s, sigma)));
        ++compared;
      }
    });
  }
  CHECK(compared > 1000);

  const FiniteGroup d6 = make_dihedral(3);
  const GroupMap a = fix_s_invert_r(d6);
  CHECK_THROWS_AS(undirected_criterion(GraphKind::twisted_cayley, d6, ElementSet({3}), &a),
                  Error);
  CHECK_THROWS_AS(undirected_criterion(GraphKind::schreier, d6, ElementSet({3})), Error);
  // specialisations
  const FiniteGroup z5 = make_cyclic(5);
  const GroupMap neg = inversion_map(z5);
  CHECK(undirected_criterion(GraphKind::twisted_cayley, z5, ElementSet({1, 4}), &neg));
  const GroupMap id = identity_map(d6);
  for (std::uint64_t mask = 1; mask < 64; ++mask)
    CHECK(undirected_criterion(GraphKind::twisted_cayley_sum, d6, from_mask(mask), &id) ==
          undirected_criterion(GraphKind::cayley_sum, d6, from_mask(mask)));
}

TEST_CASE("neighborhood and boundary") {
  const auto c6 = sample::cycle(6);
  CHECK(neighborhood(c6, VertexSet(6, {0})).members() == std::vector<int>{1, 5});
  CHECK(boundary(c6, VertexSet(6, {0})).members() == std::vector<int>{1, 5});
  CHECK(boundary(c6, VertexSet::all(6)).empty());
  CHECK(boundary(sample::complete(4), VertexSet(4, {0, 1})).members() ==
        std::vector<int>{2, 3});
  CHECK(neighborhood(c6, VertexSet(6, {0, 1})).members() == std::vector<int>{0, 1, 2, 5});
}

TEST_CASE("isomorphism") {
  const auto c6 = sample::cycle(6);
  const auto r = are_isomorphic(c6, build_cayley(make_cyclic(6), ElementSet({1, 5})));
  CHECK(r.isomorphic);
  CHECK(r.witness == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK_FALSE(are_isomorphic(c6, sample::two_triangles()).isomorphic);

  const auto m1 = sample::matching({3, 4, 5, 0, 1, 2});
  const auto m2 = sample::matching({1, 0, 3, 2, 5, 4});
  const auto iso = are_isomorphic(m1, m2);
  REQUIRE(iso.isomorphic);
  CHECK(is_isomorphism(m1, m2, iso.witness));

  CHECK_THROWS_AS(are_isomorphic(sample::cycle(11), sample::cycle(11)), Error);

  std::mt19937_64 rng(5);
  int agreed_true = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    const auto a = oracle::random_undirected(rng, n, 1, trial % 3 == 0);
    // half the pairs are relabelings of each other
    RegularMultigraph b = oracle::random_undirected(rng, n, 1, trial % 3 == 0);
    if (trial % 2 == 0) {
      std::vector<int> relabel(n);
      std::iota(relabel.begin(), relabel.end(), 0);
      std::shuffle(relabel.begin(), relabel.end(), rng);
      std::vector<std::vector<int>> theta;
      for (const auto& map : a.theta()) {
        std::vector<int> moved(n);
        for (int v = 0; v < n; ++v) moved[relabel[v]] = relabel[map[v]];
        theta.push_back(moved);
      }
      b = RegularMultigraph(n, theta, GraphKind::raw);
    }
    const auto found = are_isomorphic(a, b);
    CHECK(found.isomorphic == oracle::isomorphic(a, b));
    if (found.isomorphic) {
      ++agreed_true;
      CHECK(is_isomorphism(a, b, found.witness));
    }
  }
  CHECK(agreed_true >= 30);
}

TEST_CASE("graph JSON and DOT") {
  const FiniteGroup d6 = make_dihedral(3);
  const auto g = build_twisted_cayley(d6, ElementSet({3}), fix_s_invert_r(d6));
  CHECK(graph_from_json(parse_json(dump(to_json(g)))) == g);
  const auto sch = build_schreier(d6, subgroup_closure(d6, ElementSet({3})), ElementSet({1, 2}));
  CHECK(graph_from_json(to_json(sch)) == sch);
  const auto pw = graph_power(sample::cycle(6), 3);
  CHECK(graph_from_json(to_json(pw)) == pw);

  CHECK(to_dot(g) ==
        "graph G {\n  0;\n  1;\n  2;\n  3;\n  4;\n  5;\n"
        "  0 -- 3 [multiplicity=1];\n  1 -- 5 [multiplicity=1];\n  2 -- 4 [multiplicity=1];\n}\n");
  const std::string loops = to_dot(sample::loops(3));
  CHECK(loops.find("0 -- 0 [multiplicity=3]") != std::string::npos);
  CHECK_THROWS_AS(to_dot(build_cayley(make_cyclic(5), ElementSet({1}))), Error);
}
