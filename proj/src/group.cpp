#include "tcg/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "tcg/error.hpp"

namespace tcg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_order: return "invalid-order";
    case ErrorKind::parse: return "parse";
    case ErrorKind::validation: return "validation";
    case ErrorKind::corpus_cap: return "corpus-cap";
    case ErrorKind::invalid_map: return "invalid-map";
    case ErrorKind::empty_generating_set: return "empty-generating-set";
    case ErrorKind::symmetry_violation: return "symmetry-violation";
    case ErrorKind::degree_cap: return "degree-cap";
    case ErrorKind::size_cap: return "size-cap";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::solver_failure: return "solver-failure";
    case ErrorKind::no_criterion: return "no-criterion";
    case ErrorKind::usage: return "usage";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Validation

namespace {

std::string join(std::span<const Element> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

AxiomCheck skipped(std::string axiom) {
  return {std::move(axiom), false, {}, "not evaluated: table is malformed"};
}

}  // namespace

ValidationReport validate_group(const GroupTable& t) {
  ValidationReport report;
  const int n = t.order;

  AxiomCheck latin{"latin_square", true, {}, {}};
  if (n < 1 || t.products.size() != static_cast<std::size_t>(n) * n) {
    latin.passed = false;
    latin.detail = "table is not an n x n array with n >= 1";
  } else {
    for (Element x : t.products) {
      if (x < 0 || x >= n) {
        latin.passed = false;
        latin.detail = "entry " + std::to_string(x) + " out of range";
        break;
      }
    }
  }
  if (latin.passed) {
    std::vector<int> seen(n);
    for (int a = 0; a < n && latin.passed; ++a) {
      std::fill(seen.begin(), seen.end(), -1);
      for (int b = 0; b < n; ++b) {
        const Element v = t.at(a, b);
        if (seen[v] >= 0) {
          latin.passed = false;
          latin.witness = {a, seen[v], b};
          latin.detail = "row " + std::to_string(a) + " repeats " +
                         std::to_string(v) + " in columns " +
                         std::to_string(seen[v]) + " and " + std::to_string(b);
          break;
        }
        seen[v] = b;
      }
    }
    for (int b = 0; b < n && latin.passed; ++b) {
      std::fill(seen.begin(), seen.end(), -1);
      for (int a = 0; a < n; ++a) {
        const Element v = t.at(a, b);
        if (seen[v] >= 0) {
          latin.passed = false;
          latin.witness = {b, seen[v], a};
          latin.detail = "column " + std::to_string(b) + " repeats " +
                         std::to_string(v) + " in rows " +
                         std::to_string(seen[v]) + " and " + std::to_string(a);
          break;
        }
        seen[v] = a;
      }
    }
  }
  const bool shape_ok =
      n >= 1 && t.products.size() == static_cast<std::size_t>(n) * n &&
      std::all_of(t.products.begin(), t.products.end(),
                  [n](Element x) { return x >= 0 && x < n; });
  report.checks.push_back(latin);
  if (!shape_ok) {
    report.checks.push_back(skipped("identity"));
    report.checks.push_back(skipped("inverses"));
    report.checks.push_back(skipped("associativity"));
    return report;
  }

  AxiomCheck ident{"identity", false, {}, "no two-sided identity element"};
  Element e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = t.at(c, a) == a && t.at(a, c) == a;
    if (ok) e = c;
  }
  if (e >= 0) ident = {"identity", true, {e}, {}};
  report.checks.push_back(ident);

  AxiomCheck inverses{"inverses", true, {}, {}};
  if (e < 0) {
    inverses.passed = false;
    inverses.detail = "undefined without an identity";
  } else {
    for (int a = 0; a < n && inverses.passed; ++a) {
      bool found = false;
      for (int b = 0; b < n && !found; ++b)
        found = t.at(a, b) == e && t.at(b, a) == e;
      if (!found) {
        inverses.passed = false;
        inverses.witness = {a};
        inverses.detail = "element " + std::to_string(a) + " has no inverse";
      }
    }
  }
  report.checks.push_back(inverses);

  AxiomCheck assoc{"associativity", true, {}, {}};
  for (int a = 0; a < n && assoc.passed; ++a)
    for (int b = 0; b < n && assoc.passed; ++b)
      for (int c = 0; c < n; ++c) {
        if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) {
          assoc.passed = false;
          assoc.witness = {a, b, c};
          assoc.detail = "(a*b)*c != a*(b*c) for (a,b,c) = (" +
                         join(assoc.witness) + ")";
          break;
        }
      }
  report.checks.push_back(assoc);
  return report;
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_table(GroupTable table) {
  const ValidationReport report = validate_group(table);
  if (const AxiomCheck* bad = report.first_failure()) {
    std::string msg = "group axiom '" + bad->axiom + "' violated";
    if (!bad->detail.empty()) msg += ": " + bad->detail;
    if (!bad->witness.empty()) msg += " [witness " + join(bad->witness) + "]";
    throw Error(ErrorKind::validation, msg);
  }
  return FiniteGroup(std::move(table));
}

FiniteGroup::FiniteGroup(GroupTable table) : table_(std::move(table)) {
  const int n = table_.order;
  for (int c = 0; c < n; ++c) {
    if (table_.at(c, c) == c) {
      identity_ = c;
      break;
    }
  }
  inverse_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_.at(a, b) == identity_) inverse_[a] = b;
  element_orders_.assign(n, 1);
  for (int a = 0; a < n; ++a) {
    Element x = a;
    int k = 1;
    while (x != identity_) {
      x = table_.at(x, a);
      ++k;
    }
    element_orders_[a] = k;
  }
  for (int a = 0; a < n && abelian_; ++a)
    for (int b = a + 1; b < n; ++b)
      if (table_.at(a, b) != table_.at(b, a)) {
        abelian_ = false;
        break;
      }
}

std::vector<int> FiniteGroup::fingerprint() const {
  std::vector<int> fp(element_orders_);
  std::sort(fp.begin(), fp.end());
  fp.insert(fp.begin(), order());
  return fp;
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  FiniteGroup copy = *this;
  copy.table_.label = std::move(label);
  return copy;
}

FiniteGroup FiniteGroup::with_names(
    std::vector<std::pair<char, Element>> names) const {
  FiniteGroup copy = *this;
  copy.names_ = std::move(names);
  return copy;
}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(std::vector<Element> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

ElementSet ElementSet::from_mask(std::uint64_t mask) {
  std::vector<Element> m;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1U) m.push_back(i);
  return ElementSet(std::move(m));
}

bool ElementSet::contains(Element e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

// ---------------------------------------------------------------------------
// Constructors

FiniteGroup make_cyclic(int n) {
  if (n < 1)
    throw Error(ErrorKind::invalid_order,
                "cyclic group order must be >= 1, got " + std::to_string(n));
  GroupTable t{n, std::vector<Element>(static_cast<std::size_t>(n) * n),
               "Z" + std::to_string(n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.products[a * n + b] = (a + b) % n;
  return FiniteGroup::from_table(std::move(t));
}

FiniteGroup make_dihedral(int p) {
  if (p < 2)
    throw Error(ErrorKind::invalid_order,
                "dihedral parameter must be >= 2, got " + std::to_string(p));
  const int n = 2 * p;
  GroupTable t{n, std::vector<Element>(static_cast<std::size_t>(n) * n),
               "D" + std::to_string(n)};
  auto md = [p](int x) { return ((x % p) + p) % p; };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int a = x % p;
      const int b = y % p;
      const bool xs = x >= p;
      const bool ys = y >= p;
      int prod;
      if (!xs && !ys) prod = md(a + b);           // r^a r^b
      else if (!xs && ys) prod = p + md(a + b);   // r^a r^b s
      else if (xs && !ys) prod = p + md(a - b);   // r^a s r^b = r^(a-b) s
      else prod = md(a - b);                      // r^a s r^b s = r^(a-b)
      t.products[x * n + y] = prod;
    }
  }
  return FiniteGroup::from_table(std::move(t)).with_names({{'r', 1}, {'s', p}});
}

FiniteGroup make_direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  const int n = n1 * n2;
  GroupTable t{n, std::vector<Element>(static_cast<std::size_t>(n) * n),
               g1.label() + "x" + g2.label()};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t.products[x * n + y] = g1.mul(x / n2, y / n2) * n2 + g2.mul(x % n2, y % n2);
  return FiniteGroup::from_table(std::move(t));
}

FiniteGroup make_quaternion() {
  // unit index: 0=1, 1=i, 2=j, 3=k; element index = 2*unit + negative.
  static constexpr int kUnit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  GroupTable t{8, std::vector<Element>(64), "Q8"};
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2;
      const int v = y / 2;
      const int neg = (x % 2) ^ (y % 2) ^ kSign[u][v];
      t.products[x * 8 + y] = 2 * kUnit[u][v] + neg;
    }
  return FiniteGroup::from_table(std::move(t))
      .with_names({{'i', 2}, {'j', 4}, {'k', 6}});
}

// ---------------------------------------------------------------------------
// Maps

const char* to_string(MapKind kind) {
  return kind == MapKind::automorphism ? "automorphism" : "anti-automorphism";
}

const char* to_string(MapRejection r) {
  switch (r) {
    case MapRejection::not_a_bijection: return "not-a-bijection";
    case MapRejection::not_a_morphism: return "not-a-morphism";
    case MapRejection::wrong_length: return "wrong-length";
  }
  return "unknown";
}

std::vector<Element> GroupMap::power(int m) const {
  std::vector<Element> out(perm_.size());
  std::iota(out.begin(), out.end(), 0);
  for (int i = 0; i < m; ++i)
    for (auto& x : out) x = perm_[x];
  return out;
}

bool satisfies_automorphism_law(const FiniteGroup& g,
                                std::span<const Element> perm) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b])) return false;
  return true;
}

bool satisfies_anti_automorphism_law(const FiniteGroup& g,
                                     std::span<const Element> perm) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (perm[g.mul(a, b)] != g.mul(perm[b], perm[a])) return false;
  return true;
}

int permutation_order(std::span<const Element> perm) {
  // lcm of cycle lengths
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  long long order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

MapClassification classify_map(const FiniteGroup& g,
                               std::span<const Element> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    return RejectedMap{MapRejection::wrong_length,
                       "map has " + std::to_string(perm.size()) +
                           " entries, group has order " + std::to_string(n)};
  std::vector<bool> hit(n, false);
  for (Element x : perm) {
    if (x < 0 || x >= n || hit[x])
      return RejectedMap{MapRejection::not_a_bijection,
                         "value " + std::to_string(x) +
                             " is out of range or repeated"};
    hit[x] = true;
  }
  std::vector<Element> p(perm.begin(), perm.end());
  const int order = permutation_order(p);
  if (satisfies_automorphism_law(g, p))
    return GroupMap(std::move(p), MapKind::automorphism, order);
  if (satisfies_anti_automorphism_law(g, p))
    return GroupMap(std::move(p), MapKind::anti_automorphism, order);
  return RejectedMap{MapRejection::not_a_morphism,
                     "map is neither an automorphism nor an anti-automorphism"};
}

GroupMap require_map(const FiniteGroup& g, std::span<const Element> perm) {
  MapClassification c = classify_map(g, perm);
  if (auto* r = std::get_if<RejectedMap>(&c))
    throw Error(ErrorKind::invalid_map,
                std::string(to_string(r->reason)) + ": " + r->detail);
  return std::get<GroupMap>(std::move(c));
}

GroupMap inversion_map(const FiniteGroup& g) {
  return require_map(g, g.inverses());
}

GroupMap identity_map(const FiniteGroup& g) {
  std::vector<Element> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  return require_map(g, p);
}

std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  Subgroup current = subgroup_closure(g, std::span<const Element>{});
  while (static_cast<int>(current.members.size()) < g.order()) {
    Element best = -1;
    for (Element a = 0; a < g.order(); ++a) {
      if (current.contains(a)) continue;
      if (best < 0 || g.element_order(a) > g.element_order(best)) best = a;
    }
    gens.push_back(best);
    current = subgroup_closure(g, gens);
  }
  return gens;
}

namespace {

// Each non-identity element as parent * generator, in BFS order.
struct WordTree {
  std::vector<Element> order;   // BFS order, identity first
  std::vector<Element> parent;  // parent element
  std::vector<int> via;         // generator index
};

WordTree word_tree(const FiniteGroup& g, std::span<const Element> gens) {
  const int n = g.order();
  WordTree t{{}, std::vector<Element>(n, -1), std::vector<int>(n, -1)};
  std::vector<bool> seen(n, false);
  std::deque<Element> queue{g.identity()};
  seen[g.identity()] = true;
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    t.order.push_back(x);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element y = g.mul(x, gens[i]);
      if (!seen[y]) {
        seen[y] = true;
        t.parent[y] = x;
        t.via[y] = static_cast<int>(i);
        queue.push_back(y);
      }
    }
  }
  return t;
}

void check_cap(const FiniteGroup& g, int cap) {
  if (g.order() > cap)
    throw Error(ErrorKind::corpus_cap,
                "group order " + std::to_string(g.order()) + " exceeds cap " +
                    std::to_string(cap));
}

}  // namespace

std::vector<GroupMap> enumerate_automorphisms(const FiniteGroup& g, int cap) {
  check_cap(g, cap);
  const int n = g.order();
  const std::vector<Element> gens = greedy_generators(g);
  const WordTree tree = word_tree(g, gens);

  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Element a = 0; a < n; ++a)
      if (g.element_order(a) == g.element_order(gens[i]))
        candidates[i].push_back(a);

  std::vector<GroupMap> out;
  std::vector<Element> images(gens.size());
  std::vector<Element> perm(n);
  std::vector<bool> hit(n);

  auto try_extend = [&]() {
    perm[g.identity()] = g.identity();
    for (std::size_t k = 1; k < tree.order.size(); ++k) {
      const Element x = tree.order[k];
      perm[x] = g.mul(perm[tree.parent[x]], images[tree.via[x]]);
    }
    std::fill(hit.begin(), hit.end(), false);
    for (Element v : perm) {
      if (hit[v]) return;
      hit[v] = true;
    }
    if (!satisfies_automorphism_law(g, perm)) return;
    out.emplace_back(perm, MapKind::automorphism, permutation_order(perm));
  };

  // depth-first over generator images
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      try_extend();
      return;
    }
    for (Element c : candidates[depth]) {
      images[depth] = c;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);

  std::sort(out.begin(), out.end(), [](const GroupMap& a, const GroupMap& b) {
    return std::lexicographical_compare(a.perm().begin(), a.perm().end(),
                                        b.perm().begin(), b.perm().end());
  });
  return out;
}

std::vector<GroupMap> enumerate_anti_automorphisms(const FiniteGroup& g,
                                                   int cap) {
  std::vector<GroupMap> out;
  for (const GroupMap& a : enumerate_automorphisms(g, cap)) {
    std::vector<Element> p(g.order());
    for (Element x = 0; x < g.order(); ++x) p[x] = g.inv(a(x));
    const int order = permutation_order(p);
    // In an abelian group every anti-automorphism is also an automorphism.
    out.emplace_back(std::move(p),
                     g.is_abelian() ? MapKind::automorphism
                                    : MapKind::anti_automorphism,
                     order);
  }
  std::sort(out.begin(), out.end(), [](const GroupMap& a, const GroupMap& b) {
    return std::lexicographical_compare(a.perm().begin(), a.perm().end(),
                                        b.perm().begin(), b.perm().end());
  });
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains(Element e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Element> seed) {
  const int n = g.order();
  std::vector<bool> in(n, false);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : seed) {
      const Element y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  const int size = static_cast<int>(members.size());
  return Subgroup{std::move(members), n / size};
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const int n = g.order();
  std::vector<bool> in(n, false);
  for (Element m : members) {
    if (m < 0 || m >= n)
      throw Error(ErrorKind::validation,
                  "subgroup member " + std::to_string(m) + " out of range");
    in[m] = true;
  }
  if (!in[g.identity()])
    throw Error(ErrorKind::validation, "subgroup lacks the identity");
  for (Element a : members) {
    if (!in[g.inv(a)])
      throw Error(ErrorKind::validation,
                  "subgroup not closed under inverse at " + std::to_string(a));
    for (Element b : members)
      if (!in[g.mul(a, b)])
        throw Error(ErrorKind::validation,
                    "subgroup not closed under product at (" +
                        std::to_string(a) + "," + std::to_string(b) + ")");
  }
  const int size = static_cast<int>(members.size());
  return Subgroup{std::move(members), n / size};
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element m : h.members)
      if (!h.contains(g.mul(g.mul(x, m), g.inv(x)))) return false;
  return true;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<Element> comms;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(g, comms);
}

std::vector<Subgroup> index_two_subgroups(const FiniteGroup& g) {
  const int n = g.order();
  if (n % 2 != 0) return {};

  // Every index-2 subgroup contains [G,G] and all squares. The quotient of G
  // by the subgroup K0 they generate is the largest elementary abelian
  // 2-quotient of the abelianization G/[G,G].
  const Subgroup comm = commutator_subgroup(g);
  std::vector<Element> seed(comm.members);
  for (Element a = 0; a < n; ++a) seed.push_back(g.mul(a, a));
  const Subgroup k0 = subgroup_closure(g, seed);
  if (k0.index == 1) return {};

  // basis b_1..b_r of G/K0
  std::vector<Element> basis;
  Subgroup span = k0;
  while (span.index > 1) {
    Element pick = 0;
    while (span.contains(pick)) ++pick;
    basis.push_back(pick);
    std::vector<Element> s(k0.members);
    s.insert(s.end(), basis.begin(), basis.end());
    span = subgroup_closure(g, s);
  }
  const int r = static_cast<int>(basis.size());

  // coordinates of each element in F_2^r
  std::vector<unsigned> coord(n, 0);
  for (unsigned mask = 0; mask < (1U << r); ++mask) {
    Element rep = g.identity();
    for (int i = 0; i < r; ++i)
      if (mask & (1U << i)) rep = g.mul(rep, basis[i]);
    for (Element k : k0.members) coord[g.mul(k, rep)] = mask;
  }

  std::vector<Subgroup> out;
  for (unsigned f = 1; f < (1U << r); ++f) {
    std::vector<Element> kernel;
    for (Element a = 0; a < n; ++a)
      if (__builtin_popcount(f & coord[a]) % 2 == 0) kernel.push_back(a);
    out.push_back(Subgroup{std::move(kernel), 2});
  }
  std::sort(out.begin(), out.end());
  return out;
}

CosetTable right_cosets(const FiniteGroup& g, const Subgroup& h) {
  const int n = g.order();
  CosetTable t;
  t.coset_of.assign(n, -1);
  for (Element x = 0; x < n; ++x) {
    if (t.coset_of[x] >= 0) continue;
    const int id = t.count();
    std::vector<Element> coset;
    for (Element m : h.members) coset.push_back(g.mul(m, x));
    std::sort(coset.begin(), coset.end());
    for (Element y : coset) t.coset_of[y] = id;
    t.representatives.push_back(coset.front());
    t.cosets.push_back(std::move(coset));
  }
  return t;
}

std::vector<Subgroup> small_seed_subgroups(const FiniteGroup& g) {
  std::set<Subgroup> found;
  const int n = g.order();
  for (Element a = 0; a < n; ++a) {
    const Element one[] = {a};
    found.insert(subgroup_closure(g, one));
    for (Element b = a + 1; b < n; ++b) {
      const Element two[] = {a, b};
      found.insert(subgroup_closure(g, two));
    }
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Element words

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Element power_of(const FiniteGroup& g, Element x, long long k) {
  const int ord = g.element_order(x);
  long long e = ((k % ord) + ord) % ord;
  Element out = g.identity();
  for (long long i = 0; i < e; ++i) out = g.mul(out, x);
  return out;
}

}  // namespace

Element parse_element(const FiniteGroup& g, std::string_view text) {
  text = trim(text);
  if (all_digits(text)) {
    long long v = 0;
    std::from_chars(text.data(), text.data() + text.size(), v);
    if (v >= g.order())
      throw Error(ErrorKind::parse, "element index " + std::string(text) +
                                        " out of range for " + g.label());
    return static_cast<Element>(v);
  }
  Element acc = g.identity();
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '*' || c == '.' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Element base = -1;
    for (const auto& [name, elem] : g.names())
      if (name == c) base = elem;
    if (base < 0 && c == 'e') base = g.identity();
    if (base < 0)
      throw Error(ErrorKind::parse, "unknown generator '" + std::string(1, c) +
                                        "' in element word '" +
                                        std::string(text) + "'");
    ++i;
    long long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool negative = false;
      if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
      }
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i)
        throw Error(ErrorKind::parse,
                    "missing exponent in element word '" + std::string(text) + "'");
      std::from_chars(text.data() + start, text.data() + i, exponent);
      if (negative) exponent = -exponent;
    }
    acc = g.mul(acc, power_of(g, base, exponent));
  }
  return acc;
}

ElementSet parse_element_set(const FiniteGroup& g, std::string_view text) {
  std::vector<Element> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = trim(text.substr(start, end - start));
    if (!token.empty()) out.push_back(parse_element(g, token));
    start = end + 1;
  }
  return ElementSet(std::move(out));
}

}  // namespace tcg
