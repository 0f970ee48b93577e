#include "tcg/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "tcg/error.hpp"

namespace tcg {

const char* to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::cayley: return "cayley";
    case GraphKind::cayley_sum: return "cayley_sum";
    case GraphKind::twisted_cayley: return "twisted_cayley";
    case GraphKind::twisted_cayley_sum: return "twisted_cayley_sum";
    case GraphKind::schreier: return "schreier";
    case GraphKind::power: return "power";
    case GraphKind::raw: return "raw";
  }
  return "raw";
}

GraphKind graph_kind_from_string(std::string_view s) {
  for (GraphKind k : {GraphKind::cayley, GraphKind::cayley_sum,
                      GraphKind::twisted_cayley, GraphKind::twisted_cayley_sum,
                      GraphKind::schreier, GraphKind::power, GraphKind::raw})
    if (s == to_string(k)) return k;
  throw Error(ErrorKind::parse, "unknown graph kind '" + std::string(s) + "'");
}

RegularMultigraph::RegularMultigraph(int n, std::vector<std::vector<int>> theta,
                                     GraphKind kind, Provenance provenance)
    : n_(n),
      theta_(std::move(theta)),
      kind_(kind),
      provenance_(std::move(provenance)) {
  if (n_ < 1) throw Error(ErrorKind::validation, "graph needs at least one vertex");
  adjacency_.assign(static_cast<std::size_t>(n_) * n_, 0);
  std::vector<bool> hit(n_);
  for (std::size_t i = 0; i < theta_.size(); ++i) {
    const auto& map = theta_[i];
    if (static_cast<int>(map.size()) != n_)
      throw Error(ErrorKind::validation,
                  "theta[" + std::to_string(i) + "] has wrong length");
    std::fill(hit.begin(), hit.end(), false);
    for (int v = 0; v < n_; ++v) {
      const int w = map[v];
      if (w < 0 || w >= n_ || hit[w])
        throw Error(ErrorKind::validation,
                    "theta[" + std::to_string(i) + "] is not a bijection");
      hit[w] = true;
      ++adjacency_[v * n_ + w];
    }
  }
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(int n, std::initializer_list<int> members) : VertexSet(n) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::from_mask(int n, std::uint64_t mask) {
  VertexSet s(n);
  if (!s.words_.empty()) s.words_[0] = n >= 64 ? mask : mask & ((std::uint64_t{1} << n) - 1);
  return s;
}

VertexSet VertexSet::all(int n) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v) s.insert(v);
  return s;
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

void require_generators(const FiniteGroup& g, const ElementSet& s) {
  if (s.empty())
    throw Error(ErrorKind::empty_generating_set, "generating set S is empty");
  for (Element x : s.members())
    if (x < 0 || x >= g.order())
      throw Error(ErrorKind::validation,
                  "generator " + std::to_string(x) + " out of range");
}

void require_valid_sigma(const FiniteGroup& g, const GroupMap& sigma) {
  const auto perm = sigma.perm();
  if (static_cast<int>(perm.size()) != g.order())
    throw Error(ErrorKind::invalid_map, "sigma length does not match |G|");
  std::vector<bool> hit(g.order(), false);
  for (Element x : perm) {
    if (x < 0 || x >= g.order() || hit[x])
      throw Error(ErrorKind::invalid_map, "sigma is not a bijection");
    hit[x] = true;
  }
  const bool ok = sigma.kind() == MapKind::automorphism
                      ? satisfies_automorphism_law(g, perm)
                      : satisfies_anti_automorphism_law(g, perm);
  if (!ok)
    throw Error(ErrorKind::invalid_map,
                std::string("sigma is not an ") + to_string(sigma.kind()) +
                    " of " + g.label());
}

Provenance make_provenance(const FiniteGroup& g, const ElementSet& s,
                           const GroupMap* sigma) {
  Provenance p;
  p.group = g.label();
  p.generators.assign(s.members().begin(), s.members().end());
  if (sigma)
    p.sigma = SigmaInfo{{sigma->perm().begin(), sigma->perm().end()},
                        sigma->kind(), sigma->order()};
  return p;
}

template <typename Step>
RegularMultigraph build_group_graph(const FiniteGroup& g, const ElementSet& s,
                                    GraphKind kind, const GroupMap* sigma,
                                    Step step) {
  require_generators(g, s);
  if (sigma) require_valid_sigma(g, *sigma);
  const int n = g.order();
  std::vector<std::vector<int>> theta;
  theta.reserve(s.size());
  for (Element gen : s.members()) {
    std::vector<int> map(n);
    for (Element x = 0; x < n; ++x) {
      const Element y = step(x, gen);
      map[x] = sigma ? (*sigma)(y) : y;
    }
    theta.push_back(std::move(map));
  }
  return RegularMultigraph(n, std::move(theta), kind,
                           make_provenance(g, s, sigma));
}

}  // namespace

RegularMultigraph build_cayley(const FiniteGroup& g, const ElementSet& s) {
  return build_group_graph(g, s, GraphKind::cayley, nullptr,
                           [&](Element x, Element t) { return g.mul(x, t); });
}

RegularMultigraph build_cayley_sum(const FiniteGroup& g, const ElementSet& s) {
  return build_group_graph(
      g, s, GraphKind::cayley_sum, nullptr,
      [&](Element x, Element t) { return g.mul(g.inv(x), t); });
}

RegularMultigraph build_twisted_cayley(const FiniteGroup& g, const ElementSet& s,
                                       const GroupMap& sigma) {
  return build_group_graph(g, s, GraphKind::twisted_cayley, &sigma,
                           [&](Element x, Element t) { return g.mul(x, t); });
}

RegularMultigraph build_twisted_cayley_sum(const FiniteGroup& g,
                                           const ElementSet& s,
                                           const GroupMap& sigma) {
  return build_group_graph(
      g, s, GraphKind::twisted_cayley_sum, &sigma,
      [&](Element x, Element t) { return g.mul(g.inv(x), t); });
}

RegularMultigraph build_schreier(const FiniteGroup& g, const Subgroup& h,
                                 const ElementSet& s) {
  require_generators(g, s);
  for (Element x : s.members())
    if (!s.contains(g.inv(x)))
      throw Error(ErrorKind::symmetry_violation,
                  "S is not symmetric: " + std::to_string(x) +
                      " is in S but its inverse " + std::to_string(g.inv(x)) +
                      " is not");
  const CosetTable cosets = right_cosets(g, h);
  const int n = cosets.count();
  std::vector<std::vector<int>> theta;
  for (Element gen : s.members()) {
    std::vector<int> map(n);
    for (int c = 0; c < n; ++c)
      map[c] = cosets.coset_of[g.mul(cosets.representatives[c], gen)];
    theta.push_back(std::move(map));
  }
  Provenance p = make_provenance(g, s, nullptr);
  p.subgroup = h.members;
  return RegularMultigraph(n, std::move(theta), GraphKind::schreier, std::move(p));
}

RegularMultigraph graph_power(const RegularMultigraph& g, int k,
                              long long degree_cap) {
  if (k < 1) throw Error(ErrorKind::precondition, "graph power needs k >= 1");
  long long degree = 1;
  for (int i = 0; i < k; ++i) {
    degree *= g.d();
    if (degree > degree_cap)
      throw Error(ErrorKind::degree_cap,
                  "d^k exceeds degree cap " + std::to_string(degree_cap));
  }
  const int n = g.n();
  std::vector<std::vector<int>> maps(1, std::vector<int>(n));
  std::iota(maps[0].begin(), maps[0].end(), 0);
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<int>> next;
    next.reserve(maps.size() * g.d());
    for (const auto& m : maps)
      for (const auto& t : g.theta()) {
        std::vector<int> composed(n);
        for (int v = 0; v < n; ++v) composed[v] = m[t[v]];
        next.push_back(std::move(composed));
      }
    maps = std::move(next);
  }
  Provenance p = g.provenance();
  p.power = k;
  return RegularMultigraph(n, std::move(maps), GraphKind::power, std::move(p));
}

// ---------------------------------------------------------------------------
// Undirectedness

bool is_undirected(const RegularMultigraph& g) {
  const int n = g.n();
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (g.count(v, w) != g.count(w, v)) return false;
  return true;
}

bool undirected_criterion(GraphKind kind, const FiniteGroup& g,
                          const ElementSet& s, const GroupMap* sigma) {
  const int n = g.order();
  switch (kind) {
    case GraphKind::cayley:
      for (Element x : s.members())
        if (!s.contains(g.inv(x))) return false;
      return true;
    case GraphKind::cayley_sum:
      for (Element x : s.members())
        for (Element a = 0; a < n; ++a)
          if (!s.contains(g.mul(g.mul(a, x), g.inv(a)))) return false;
      return true;
    case GraphKind::twisted_cayley_sum: {
      if (!sigma || !satisfies_automorphism_law(g, sigma->perm()))
        throw Error(ErrorKind::no_criterion,
                    "no closed-form criterion for a twisted Cayley sum graph "
                    "unless sigma is an automorphism; use is_undirected");
      const auto& sg = *sigma;
      for (Element x : s.members())
        for (Element a = 0; a < n; ++a)
          if (!s.contains(g.mul(g.mul(sg(sg(a)), sg(x)), g.inv(a)))) return false;
      return true;
    }
    case GraphKind::twisted_cayley: {
      if (!sigma || !satisfies_anti_automorphism_law(g, sigma->perm()))
        throw Error(ErrorKind::no_criterion,
                    "no closed-form criterion for a twisted Cayley graph "
                    "unless sigma is an anti-automorphism; use is_undirected");
      const auto& sg = *sigma;
      for (Element x : s.members())
        for (Element a = 0; a < n; ++a)
          if (!s.contains(g.mul(g.mul(sg(sg(a)), sg(g.inv(x))), g.inv(a))))
            return false;
      return true;
    }
    default:
      throw Error(ErrorKind::no_criterion,
                  std::string("no closed-form undirectedness criterion for ") +
                      to_string(kind) + "; use is_undirected");
  }
}

// ---------------------------------------------------------------------------
// DOT

std::string to_dot(const RegularMultigraph& g) {
  if (!is_undirected(g))
    throw Error(ErrorKind::precondition, "DOT export needs an undirected graph");
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (int v = 0; v < g.n(); ++v)
    for (int w = v; w < g.n(); ++w) {
      const int m = g.count(v, w);
      if (m > 0) out << "  " << v << " -- " << w << " [multiplicity=" << m << "];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace tcg
