#include "tcg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tcg/error.hpp"

namespace tcg {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::hypotheses_not_met: return "hypotheses_not_met";
    case Verdict::violation: return "VIOLATION";
  }
  return "unknown";
}

Verdict verdict_from_string(std::string_view s) {
  for (Verdict v : {Verdict::holds, Verdict::hypotheses_not_met, Verdict::violation})
    if (s == to_string(v)) return v;
  throw Error(ErrorKind::parse, "unknown verdict '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Graph analysis

GraphAnalysis analyze_graph(const RegularMultigraph& g, double solver_tol,
                            int cheeger_cap) {
  GraphAnalysis a;
  a.spectrum = spectrum(g, solver_tol);
  a.cheeger = cheeger_constants(g, cheeger_cap);
  a.bipartite = is_bipartite(g);
  return a;
}

std::size_t AnalysisCache::Hash::operator()(const std::vector<int>& v) const noexcept {
  std::uint64_t x = 1469598103934665603ULL;
  for (int e : v) {
    x ^= static_cast<std::uint64_t>(e) + 0x9e3779b97f4a7c15ULL;
    x *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(x);
}

const GraphAnalysis& AnalysisCache::get(const RegularMultigraph& g,
                                        double solver_tol, int cheeger_cap) {
  std::vector<int> key(g.adjacency().begin(), g.adjacency().end());
  key.push_back(g.n());
  auto it = map_.find(key);
  if (it != map_.end()) {
    ++hits_;
    return *it->second;
  }
  auto a = std::make_unique<GraphAnalysis>(analyze_graph(g, solver_tol, cheeger_cap));
  return *map_.emplace(std::move(key), std::move(a)).first->second;
}

// ---------------------------------------------------------------------------
// Hypotheses

namespace {

std::string join(std::span<const Element> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

Hypothesis pass(std::string name) { return {std::move(name), true, {}}; }
Hypothesis fail(std::string name, std::string witness) {
  return {std::move(name), false, std::move(witness)};
}

std::string law_witness(const FiniteGroup& g, std::span<const Element> perm,
                        bool anti) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) return "sigma has the wrong length";
  std::vector<bool> hit(n, false);
  for (Element x : perm) {
    if (x < 0 || x >= n || hit[x]) return "sigma is not a bijection";
    hit[x] = true;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element lhs = perm[g.mul(a, b)];
      const Element rhs = anti ? g.mul(perm[b], perm[a]) : g.mul(perm[a], perm[b]);
      if (lhs != rhs)
        return "a=" + std::to_string(a) + ", b=" + std::to_string(b) +
               ": sigma(ab)=" + std::to_string(lhs) + " but " +
               (anti ? "sigma(b)sigma(a)=" : "sigma(a)sigma(b)=") +
               std::to_string(rhs);
    }
  return {};
}

Hypothesis undirected_hypothesis(const RegularMultigraph& g) {
  const int n = g.n();
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (g.count(v, w) != g.count(w, v))
        return fail("undirected", "A[" + std::to_string(v) + "][" +
                                      std::to_string(w) + "]=" +
                                      std::to_string(g.count(v, w)) + " but A[" +
                                      std::to_string(w) + "][" +
                                      std::to_string(v) + "]=" +
                                      std::to_string(g.count(w, v)));
  return pass("undirected");
}

Hypothesis connected_hypothesis(const RegularMultigraph& g) {
  if (is_connected(g)) return pass("connected");
  std::vector<bool> seen(g.n(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& t : g.theta())
      if (!seen[t[v]]) {
        seen[t[v]] = true;
        stack.push_back(t[v]);
      }
  }
  const auto it = std::find(seen.begin(), seen.end(), false);
  return fail("connected", "vertex " + std::to_string(it - seen.begin()) +
                               " is unreachable from vertex 0");
}

struct Checked {
  std::vector<Hypothesis> hypotheses;
  std::optional<RegularMultigraph> graph;
};

void graph_hypotheses(Checked& c) {
  if (!c.graph) {
    c.hypotheses.push_back(fail("undirected", "graph could not be built"));
    c.hypotheses.push_back(fail("connected", "graph could not be built"));
    return;
  }
  c.hypotheses.push_back(undirected_hypothesis(*c.graph));
  c.hypotheses.push_back(connected_hypothesis(*c.graph));
}

bool generators_in_range(const FiniteGroup& g, const ElementSet& s) {
  for (Element x : s.members())
    if (x < 0 || x >= g.order()) return false;
  return true;
}

Checked twisted_checks(TheoremCase theorem, const FiniteGroup& g,
                       const ElementSet& s, const GroupMap* sigma) {
  Checked c;
  auto& hs = c.hypotheses;
  hs.push_back(g.order() >= 4 ? pass("order_at_least_4")
                              : fail("order_at_least_4",
                                     "|G|=" + std::to_string(g.order())));

  const bool anti = needs_anti_automorphism(theorem);
  const std::string law = anti ? "sigma_anti_automorphism" : "sigma_automorphism";
  if (!sigma) {
    hs.push_back(fail(law, "no sigma supplied"));
  } else {
    std::string w = law_witness(g, sigma->perm(), anti);
    hs.push_back(w.empty() ? pass(law) : fail(law, std::move(w)));
  }

  if (is_involution_case(theorem)) {
    if (!sigma)
      hs.push_back(fail("sigma_squared_identity", "no sigma supplied"));
    else if (sigma->order() <= 2)
      hs.push_back(pass("sigma_squared_identity"));
    else
      hs.push_back(fail("sigma_squared_identity",
                        "sigma has order " + std::to_string(sigma->order())));
  } else if (is_odd_power_case(theorem)) {
    if (!sigma)
      hs.push_back(fail("sigma_order_2k_k_odd", "no sigma supplied"));
    else if (minimal_odd_k(sigma->order()))
      hs.push_back(pass("sigma_order_2k_k_odd"));
    else
      hs.push_back(fail("sigma_order_2k_k_odd",
                        "sigma has order " + std::to_string(sigma->order()) +
                            ", which is divisible by 4"));
  }

  const bool nonempty = !s.empty() && generators_in_range(g, s);
  hs.push_back(nonempty ? pass("s_nonempty")
                        : fail("s_nonempty", s.empty() ? "S is empty"
                                                       : "S has out-of-range members"));
  if (sigma && nonempty) {
    try {
      c.graph = uses_cayley_sum(theorem) ? build_twisted_cayley_sum(g, s, *sigma)
                                         : build_twisted_cayley(g, s, *sigma);
    } catch (const Error&) {
      // sigma invalid for its own tag; the law hypothesis already records why
    }
  }
  graph_hypotheses(c);
  return c;
}

Hypothesis conjugation_closure(const FiniteGroup& g, const ElementSet& s) {
  const int n = g.order();
  std::vector<char> in_ss(n, 0);
  for (Element a : s.members())
    for (Element b : s.members()) in_ss[g.mul(a, b)] = 1;
  for (Element y = 0; y < n; ++y) {
    if (!in_ss[y]) continue;
    for (Element x = 0; x < n; ++x) {
      const Element conj = g.mul(g.mul(x, y), g.inv(x));
      if (!in_ss[conj])
        return fail("ss_conjugation_closed",
                    "g=" + std::to_string(x) + " conjugates " + std::to_string(y) +
                        " in S.S to " + std::to_string(conj) + ", not in S.S");
    }
  }
  return pass("ss_conjugation_closed");
}

Checked schreier_checks(const FiniteGroup& g, const ElementSet& s,
                        const Subgroup* h, const VerifyOptions& options) {
  Checked c;
  auto& hs = c.hypotheses;
  if (!h)
    hs.push_back(fail("index_at_least_4", "no subgroup supplied"));
  else
    hs.push_back(h->index >= 4 ? pass("index_at_least_4")
                               : fail("index_at_least_4",
                                      "[G:H]=" + std::to_string(h->index)));

  const bool nonempty = !s.empty() && generators_in_range(g, s);
  hs.push_back(nonempty ? pass("s_nonempty")
                        : fail("s_nonempty", s.empty() ? "S is empty"
                                                       : "S has out-of-range members"));

  bool symmetric = nonempty;
  if (nonempty) {
    for (Element x : s.members())
      if (!s.contains(g.inv(x))) {
        hs.push_back(fail("s_symmetric", std::to_string(x) + " is in S but " +
                                             std::to_string(g.inv(x)) + " is not"));
        symmetric = false;
        break;
      }
    if (symmetric) hs.push_back(pass("s_symmetric"));
    hs.push_back(conjugation_closure(g, s));
  } else {
    hs.push_back(fail("s_symmetric", "S is unusable"));
    hs.push_back(fail("ss_conjugation_closed", "S is unusable"));
  }

  if (!h)
    hs.push_back(fail("no_index_two_subgroup_transitive", "no subgroup supplied"));
  else if (options.transitivity)
    hs.push_back(*options.transitivity);
  else
    hs.push_back(index_two_transitivity(g, *h));

  if (h && symmetric) c.graph = build_schreier(g, *h, s);
  graph_hypotheses(c);
  return c;
}

Checked run_checks(TheoremCase theorem, const FiniteGroup& g,
                   const ElementSet& s, const GroupMap* sigma,
                   const Subgroup* h, const VerifyOptions& options) {
  if (theorem == TheoremCase::schreier) return schreier_checks(g, s, h, options);
  return twisted_checks(theorem, g, s, sigma);
}

}  // namespace

Hypothesis index_two_transitivity(const FiniteGroup& g, const Subgroup& h) {
  const std::string name = "no_index_two_subgroup_transitive";
  const CosetTable cosets = right_cosets(g, h);
  const Element base = cosets.representatives[0];
  for (const Subgroup& k : index_two_subgroups(g)) {
    std::vector<char> reached(cosets.count(), 0);
    int count = 0;
    for (Element t : k.members) {
      const int c = cosets.coset_of[g.mul(base, g.inv(t))];
      if (!reached[c]) {
        reached[c] = 1;
        ++count;
      }
    }
    if (count == cosets.count())
      return fail(name, "index-two subgroup " + join(k.members) +
                            " is transitive on the cosets");
  }
  return pass(name);
}

std::vector<Hypothesis> check_hypotheses(TheoremCase theorem,
                                         const FiniteGroup& g,
                                         const ElementSet& s,
                                         const GroupMap* sigma,
                                         const Subgroup* h,
                                         const VerifyOptions& options) {
  return run_checks(theorem, g, s, sigma, h, options).hypotheses;
}

// ---------------------------------------------------------------------------
// Verification

VerificationRecord verify_instance(TheoremCase theorem, const FiniteGroup& g,
                                   const ElementSet& s, const GroupMap* sigma,
                                   const Subgroup* h,
                                   const VerifyOptions& options) {
  VerificationRecord rec;
  rec.theorem = theorem;
  rec.group = g.label();
  rec.generators.assign(s.members().begin(), s.members().end());
  if (sigma && theorem != TheoremCase::schreier)
    rec.sigma = SigmaInfo{{sigma->perm().begin(), sigma->perm().end()},
                          sigma->kind(), sigma->order()};
  if (h && theorem == TheoremCase::schreier) rec.subgroup = h->members;

  Checked checked = run_checks(theorem, g, s, sigma, h, options);
  rec.hypotheses = std::move(checked.hypotheses);
  const bool all = rec.hypotheses_pass();

  if (is_odd_power_case(theorem) && sigma) rec.k = minimal_odd_k(sigma->order());

  if (!checked.graph) {
    rec.verdict = Verdict::hypotheses_not_met;
    return rec;
  }
  const RegularMultigraph& graph = *checked.graph;
  rec.n = graph.n();
  rec.d = graph.d();

  const bool undirected = is_undirected(graph);
  if (!undirected || (!all && !options.informational)) {
    rec.verdict = all ? Verdict::violation : Verdict::hypotheses_not_met;
    return rec;
  }
  if (graph.n() > options.cheeger_cap) {
    if (all)
      throw Error(ErrorKind::size_cap,
                  "instance has " + std::to_string(graph.n()) +
                      " vertices, above the Cheeger cap " +
                      std::to_string(options.cheeger_cap));
    rec.verdict = Verdict::hypotheses_not_met;
    rec.note = "above the Cheeger cap; bounds not evaluated";
    return rec;
  }

  GraphAnalysis local;
  const GraphAnalysis* a = nullptr;
  if (options.cache) {
    a = &options.cache->get(graph, options.solver_tol, options.cheeger_cap);
  } else {
    local = analyze_graph(graph, options.solver_tol, options.cheeger_cap);
    a = &local;
  }
  rec.h = a->cheeger.h;
  rec.edge_h = a->cheeger.edge_h;
  rec.bipartite = a->bipartite;
  rec.nontrivial_min = a->spectrum.nontrivial_min;
  rec.nontrivial_max = a->spectrum.nontrivial_max;

  bool within = true;
  const bool have_k = !is_odd_power_case(theorem) || rec.k.has_value();
  if (have_k && rec.nontrivial_min) {
    BoundValues b = bound_formulas(theorem, *rec.h, rec.d, rec.k.value_or(1));
    if (options.bound_hook) options.bound_hook(b);
    rec.lower_bound = b.lower;
    rec.upper_bound = b.upper;
    rec.lower_gap_exact = b.lower_gap_exact;
    rec.margin_lower = (*rec.nontrivial_min + 1.0) - b.lower_gap;
    rec.margin_upper = (1.0 - *rec.nontrivial_max) - b.upper_gap;
    within = *rec.margin_lower > -options.tol && *rec.margin_upper >= -options.tol;

    if (is_odd_power_case(theorem) && sigma && sigma->order() <= 2) {
      const BoundValues inv =
          bound_formulas(TheoremCase::tc_auto_involution, *rec.h, rec.d);
      ExtraCheck x;
      x.name = "involution_lower_bound";
      x.lower_bound = inv.lower;
      x.margin = (*rec.nontrivial_min + 1.0) - inv.lower_gap;
      x.passed = x.margin > -options.tol;
      within = within && x.passed;
      rec.extra_checks.push_back(x);
    }
  }

  if (!all) {
    rec.verdict = Verdict::hypotheses_not_met;
  } else if (!rec.lower_bound) {
    rec.verdict = Verdict::hypotheses_not_met;
  } else {
    rec.verdict = within ? Verdict::holds : Verdict::violation;
    if (!within && a->bipartite)
      rec.note = "graph is bipartite, so -1 lies in the nontrivial spectrum";
  }
  if (a->spectrum.disconnected() && rec.note.empty())
    rec.note = "graph is disconnected; nontrivial spectrum drops one copy of 1";
  return rec;
}

// ---------------------------------------------------------------------------
// Auxiliary inequalities

CheegerBuserCheck check_cheeger_buser(const RegularMultigraph& g, double tol,
                                      int cheeger_cap) {
  CheegerBuserCheck out;
  const CheegerReport c = cheeger_constants(g, cheeger_cap);
  out.edge_h = c.edge_h;
  if (g.n() < 2) {
    out.passed = true;
    out.skipped = true;
    out.note = "lambda2 undefined for a single vertex";
    return out;
  }
  const SpectrumResult sp = spectrum(g);
  out.lambda2 = *sp.lambda2();
  const double e = c.edge_h.to_double();
  out.lower = e * e / 2;
  out.upper = 2 * e;
  out.passed = out.lower <= out.lambda2 + tol && out.lambda2 <= out.upper + tol;
  return out;
}

PowerLawCheck check_power_laws(const RegularMultigraph& g, int k, double tol,
                               int cheeger_cap, long long degree_cap) {
  PowerLawCheck out;
  const RegularMultigraph p = graph_power(g, k, degree_cap);
  const SpectrumResult base = spectrum(g);
  const SpectrumResult powered = spectrum(p);
  std::vector<double> expected;
  for (double t : base.t) expected.push_back(std::pow(t, k));
  std::sort(expected.begin(), expected.end(), std::greater<>());
  for (std::size_t i = 0; i < expected.size(); ++i)
    out.max_spectrum_error =
        std::max(out.max_spectrum_error, std::abs(expected[i] - powered.t[i]));
  out.spectrum_passed = out.max_spectrum_error <= tol;

  if (k % 2 == 0) {
    out.note = "Cheeger power bound applies to odd k only";
    return out;
  }
  if (!is_connected(g) || is_bipartite(g)) {
    out.note = "Cheeger power bound skipped: graph is disconnected or bipartite";
    return out;
  }
  out.cheeger_checked = true;
  out.h = vertex_cheeger(g, cheeger_cap);
  out.h_power = vertex_cheeger(p, cheeger_cap);
  out.cheeger_lower_bound = power_cheeger_lower_bound(*out.h, g.d(), k);
  out.cheeger_passed = power_cheeger_bound_holds(*out.h_power, *out.h, g.d(), k);
  return out;
}

}  // namespace tcg
