#include "tcg/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <set>

#include "tcg/error.hpp"

namespace tcg {

const char* to_string(RecordPolicy p) {
  switch (p) {
    case RecordPolicy::none: return "none";
    case RecordPolicy::violations: return "violations";
    case RecordPolicy::all: return "all";
  }
  return "violations";
}

RecordPolicy record_policy_from_string(std::string_view s) {
  for (RecordPolicy p : {RecordPolicy::none, RecordPolicy::violations, RecordPolicy::all})
    if (s == to_string(p)) return p;
  throw Error(ErrorKind::usage, "unknown record policy '" + std::string(s) + "'");
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % bound;
}

std::mt19937_64 derived_rng(std::uint64_t seed,
                            std::initializer_list<std::uint64_t> stream) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t state = mix(seed);
  for (std::uint64_t x : stream) state = mix(state ^ mix(x));
  return std::mt19937_64(state);
}

std::vector<GroupMap> sweep_maps(TheoremCase theorem, const FiniteGroup& g,
                                 int cap) {
  std::vector<GroupMap> all = needs_anti_automorphism(theorem)
                                  ? enumerate_anti_automorphisms(g, cap)
                                  : enumerate_automorphisms(g, cap);
  std::vector<GroupMap> out;
  for (GroupMap& m : all) {
    const int order = m.order();
    bool keep = true;
    if (is_involution_case(theorem)) keep = order <= 2;
    if (is_odd_power_case(theorem)) keep = order > 2 && minimal_odd_k(order);
    if (keep) out.push_back(std::move(m));
  }
  return out;
}

ElementSet undirected_closure(TheoremCase theorem, const FiniteGroup& g,
                              const GroupMap& sigma, const ElementSet& seed) {
  const int n = g.order();
  std::vector<Element> sigma_inv(n);
  for (Element x = 0; x < n; ++x) sigma_inv[sigma(x)] = x;
  const bool sum = uses_cayley_sum(theorem);
  // Vertex x steps to y = sigma(x s) (or sigma(x^-1 s)); the reverse edge
  // y -> x uses t = y^-1 sigma^-1(x) (or y sigma^-1(x)).
  std::vector<char> in(n, 0);
  std::vector<Element> members(seed.members().begin(), seed.members().end());
  for (Element s : members) in[s] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element s = members[i];
    for (Element x = 0; x < n; ++x) {
      const Element y = sigma(sum ? g.mul(g.inv(x), s) : g.mul(x, s));
      const Element t = sum ? g.mul(y, sigma_inv[x]) : g.mul(g.inv(y), sigma_inv[x]);
      if (!in[t]) {
        in[t] = 1;
        members.push_back(t);
      }
    }
  }
  return ElementSet(std::move(members));
}

namespace {

struct Accumulator {
  CaseSummary summary;
  const SweepConfig& config;
  std::vector<VerificationRecord>& records;

  void add(VerificationRecord&& rec) {
    ++summary.instances;
    switch (rec.verdict) {
      case Verdict::holds: ++summary.holds; break;
      case Verdict::hypotheses_not_met: ++summary.hypotheses_not_met; break;
      case Verdict::violation:
        ++summary.violations;
        if (rec.bipartite.value_or(false)) ++summary.violations_bipartite;
        break;
    }
    if (rec.verdict != Verdict::hypotheses_not_met) {
      auto lower = [](std::optional<double>& slot, std::optional<double> v) {
        if (v && (!slot || *v < *slot)) slot = v;
      };
      lower(summary.min_margin_lower, rec.margin_lower);
      lower(summary.min_margin_upper, rec.margin_upper);
      if (!rec.bipartite.value_or(false))
        lower(summary.min_margin_lower_non_bipartite, rec.margin_lower);
    }
    const bool keep = config.records == RecordPolicy::all ||
                      (config.records == RecordPolicy::violations &&
                       rec.verdict == Verdict::violation);
    if (keep) records.push_back(std::move(rec));
  }
};

std::uint64_t full_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// Random subsets for one (G, map) stream: closures of random seeds under
// the case's undirectedness condition, deduplicated, in draw order.
std::vector<ElementSet> random_twisted_sets(TheoremCase theorem,
                                            const FiniteGroup& g,
                                            const GroupMap& sigma,
                                            std::mt19937_64& rng, int count) {
  const int n = g.order();
  std::set<ElementSet> seen;
  std::vector<ElementSet> out;
  const int attempts = 50 * count;
  for (int a = 0; a < attempts && static_cast<int>(out.size()) < count; ++a) {
    const int size = 1 + static_cast<int>(draw_below(rng, 3));
    std::vector<Element> seed;
    for (int i = 0; i < size; ++i)
      seed.push_back(static_cast<Element>(draw_below(rng, n)));
    ElementSet s = undirected_closure(theorem, g, sigma, ElementSet(std::move(seed)));
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

// Inverse classes {x, x^-1}, each as a mask of elements.
std::vector<std::vector<Element>> inverse_classes(const FiniteGroup& g) {
  std::vector<std::vector<Element>> out;
  for (Element x = 0; x < g.order(); ++x) {
    const Element y = g.inv(x);
    if (y < x) continue;
    out.push_back(x == y ? std::vector<Element>{x} : std::vector<Element>{x, y});
  }
  return out;
}

ElementSet union_of_classes(const std::vector<std::vector<Element>>& classes,
                            std::uint64_t mask) {
  std::vector<Element> members;
  for (std::size_t c = 0; c < classes.size(); ++c)
    if ((mask >> c) & 1U)
      members.insert(members.end(), classes[c].begin(), classes[c].end());
  return ElementSet(std::move(members));
}

void sweep_twisted(TheoremCase theorem, const FiniteGroup& g, std::size_t gi,
                   const SweepConfig& config, Accumulator& acc) {
  const std::vector<GroupMap> maps = sweep_maps(theorem, g, config.group_cap);
  if (maps.empty()) return;
  ++acc.summary.groups;
  acc.summary.maps += maps.size();
  VerifyOptions options;
  options.tol = config.tol;
  options.cheeger_cap = config.cheeger_cap;
  options.informational = false;
  AnalysisCache cache;
  options.cache = &cache;

  for (std::size_t mi = 0; mi < maps.size(); ++mi) {
    const GroupMap& sigma = maps[mi];
    if (g.order() <= config.exhaustive_order) {
      const std::uint64_t last = full_mask(g.order());
      for (std::uint64_t mask = 1; mask <= last; ++mask)
        acc.add(verify_instance(theorem, g, ElementSet::from_mask(mask), &sigma,
                                nullptr, options));
    } else {
      auto rng = derived_rng(config.seed, {gi, static_cast<std::uint64_t>(theorem), mi});
      for (const ElementSet& s :
           random_twisted_sets(theorem, g, sigma, rng, config.random_s))
        acc.add(verify_instance(theorem, g, s, &sigma, nullptr, options));
    }
  }
}

void sweep_schreier(const FiniteGroup& g, std::size_t gi,
                    const SweepConfig& config, Accumulator& acc) {
  std::vector<Subgroup> subgroups;
  for (Subgroup& h : small_seed_subgroups(g))
    if (h.index >= 4) subgroups.push_back(std::move(h));
  if (subgroups.empty()) return;
  ++acc.summary.groups;
  acc.summary.maps += subgroups.size();
  const auto classes = inverse_classes(g);

  for (std::size_t hi = 0; hi < subgroups.size(); ++hi) {
    const Subgroup& h = subgroups[hi];
    VerifyOptions options;
    options.tol = config.tol;
    options.cheeger_cap = config.cheeger_cap;
    options.informational = false;
    options.transitivity = index_two_transitivity(g, h);
    AnalysisCache cache;
    options.cache = &cache;

    if (g.order() <= config.schreier_exhaustive_order) {
      const std::uint64_t last = full_mask(static_cast<int>(classes.size()));
      for (std::uint64_t mask = 1; mask <= last; ++mask)
        acc.add(verify_instance(TheoremCase::schreier, g,
                                union_of_classes(classes, mask), nullptr, &h,
                                options));
    } else {
      auto rng = derived_rng(config.seed,
                             {gi, static_cast<std::uint64_t>(TheoremCase::schreier), hi});
      const std::uint64_t total = full_mask(static_cast<int>(classes.size()));
      std::set<std::uint64_t> seen;
      const int want = static_cast<int>(std::min<std::uint64_t>(total, config.random_s));
      while (static_cast<int>(seen.size()) < want) {
        const std::uint64_t mask = 1 + draw_below(rng, total);
        if (!seen.insert(mask).second) continue;
        acc.add(verify_instance(TheoremCase::schreier, g,
                                union_of_classes(classes, mask), nullptr, &h,
                                options));
      }
    }
  }
}

}  // namespace

SweepReport sweep(const SweepConfig& config, std::ostream* progress) {
  SweepReport report;
  report.config = config;
  if (config.cases.empty()) return report;
  const std::vector<FiniteGroup> groups =
      group_catalog(config.max_order, CatalogOptions{config.group_cap});

  for (TheoremCase theorem : config.cases) {
    const auto start = std::chrono::steady_clock::now();
    Accumulator acc{CaseSummary{}, config, report.records};
    acc.summary.theorem = theorem;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const FiniteGroup& g = groups[gi];
      if (g.order() < config.min_order) continue;
      if (theorem == TheoremCase::schreier)
        sweep_schreier(g, gi, config, acc);
      else
        sweep_twisted(theorem, g, gi, config, acc);
    }
    report.summaries.push_back(acc.summary);
    if (progress) {
      const double secs = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      *progress << to_string(theorem) << ": " << acc.summary.instances
                << " instances, " << acc.summary.holds << " hold, "
                << acc.summary.violations << " violations ("
                << acc.summary.violations_bipartite << " bipartite), " << secs
                << " s\n";
    }
  }
  return report;
}

}  // namespace tcg
