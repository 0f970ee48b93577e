#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <vector>

#include "tcg/verify.hpp"

namespace tcg {

inline constexpr int kReportSchemaVersion = 1;

enum class RecordPolicy { none, violations, all };

const char* to_string(RecordPolicy p);
RecordPolicy record_policy_from_string(std::string_view s);

struct SweepConfig {
  int min_order = 4;
  int max_order = 8;
  std::vector<TheoremCase> cases;
  std::uint64_t seed = 0;
  /// Every S for |G| up to this order; `random_s` sampled sets beyond it.
  int exhaustive_order = 8;
  int schreier_exhaustive_order = 8;
  int random_s = 200;
  double tol = 1e-9;
  int cheeger_cap = kDefaultCheegerCap;
  int group_cap = kDefaultGroupCap;
  RecordPolicy records = RecordPolicy::violations;
  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

struct CaseSummary {
  TheoremCase theorem = TheoremCase::tc_auto_involution;
  std::uint64_t groups = 0;
  std::uint64_t maps = 0;  // sigmas, or subgroups for the Schreier case
  std::uint64_t instances = 0;
  std::uint64_t holds = 0;
  std::uint64_t hypotheses_not_met = 0;
  std::uint64_t violations = 0;
  std::uint64_t violations_bipartite = 0;
  // Minima over instances whose hypotheses all pass.
  std::optional<double> min_margin_lower;
  std::optional<double> min_margin_upper;
  std::optional<double> min_margin_lower_non_bipartite;
  friend bool operator==(const CaseSummary&, const CaseSummary&) = default;
};

struct SweepReport {
  int schema_version = kReportSchemaVersion;
  SweepConfig config;
  std::vector<CaseSummary> summaries;
  std::vector<VerificationRecord> records;

  std::uint64_t violations() const {
    std::uint64_t v = 0;
    for (const auto& s : summaries) v += s.violations;
    return v;
  }
  int exit_status() const { return violations() ? 2 : 0; }
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Runs verify_instance over the catalog for each requested case. Output is
/// a pure function of the config. Progress lines go to `progress` if given.
SweepReport sweep(const SweepConfig& config, std::ostream* progress = nullptr);

/// The maps a case is swept over for one group: automorphisms or
/// anti-automorphisms filtered by the case's order condition.
std::vector<GroupMap> sweep_maps(TheoremCase theorem, const FiniteGroup& g,
                                 int cap = kDefaultGroupCap);

/// Smallest superset of `seed` whose twisted graph has a reverse for every
/// edge, i.e. is undirected.
ElementSet undirected_closure(TheoremCase theorem, const FiniteGroup& g,
                              const GroupMap& sigma, const ElementSet& seed);

/// Deterministic bounded draw in [0, bound).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

/// Generator seeded from a base seed and a stream of indices.
std::mt19937_64 derived_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> stream);

}  // namespace tcg
