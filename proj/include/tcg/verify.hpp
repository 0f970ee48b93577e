#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tcg/bounds.hpp"
#include "tcg/cheeger.hpp"
#include "tcg/graph.hpp"
#include "tcg/group.hpp"
#include "tcg/spectra.hpp"

namespace tcg {

struct Hypothesis {
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed
  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

enum class Verdict { holds, hypotheses_not_met, violation };

const char* to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

/// A second lower bound an instance is also held to (the involution bound
/// for odd-power instances whose sigma squares to the identity).
struct ExtraCheck {
  std::string name;
  double lower_bound = -1;
  double margin = 0;
  bool passed = false;
  friend bool operator==(const ExtraCheck&, const ExtraCheck&) = default;
};

struct VerificationRecord {
  TheoremCase theorem = TheoremCase::tc_auto_involution;
  std::string group;
  std::vector<Element> generators;
  std::optional<SigmaInfo> sigma;
  std::optional<std::vector<Element>> subgroup;

  std::vector<Hypothesis> hypotheses;

  int n = 0;
  int d = 0;
  std::optional<int> k;
  std::optional<Rational> h;
  std::optional<Rational> edge_h;
  std::optional<bool> bipartite;

  std::optional<double> lower_bound;
  std::optional<double> upper_bound;
  std::optional<std::string> lower_gap_exact;  // lower + 1, before any root
  std::optional<double> nontrivial_min;
  std::optional<double> nontrivial_max;
  std::optional<double> margin_lower;  // nontrivial_min - lower_bound
  std::optional<double> margin_upper;  // upper_bound - nontrivial_max
  std::vector<ExtraCheck> extra_checks;

  Verdict verdict = Verdict::hypotheses_not_met;
  std::string note;

  bool hypotheses_pass() const {
    for (const auto& h : hypotheses)
      if (!h.passed) return false;
    return true;
  }
  friend bool operator==(const VerificationRecord&,
                         const VerificationRecord&) = default;
};

/// Everything verify needs from a built graph.
struct GraphAnalysis {
  SpectrumResult spectrum;
  CheegerReport cheeger;
  bool bipartite = false;
};

GraphAnalysis analyze_graph(const RegularMultigraph& g,
                            double solver_tol = kDefaultSolverTol,
                            int cheeger_cap = kDefaultCheegerCap);

/// Memo of analyze_graph keyed by the adjacency count matrix.
class AnalysisCache {
 public:
  const GraphAnalysis& get(const RegularMultigraph& g, double solver_tol,
                           int cheeger_cap);
  std::size_t size() const noexcept { return map_.size(); }
  std::uint64_t hits() const noexcept { return hits_; }
  void clear() { map_.clear(); }

 private:
  struct Hash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
  };
  std::unordered_map<std::vector<int>, std::unique_ptr<GraphAnalysis>, Hash> map_;
  std::uint64_t hits_ = 0;
};

struct VerifyOptions {
  double tol = 1e-9;
  double solver_tol = kDefaultSolverTol;
  int cheeger_cap = kDefaultCheegerCap;
  /// Compute spectrum and bounds even when a hypothesis fails.
  bool informational = true;
  AnalysisCache* cache = nullptr;
  /// Precomputed "no_index_two_subgroup_transitive" result for (G, H).
  std::optional<Hypothesis> transitivity;
  /// Test hook applied to the evaluated bounds before comparison.
  std::function<void(BoundValues&)> bound_hook;
};

/// Whether some index-two subgroup of G is transitive on the right cosets of
/// H under tau . Hg = Hg tau^-1.
Hypothesis index_two_transitivity(const FiniteGroup& g, const Subgroup& h);

/// Total: every input yields the full checklist for its case. `sigma` is
/// used by the twisted cases and `h` by the Schreier case.
std::vector<Hypothesis> check_hypotheses(TheoremCase theorem,
                                         const FiniteGroup& g,
                                         const ElementSet& s,
                                         const GroupMap* sigma,
                                         const Subgroup* h,
                                         const VerifyOptions& options = {});

VerificationRecord verify_instance(TheoremCase theorem, const FiniteGroup& g,
                                   const ElementSet& s, const GroupMap* sigma,
                                   const Subgroup* h,
                                   const VerifyOptions& options = {});

struct CheegerBuserCheck {
  bool passed = false;
  bool skipped = false;
  std::string note;
  Rational edge_h;
  double lambda2 = 0;
  double lower = 0;  // edge_h^2 / 2
  double upper = 0;  // 2 edge_h
};

/// edge_h^2/2 <= lambda2 <= 2 edge_h within tol. Skipped for n = 1.
CheegerBuserCheck check_cheeger_buser(const RegularMultigraph& g,
                                      double tol = 1e-8,
                                      int cheeger_cap = kDefaultCheegerCap);

struct PowerLawCheck {
  bool spectrum_passed = false;
  double max_spectrum_error = 0;
  bool cheeger_checked = false;
  bool cheeger_passed = true;
  std::optional<Rational> h;
  std::optional<Rational> h_power;
  std::optional<double> cheeger_lower_bound;
  std::string note;

  bool passed() const { return spectrum_passed && cheeger_passed; }
};

/// (a) spectrum of g^k equals the k-th powers of the spectrum of g;
/// (b) for odd k on connected non-bipartite g,
///     h(g^k) >= 1/2 (1 - (1 - h(g)^2/(2d^2))^k), compared exactly.
PowerLawCheck check_power_laws(const RegularMultigraph& g, int k,
                               double tol = 1e-8,
                               int cheeger_cap = kDefaultCheegerCap,
                               long long degree_cap = kDefaultDegreeCap);

}  // namespace tcg
