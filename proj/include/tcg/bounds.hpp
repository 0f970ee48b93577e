#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcg/rational.hpp"

namespace tcg {

/// The seven interval statements the harness checks.
enum class TheoremCase {
  tc_auto_involution,   // twisted Cayley, automorphism, sigma^2 = id
  tc_auto_2k,           // twisted Cayley, automorphism, sigma^(2k) = id, k odd
  tcs_auto,             // twisted Cayley sum, automorphism
  tc_anti,              // twisted Cayley, anti-automorphism
  tcs_anti_involution,  // twisted Cayley sum, anti-automorphism, sigma^2 = id
  tcs_anti_2k,          // twisted Cayley sum, anti-automorphism, sigma^(2k) = id, k odd
  schreier,             // Schreier coset graph
};

const char* to_string(TheoremCase c);
TheoremCase theorem_case_from_string(std::string_view s);
const std::vector<TheoremCase>& all_theorem_cases();

bool is_odd_power_case(TheoremCase c);
bool is_involution_case(TheoremCase c);
bool uses_cayley_sum(TheoremCase c);
bool needs_anti_automorphism(TheoremCase c);

/// Smallest odd k with order | 2k, if any (none when 4 divides the order).
std::optional<int> minimal_odd_k(int sigma_order);

/// Interval endpoints for the nontrivial spectrum. `lower_gap` is lower + 1
/// and `upper_gap` is 1 - upper, both evaluated before the final subtraction
/// so that gaps far below machine epsilon survive.
struct BoundValues {
  double lower = -1;
  double upper = 1;
  double lower_gap = 0;
  double upper_gap = 0;
  std::string lower_gap_exact;  // exact rational before any root extraction
  std::string upper_exact;
};

/// upper = 1 - h^2/(2d^2) for every case. lower = -1 + h^4/(2^12 d^8), except
/// the odd-power cases, where lower is the real k-th root of
/// -1 + (1/2 (1 - (1 - h^2/(2d^2))^k))^4 / (2^12 d^(8k)).
/// `k` is ignored outside the odd-power cases and must be odd there.
BoundValues bound_formulas(TheoremCase c, const Rational& h, int d, int k = 1);

/// 1/2 (1 - (1 - h^2/(2d^2))^k), exact, as a decimal.
double power_cheeger_lower_bound(const Rational& h, int d, int k);

/// Exact test of h_power >= 1/2 (1 - (1 - h^2/(2d^2))^k).
bool power_cheeger_bound_holds(const Rational& h_power, const Rational& h,
                               int d, int k);

/// Exact test of h/d <= edge_h <= h.
bool vertex_edge_sandwich_holds(const Rational& h, const Rational& edge_h, int d);

}  // namespace tcg
