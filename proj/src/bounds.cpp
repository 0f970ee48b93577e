#include "tcg/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "tcg/error.hpp"

namespace tcg {

using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace {

BigRational big(const Rational& r) { return BigRational(BigInt(r.num()), BigInt(r.den())); }

BigRational ipow(BigRational base, int e) {
  BigRational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

std::string str(const BigRational& r) {
  return boost::multiprecision::numerator(r).str() +
         (boost::multiprecision::denominator(r) == 1
              ? std::string{}
              : "/" + boost::multiprecision::denominator(r).str());
}

double to_double(const BigRational& r) { return r.convert_to<double>(); }

// 1 - h^2/(2d^2)
BigRational upper_exact(const Rational& h, int d) {
  const BigRational hh = big(h);
  return 1 - hh * hh / (2 * BigRational(d) * d);
}

}  // namespace

const char* to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::tc_auto_involution: return "tc-auto-involution";
    case TheoremCase::tc_auto_2k: return "tc-auto-2k";
    case TheoremCase::tcs_auto: return "tcs-auto";
    case TheoremCase::tc_anti: return "tc-anti";
    case TheoremCase::tcs_anti_involution: return "tcs-anti-involution";
    case TheoremCase::tcs_anti_2k: return "tcs-anti-2k";
    case TheoremCase::schreier: return "schreier";
  }
  return "unknown";
}

const std::vector<TheoremCase>& all_theorem_cases() {
  static const std::vector<TheoremCase> cases = {
      TheoremCase::tc_auto_involution, TheoremCase::tc_auto_2k,
      TheoremCase::tcs_auto,           TheoremCase::tc_anti,
      TheoremCase::tcs_anti_involution, TheoremCase::tcs_anti_2k,
      TheoremCase::schreier};
  return cases;
}

TheoremCase theorem_case_from_string(std::string_view s) {
  for (TheoremCase c : all_theorem_cases())
    if (s == to_string(c)) return c;
  throw Error(ErrorKind::usage, "unknown theorem case '" + std::string(s) + "'");
}

bool is_odd_power_case(TheoremCase c) {
  return c == TheoremCase::tc_auto_2k || c == TheoremCase::tcs_anti_2k;
}

bool is_involution_case(TheoremCase c) {
  return c == TheoremCase::tc_auto_involution ||
         c == TheoremCase::tcs_anti_involution;
}

bool uses_cayley_sum(TheoremCase c) {
  return c == TheoremCase::tcs_auto || c == TheoremCase::tcs_anti_involution ||
         c == TheoremCase::tcs_anti_2k;
}

bool needs_anti_automorphism(TheoremCase c) {
  return c == TheoremCase::tc_anti || c == TheoremCase::tcs_anti_involution ||
         c == TheoremCase::tcs_anti_2k;
}

std::optional<int> minimal_odd_k(int sigma_order) {
  if (sigma_order < 1 || sigma_order % 4 == 0) return std::nullopt;
  if (sigma_order <= 2) return 1;
  if (sigma_order % 2 == 1) return sigma_order;
  return sigma_order / 2;
}

BoundValues bound_formulas(TheoremCase c, const Rational& h, int d, int k) {
  if (h < Rational(0)) throw Error(ErrorKind::precondition, "h must be >= 0");
  if (d < 1) throw Error(ErrorKind::precondition, "d must be >= 1");

  BoundValues out;
  const BigRational up = upper_exact(h, d);
  out.upper_exact = str(up);
  out.upper_gap = to_double(1 - up);
  out.upper = 1.0 - out.upper_gap;

  const BigRational hh = big(h);
  if (!is_odd_power_case(c)) {
    const BigRational gap = ipow(hh, 4) / (BigRational(4096) * ipow(BigRational(d), 8));
    out.lower_gap_exact = str(gap);
    out.lower_gap = to_double(gap);
    out.lower = -1.0 + out.lower_gap;
    return out;
  }

  if (k < 1 || k % 2 == 0)
    throw Error(ErrorKind::precondition,
                "odd-power case needs an odd k >= 1, got " + std::to_string(k));
  const BigRational inner = (1 - ipow(up, k)) / 2;
  const BigRational x = ipow(inner, 4) / (BigRational(4096) * ipow(BigRational(d), 8 * k));
  out.lower_gap_exact = str(x);
  // lower = real k-th root of (-1 + x) = -(1 - x)^(1/k); its gap above -1 is
  // 1 - (1 - x)^(1/k), computed without cancellation.
  const double xd = to_double(x);
  out.lower_gap = -std::expm1(std::log1p(-xd) / k);
  out.lower = -1.0 + out.lower_gap;
  return out;
}

double power_cheeger_lower_bound(const Rational& h, int d, int k) {
  return to_double((1 - ipow(upper_exact(h, d), k)) / 2);
}

bool power_cheeger_bound_holds(const Rational& h_power, const Rational& h,
                               int d, int k) {
  return big(h_power) >= (1 - ipow(upper_exact(h, d), k)) / 2;
}

bool vertex_edge_sandwich_holds(const Rational& h, const Rational& edge_h, int d) {
  return h / Rational(d) <= edge_h && edge_h <= h;
}

}  // namespace tcg
