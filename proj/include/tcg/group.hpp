#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tcg {

using Element = std::int32_t;

/// Default cap on group order for the catalog and automorphism enumeration.
inline constexpr int kDefaultGroupCap = 20;

/// Raw, unvalidated multiplication table. `products[a * order + b]` is the
/// index of a*b. This is what the parsers produce and what validate_group
/// inspects; FiniteGroup is only ever built from a table that passed.
struct GroupTable {
  int order = 0;
  std::vector<Element> products;
  std::string label;

  Element at(Element a, Element b) const {
    return products[static_cast<std::size_t>(a) * order + b];
  }
  friend bool operator==(const GroupTable&, const GroupTable&) = default;
};

struct AxiomCheck {
  std::string axiom;  // latin_square, identity, inverses, associativity
  bool passed = true;
  std::vector<Element> witness;  // first offending row/column or triple
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const AxiomCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

/// Exhaustive check of every group axiom; failures are data, never thrown.
ValidationReport validate_group(const GroupTable& table);

class FiniteGroup {
 public:
  /// Validates `table` and throws Error(validation) naming the first failed
  /// axiom and its witness.
  static FiniteGroup from_table(GroupTable table);

  int order() const noexcept { return table_.order; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const noexcept { return table_.at(a, b); }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  const std::string& label() const noexcept { return table_.label; }
  const GroupTable& table() const noexcept { return table_; }
  std::span<const Element> inverses() const noexcept { return inverse_; }

  int element_order(Element a) const noexcept { return element_orders_[a]; }
  bool is_abelian() const noexcept { return abelian_; }

  /// Sorted multiset of element orders together with |G|; an isomorphism
  /// invariant (necessary, not sufficient).
  std::vector<int> fingerprint() const;

  /// Single-letter generator names usable in element words ("r", "s", ...).
  const std::vector<std::pair<char, Element>>& names() const noexcept {
    return names_;
  }
  FiniteGroup with_label(std::string label) const;
  FiniteGroup with_names(std::vector<std::pair<char, Element>> names) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

 private:
  explicit FiniteGroup(GroupTable table);

  GroupTable table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<int> element_orders_;
  bool abelian_ = true;
  std::vector<std::pair<char, Element>> names_;
};

/// Sorted, duplicate-free list of element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Element> members);

  static ElementSet from_mask(std::uint64_t mask);

  std::span<const Element> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Element e) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<Element> members_;
};

// ---------------------------------------------------------------------------
// Constructors

FiniteGroup make_cyclic(int n);
/// D_2p of order 2p: indices 0..p-1 are r^k, indices p..2p-1 are r^k s.
FiniteGroup make_dihedral(int p);
/// Indices (a, b) -> a * |G2| + b.
FiniteGroup make_direct_product(const FiniteGroup& g1, const FiniteGroup& g2);
/// Q8 with indices 1,-1,i,-i,j,-j,k,-k in that order.
FiniteGroup make_quaternion();

struct CatalogOptions {
  int cap = kDefaultGroupCap;
};

/// Built-in corpus in a fixed order: cyclic, dihedral, products of cyclic
/// groups (nondecreasing factors >= 2), then Q8. S3 is the D6 entry.
std::vector<FiniteGroup> group_catalog(int max_order,
                                       const CatalogOptions& options = {});

/// Resolves a textual group descriptor: cyclic:N, dihedral:P,
/// product:A,B,..., q8, s3, or a label from the catalog.
FiniteGroup group_from_descriptor(std::string_view descriptor);

// ---------------------------------------------------------------------------
// Maps

enum class MapKind { automorphism, anti_automorphism };

const char* to_string(MapKind kind);

class GroupMap {
 public:
  GroupMap(std::vector<Element> perm, MapKind kind, int order)
      : perm_(std::move(perm)), kind_(kind), order_(order) {}

  Element operator()(Element a) const noexcept { return perm_[a]; }
  std::span<const Element> perm() const noexcept { return perm_; }
  MapKind kind() const noexcept { return kind_; }
  int order() const noexcept { return order_; }
  bool is_identity() const noexcept { return order_ == 1; }

  /// Perm of this map applied m times (m >= 0).
  std::vector<Element> power(int m) const;

  friend bool operator==(const GroupMap&, const GroupMap&) = default;

 private:
  std::vector<Element> perm_;
  MapKind kind_;
  int order_;
};

enum class MapRejection { not_a_bijection, not_a_morphism, wrong_length };

const char* to_string(MapRejection r);

struct RejectedMap {
  MapRejection reason;
  std::string detail;
};

using MapClassification = std::variant<GroupMap, RejectedMap>;

/// Tests bijectivity and both homomorphism laws exhaustively. A map obeying
/// both laws (only possible for abelian G) is tagged automorphism.
MapClassification classify_map(const FiniteGroup& g,
                               std::span<const Element> perm);

/// classify_map that throws Error(invalid_map) on rejection.
GroupMap require_map(const FiniteGroup& g, std::span<const Element> perm);

bool satisfies_automorphism_law(const FiniteGroup& g,
                                std::span<const Element> perm);
bool satisfies_anti_automorphism_law(const FiniteGroup& g,
                                     std::span<const Element> perm);

/// Smallest m >= 1 with perm^m = id.
int permutation_order(std::span<const Element> perm);

/// All automorphisms, sorted lexicographically by perm. Throws
/// Error(corpus_cap) when |G| exceeds `cap`.
std::vector<GroupMap> enumerate_automorphisms(const FiniteGroup& g,
                                              int cap = kDefaultGroupCap);

/// All anti-automorphisms (inversion composed with each automorphism),
/// sorted by perm.
std::vector<GroupMap> enumerate_anti_automorphisms(const FiniteGroup& g,
                                                   int cap = kDefaultGroupCap);

GroupMap inversion_map(const FiniteGroup& g);
GroupMap identity_map(const FiniteGroup& g);

/// Greedy generating set: repeatedly adds the highest-order element outside
/// the current closure (ties to the smallest index).
std::vector<Element> greedy_generators(const FiniteGroup& g);

// ---------------------------------------------------------------------------
// Subgroups and cosets

struct Subgroup {
  std::vector<Element> members;  // sorted
  int index = 1;

  bool contains(Element e) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Element> seed);
inline Subgroup subgroup_closure(const FiniteGroup& g, const ElementSet& seed) {
  return subgroup_closure(g, seed.members());
}

/// Throws Error(validation) if `members` is not a subgroup.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> members);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

Subgroup commutator_subgroup(const FiniteGroup& g);

/// Every subgroup of index exactly 2, as kernels of surjections onto {+-1},
/// sorted by member list.
std::vector<Subgroup> index_two_subgroups(const FiniteGroup& g);

struct CosetTable {
  std::vector<std::vector<Element>> cosets;  // coset id -> sorted members
  std::vector<Element> representatives;      // smallest member per coset
  std::vector<int> coset_of;                 // element -> coset id

  int count() const noexcept { return static_cast<int>(cosets.size()); }
};

/// Right cosets Hg, numbered in increasing order of their smallest member.
CosetTable right_cosets(const FiniteGroup& g, const Subgroup& h);

/// Distinct subgroups generated by singleton and pair seeds, sorted.
std::vector<Subgroup> small_seed_subgroups(const FiniteGroup& g);

// ---------------------------------------------------------------------------
// Element words

/// Parses an element: a decimal index, or a word in the group's named
/// generators such as "r^2s", "r^-1", "e".
Element parse_element(const FiniteGroup& g, std::string_view text);

/// Comma-separated list of elements.
ElementSet parse_element_set(const FiniteGroup& g, std::string_view text);

}  // namespace tcg
