#include <algorithm>
#include <charconv>
#include <map>
#include <string>

#include "tcg/error.hpp"
#include "tcg/group.hpp"

namespace tcg {

namespace {

// Nondecreasing factor lists (each >= 2, at least two factors) with product
// at most max_order.
void cyclic_factorizations(int max_order, int min_factor,
                           std::vector<int>& current,
                           std::vector<std::vector<int>>& out) {
  int product = 1;
  for (int f : current) product *= f;
  if (current.size() >= 2) out.push_back(current);
  for (int f = min_factor; product * f <= max_order; ++f) {
    current.push_back(f);
    cyclic_factorizations(max_order, f, current, out);
    current.pop_back();
  }
}

FiniteGroup product_of_cyclics(const std::vector<int>& factors) {
  FiniteGroup g = make_cyclic(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i)
    g = make_direct_product(g, make_cyclic(factors[i]));
  return g;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorKind::parse, "expected an integer for " + std::string(what) +
                                      ", got '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::vector<FiniteGroup> group_catalog(int max_order,
                                       const CatalogOptions& options) {
  if (max_order > options.cap)
    throw Error(ErrorKind::corpus_cap,
                "catalog max order " + std::to_string(max_order) +
                    " exceeds cap " + std::to_string(options.cap));
  struct Entry {
    int order;
    int family;  // 0 cyclic, 1 dihedral, 2 product, 3 quaternion
    std::vector<int> params;
    FiniteGroup group;
  };
  std::vector<Entry> entries;
  for (int n = 1; n <= max_order; ++n)
    entries.push_back({n, 0, {n}, make_cyclic(n)});
  for (int p = 2; 2 * p <= max_order; ++p)
    entries.push_back({2 * p, 1, {p}, make_dihedral(p)});
  std::vector<std::vector<int>> factorizations;
  std::vector<int> current;
  cyclic_factorizations(max_order, 2, current, factorizations);
  for (const auto& f : factorizations) {
    FiniteGroup g = product_of_cyclics(f);
    entries.push_back({g.order(), 2, f, std::move(g)});
  }
  if (max_order >= 8) entries.push_back({8, 3, {}, make_quaternion()});

  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) {
                     if (a.order != b.order) return a.order < b.order;
                     if (a.family != b.family) return a.family < b.family;
                     return a.params < b.params;
                   });
  // Factor lists are canonical, so no construction is repeated; groups that
  // merely share a fingerprint (Z2xZ3 and Z6, D4 and Z2xZ2) are all kept.
  std::vector<FiniteGroup> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.group));
  return out;
}

FiniteGroup group_from_descriptor(std::string_view d) {
  auto starts = [&](std::string_view prefix) {
    return d.substr(0, prefix.size()) == prefix;
  };
  if (starts("cyclic:")) return make_cyclic(parse_int(d.substr(7), "cyclic order"));
  if (starts("dihedral:")) return make_dihedral(parse_int(d.substr(9), "dihedral p"));
  if (starts("product:")) {
    std::vector<int> factors;
    std::string_view rest = d.substr(8);
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      factors.push_back(parse_int(rest.substr(0, comma), "product factor"));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (factors.empty())
      throw Error(ErrorKind::parse, "product descriptor needs at least one factor");
    return product_of_cyclics(factors);
  }
  if (d == "q8" || d == "Q8") return make_quaternion();
  if (d == "s3" || d == "S3") return make_dihedral(3);
  for (const FiniteGroup& g : group_catalog(kDefaultGroupCap))
    if (g.label() == d) return g;
  throw Error(ErrorKind::parse, "unknown group descriptor '" + std::string(d) +
                                    "' (expected cyclic:N, dihedral:P, "
                                    "product:A,B,..., q8, s3 or a catalog label)");
}

}  // namespace tcg
