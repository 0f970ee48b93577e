#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tcg/group.hpp"

namespace tcg {

inline constexpr const char* kToolkitVersion = "1.0.0";

/// Entry point behind the `tcg` executable. `args` excludes the program
/// name. Returns 0 on success, 2 when a verification finds a violation and
/// 1 on any error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// sigma from its command-line form: identity, neg / inv, mul:K (cyclic
/// groups), aut:I or anti:I (index into the enumerations), perm:a,b,...,
/// or generator images such as "r->r^-1,s->s".
GroupMap parse_sigma(const FiniteGroup& g, std::string_view text);

}  // namespace tcg
