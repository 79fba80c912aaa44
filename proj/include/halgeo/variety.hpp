#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "halgeo/term.hpp"

namespace halgeo {

/// Signature of a variety plus an optional list of defining identities,
/// each a pair of terms over `identity_sort`.
struct VarietySpec {
  SignaturePtr signature;
  SortPtr identity_sort;  // null when there are no identities
  std::vector<std::pair<Term, Term>> identities;
};

/// Text form:
///   op <name> <arity>
///   vars <v1> <v2> ...
///   identity <term> == <term>
/// '#' starts a comment. `vars` must precede the first identity.
VarietySpec parse_variety(std::string_view text);

}  // namespace halgeo
