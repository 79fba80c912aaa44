#pragma once

#include <random>
#include <vector>

#include "halgeo/formula.hpp"
#include "halgeo/substitution.hpp"

namespace halgeo::testing {

/// Leaf with probability 2/5 before the depth bound runs out.
Term random_term(std::mt19937_64& rng, const SignaturePtr& sig, const SortPtr& sort, int max_depth);

Substitution random_substitution(std::mt19937_64& rng, const SignaturePtr& sig, const SortPtr& from, const SortPtr& to,
                                 int max_depth);

/// Every formula over `sort` of length <= max_length built from `atoms`
/// with ~, E v for each variable, the given endo-substitutions, & and |.
/// Ordered by length.
std::vector<Formula> generate_formulas(const SortPtr& sort, const std::vector<Formula>& atoms,
                                       const std::vector<Substitution>& subs, int max_length);

/// A few atoms over the sort: (x == y) style variable equations first, then
/// equations of depth-1 terms with variables, then constants.
std::vector<Formula> sample_atoms(const SignaturePtr& sig, const SortPtr& sort, std::size_t count);

}  // namespace halgeo::testing
