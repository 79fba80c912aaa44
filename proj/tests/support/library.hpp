#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "halgeo/finite_algebra.hpp"
#include "halgeo/formula.hpp"
#include "halgeo/term.hpp"

namespace halgeo::testing {

std::filesystem::path data_dir();

/// "s2" -> data/algebras/s2.alg
FiniteAlgebra load(std::string_view name);

/// Stems of every algebra file, sorted.
std::vector<std::string> library_names();
std::vector<FiniteAlgebra> library(std::size_t max_size = 1000);

SortPtr sort_of(std::vector<std::string> vars, std::string name = "X");

Term term(const FiniteAlgebra& h, const SortPtr& sort, std::string_view text);
Formula formula(const FiniteAlgebra& h, const SortPtr& sort, std::string_view text);
Formula formula(const FiniteAlgebra& h, const SortPtr& sort, const SortRegistry& sorts, std::string_view text);

/// Every permutation of H that commutes with every table, in lexicographic order.
std::vector<std::vector<Element>> brute_automorphisms(const FiniteAlgebra& h);

/// Bits of a point set, for spaces of at most 64 points.
std::uint64_t bits(const PointSet& a);

}  // namespace halgeo::testing
