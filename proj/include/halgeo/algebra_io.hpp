#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "halgeo/finite_algebra.hpp"
#include "halgeo/variety.hpp"

namespace halgeo {

/// Line-oriented algebra format:
///   algebra <name>
///   elements <e0> <e1> ...
///   op <opname> <arity>
///   table <opname>
///   <arg1> ... <argk> <result>      (|H|^k rows, any order)
/// '#' starts a comment. The signature is the `op` lines in file order.
FiniteAlgebra parse_algebra(std::string_view text);

/// As above, and the algebra must use `spec`'s signature and satisfy its
/// identities.
FiniteAlgebra parse_algebra(std::string_view text, const VarietySpec& spec);

FiniteAlgebra load_algebra(const std::filesystem::path& path);
VarietySpec load_variety(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

/// Inverse of parse_algebra; rows in argument order.
std::string write_algebra(const FiniteAlgebra& h);

}  // namespace halgeo
