#pragma once

#include <span>
#include <string>

#include "halgeo/finite_algebra.hpp"

namespace halgeo {

/// {mul/2, e/0}
SignaturePtr group_signature();

/// Z_n with elements e, g, g2, ..., g{n-1}.
FiniteAlgebra cyclic_group(std::size_t n, const SignaturePtr& sig = group_signature());

/// Componentwise product; element names "a.b".
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b, std::string name = {});

/// The isomorphic copy obtained by moving element i to position perm[i].
FiniteAlgebra relabel(const FiniteAlgebra& h, std::span<const Element> perm, std::string name = {});

}  // namespace halgeo
