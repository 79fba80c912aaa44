#pragma once

#include <optional>
#include <vector>

#include "halgeo/finite_algebra.hpp"

namespace halgeo {

/// A bijection between carriers, as the image of each element index.
using ElementMap = std::vector<Element>;

/// All automorphisms of h in lexicographic order; the identity comes first.
std::vector<ElementMap> automorphism_group(const FiniteAlgebra& h);

/// A table-preserving bijection h1 -> h2, or nullopt when none exists.
std::optional<ElementMap> isomorphism_search(const FiniteAlgebra& h1, const FiniteAlgebra& h2);

bool is_homomorphism(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const ElementMap& map);

/// The action (sigma . mu)(x) = sigma(mu(x)) on point indices.
PointIndex act_on_point(const ElementMap& sigma, std::size_t algebra_size, std::size_t vars, PointIndex index);

}  // namespace halgeo
