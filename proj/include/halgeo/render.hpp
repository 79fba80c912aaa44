#pragma once

// Report rendering. Text is for people; machine output is key=value lines
// in a fixed key order.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "halgeo/geometry.hpp"
#include "halgeo/halmos_axioms.hpp"
#include "halgeo/morphisms.hpp"
#include "halgeo/point_set.hpp"
#include "halgeo/types.hpp"

namespace halgeo {

enum class Format { Text, Machine };

std::string render_point_set(const PointSet& a, Format f);
std::string render_partition(const Partition& p, Format f);
std::string render_bool(std::string_view key, bool value, Format f);
std::string render_axioms(const AxiomReport& r, Format f);
std::string render_ag(const AgResult& r, const FiniteAlgebra& h1, const FiniteAlgebra& h2, Format f);
/// "ISOTYPIC" / "NOT ISOTYPIC" with the unmatched point as the witness.
std::string render_isotypy(const IsotypyResult& r, const FiniteAlgebra& h1, const FiniteAlgebra& h2, Format f);
/// "EQUIVALENT" / "NOT-EQUIVALENT" with the separating sentence as the witness.
std::string render_lg(const IsotypyResult& r, const FiniteAlgebra& h1, const FiniteAlgebra& h2, Format f);
/// `word` is "HOMOGENEOUS" or "ALGEBRAICALLY-HOMOGENEOUS".
std::string render_homogeneity(const HomogeneityResult& r, const FiniteAlgebra& h, std::string_view word, Format f);
std::string render_automorphisms(const FiniteAlgebra& h, const std::vector<ElementMap>& group, Format f);
std::string render_isomorphism(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const std::optional<ElementMap>& map,
                               Format f);
std::string render_system(const FormulaSystem& t, std::size_t original_size, Format f);

/// "x=g, y=e"
std::string point_assignment(const FiniteAlgebra& h, const Point& mu);

}  // namespace halgeo
