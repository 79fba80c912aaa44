#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "halgeo/finite_algebra.hpp"
#include "halgeo/formula.hpp"
#include "halgeo/geometry.hpp"

namespace halgeo {

/// A partition of Hom(W(X), H); every point maps to the least index of its class.
struct Partition {
  FiniteAlgebra algebra;
  SortPtr sort;
  int rank = -1;  // -1 for orbit partitions
  std::vector<PointIndex> class_of;

  std::size_t class_count() const;
  /// Classes in id order, members in index order.
  std::vector<std::vector<PointIndex>> classes() const;
  /// Every class of *this lies inside a class of coarser.
  bool refines(const Partition& coarser) const;
  friend bool operator==(const Partition& a, const Partition& b) { return a.class_of == b.class_of; }
};

Partition orbit_partition(const FiniteAlgebra& h, const SortPtr& sort);

/// Rank-k types with atoms between terms of depth <= term_depth. When the
/// refinement stabilises below k the stable partition is returned, with
/// `rank` still recording k.
Partition type_partition(const FiniteAlgebra& h, const SortPtr& sort, int rank, int term_depth = 2);

bool same_type_cross(const FiniteAlgebra& h1, const Point& mu, const FiniteAlgebra& h2, const Point& nu, int rank,
                     int term_depth = 2);

struct IsotypyOptions {
  int max_vars = 2;
  std::optional<int> rank;  // default |H1| + |H2| + max_vars
  int term_depth = 2;
  bool sentence = true;  // build a separating sentence for the witness
};

struct IsotypyWitness {
  std::size_t side = 0;  // algebra holding the unmatched point
  Point point;
  int separating_rank = 0;
  std::optional<Formula> sentence;  // holds in algebra `side`, fails in the other
  std::vector<SortPtr> sorts;       // sorts the sentence mentions
};

struct IsotypyResult {
  bool isotypic = false;
  int max_vars = 0;
  int rank = 0;
  int term_depth = 0;
  std::optional<IsotypyWitness> witness;
};

/// For each sort of 1 .. max_vars variables, every point of either algebra
/// must share its bounded type with some point of the other.
IsotypyResult isotypic_check(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const IsotypyOptions& options = {});

/// LG-equivalence is isotypy; this runs the same check.
IsotypyResult lg_equivalent(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const IsotypyOptions& options = {});

struct HomogeneityResult {
  bool homogeneous = false;
  int max_vars = 0;
  int rank = -1;  // -1 for the algebraic check
  std::optional<std::pair<Point, Point>> counterexample;
};

/// Type-equal points lie in one Aut(H)-orbit, for sorts of 1 .. max_vars
/// variables. Rank defaults to |H| + |X| per sort.
HomogeneityResult homogeneity_check(const FiniteAlgebra& h, int max_vars, std::optional<int> rank = std::nullopt,
                                    int term_depth = 2);

/// Points with equal kernels lie in one Aut(H)-orbit.
HomogeneityResult algebraic_homogeneity_check(const FiniteAlgebra& h, int max_vars);

/// Drops duplicates, then drops formulas left to right whenever the solution
/// set stays the same.
FormulaSystem noetherian_reduce(const FiniteAlgebra& h, const FormulaSystem& t);

}  // namespace halgeo
