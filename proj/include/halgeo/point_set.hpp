#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "halgeo/finite_algebra.hpp"
#include "halgeo/kernels.hpp"
#include "halgeo/substitution.hpp"

namespace halgeo {

/// An element of Hal^X(H): a subset of Hom(W(X), H) stored as a bit-vector
/// indexed by PointIndex. Bits past the end of the space are always zero.
class PointSet {
 public:
  static PointSet bottom(const FiniteAlgebra& h, const SortPtr& sort);
  static PointSet top(const FiniteAlgebra& h, const SortPtr& sort);
  static PointSet from_indices(const FiniteAlgebra& h, const SortPtr& sort, std::span<const PointIndex> indices);
  static PointSet from_mask(const FiniteAlgebra& h, const SortPtr& sort, kernels::Mask mask);

  const FiniteAlgebra& algebra() const { return algebra_; }
  const SortPtr& sort() const { return sort_; }
  std::uint64_t space() const { return space_; }
  const kernels::Mask& mask() const { return mask_; }

  bool contains(PointIndex i) const { return i < space_ && kernels::test_bit(mask_, i); }
  bool contains(const Point& mu) const;
  std::size_t count() const;
  bool empty() const;
  bool is_top() const;
  std::vector<PointIndex> indices() const;
  std::vector<Point> points() const;

  bool subset_of(const PointSet& other) const;

  /// Hexadecimal value of the bit-vector read as a number, bit 0 = point 0,
  /// most significant digit first, no leading zeros ("0" when empty).
  std::string hex() const;

  /// One point per line in index order, then the mask.
  std::string to_string() const;

  friend bool operator==(const PointSet& a, const PointSet& b);

 private:
  PointSet(FiniteAlgebra h, SortPtr sort, std::uint64_t space, kernels::Mask mask)
      : algebra_(std::move(h)), sort_(std::move(sort)), space_(space), mask_(std::move(mask)) {}

  friend PointSet set_union(const PointSet&, const PointSet&);
  friend PointSet set_intersection(const PointSet&, const PointSet&);
  friend PointSet complement(const PointSet&);

  FiniteAlgebra algebra_;
  SortPtr sort_;
  std::uint64_t space_;
  kernels::Mask mask_;
};

/// Throws SortError / SignatureError unless a and b live in the same Hal^X(H).
void require_compatible(const PointSet& a, const PointSet& b);

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet complement(const PointSet& a);

/// [w == w2]_H: the points at which both terms take the same value.
PointSet equality_set(const FiniteAlgebra& h, const SortPtr& sort, const Term& w, const Term& w2);

/// The cylinder of A along x.
PointSet exists_x(const PointSet& a, std::string_view x);
PointSet exists_x(const PointSet& a, int var);

/// s_* A over the codomain of s: mu is in it iff mu o s is in A.
PointSet transport(const Substitution& s, const PointSet& a);

/// Image of A under the point action of an automorphism.
PointSet act(const std::vector<Element>& sigma, const PointSet& a);

}  // namespace halgeo
