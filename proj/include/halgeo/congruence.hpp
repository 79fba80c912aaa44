#pragma once

#include <span>
#include <string>
#include <vector>

#include "halgeo/finite_algebra.hpp"

namespace halgeo {

/// Finite presentation of the H-closed congruence A' = intersection of
/// Ker(mu) over mu in A: the subalgebra of H^|A| generated by the tuples
/// (mu(x))_{mu in A}, one per variable x. A pair of terms lies in A' iff
/// the two terms evaluate to the same tuple.
class QuotientPresentation {
 public:
  const SortPtr& sort() const { return sort_; }
  const std::vector<Point>& witnesses() const { return witnesses_; }

  /// The generated subalgebra; its elements are named by their tuples.
  const FiniteAlgebra& image() const { return image_; }
  std::size_t size() const { return image_.size(); }
  /// Image element of each variable of the sort.
  const std::vector<Element>& generators() const { return generators_; }
  /// Coordinates of an image element, one per witness point.
  const std::vector<Element>& tuple(Element e) const { return tuples_.at(e); }

  Element evaluate(const Term& w) const;
  bool contains(const Term& w, const Term& w2) const;

 private:
  friend QuotientPresentation present_closed_congruence(const FiniteAlgebra&, const SortPtr&, std::span<const Point>);
  QuotientPresentation(SortPtr sort, std::vector<Point> witnesses, FiniteAlgebra image,
                       std::vector<Element> generators, std::vector<std::vector<Element>> tuples)
      : sort_(std::move(sort)),
        witnesses_(std::move(witnesses)),
        image_(std::move(image)),
        generators_(std::move(generators)),
        tuples_(std::move(tuples)) {}

  SortPtr sort_;
  std::vector<Point> witnesses_;
  FiniteAlgebra image_;
  std::vector<Element> generators_;
  std::vector<std::vector<Element>> tuples_;
};

/// Throws DomainError on an empty witness list.
QuotientPresentation present_closed_congruence(const FiniteAlgebra& h, const SortPtr& sort,
                                               std::span<const Point> witnesses);

/// Size of the presentation without materialising the tables.
std::size_t presentation_size(const FiniteAlgebra& h, const SortPtr& sort, std::span<const Point> witnesses);

/// Cong(A) is contained in Cong(B). Decided by |<A u B>| == |<A>|: the
/// projection of the presentation of A u B onto the A coordinates is onto,
/// and injective exactly when every pair identified by A is identified by B.
bool congruence_includes(const FiniteAlgebra& h, const SortPtr& sort, std::span<const Point> a,
                         std::span<const Point> b);
bool congruence_equal(const FiniteAlgebra& h, const SortPtr& sort, std::span<const Point> a,
                      std::span<const Point> b);

}  // namespace halgeo
