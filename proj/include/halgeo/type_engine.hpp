#pragma once

// Bounded-rank types by back-and-forth refinement.
//
// A point over X is described by its equality pattern (which coordinates
// coincide) and its deduplicated tuple, an injective tuple of elements. Any
// formula about the point can be rewritten, by substitution, into one about
// the deduplicated tuple, so only injective tuples need classes. They form a
// trie: a tuple's children extend it by one element not yet in it. Extending
// by an element already present gives back the same tuple under a different
// pattern, which both sides of a comparison can always match.
//
// Rank 0 classes are quantifier-free types over the atoms between terms of
// depth <= term_depth. They are computed by a label sequence: variables get
// labels 0..m-1, nullary symbols follow, then each round applies every
// operation to every tuple of values found so far and records the label of
// the result (a fresh one when the value is new). Two tuples satisfy the same
// atoms exactly when their label sequences agree.
//
// Rank r+1 class = (rank r class, set of rank r classes of children).

#include <cstdint>
#include <span>
#include <vector>

#include "halgeo/finite_algebra.hpp"
#include "halgeo/formula.hpp"

namespace halgeo {

class TypeEngine {
 public:
  using NodeId = std::uint32_t;
  using ClassId = std::uint32_t;

  /// Several algebras of one signature share class ids, which is what makes
  /// cross-structure comparison possible.
  explicit TypeEngine(std::vector<FiniteAlgebra> algebras, int term_depth = 2);

  std::size_t algebra_count() const { return algebras_.size(); }
  const FiniteAlgebra& algebra(std::size_t i) const { return algebras_.at(i); }
  int term_depth() const { return term_depth_; }
  std::size_t node_count() const { return nodes_.size(); }

  /// Computes ranks up to `rank`, or fewer if the partition stops changing
  /// first. Returns the rank whose classes answer queries at `rank`.
  int effective_rank(int rank);
  /// Rank from which the partition no longer changes (refines until found).
  int stable_rank();

  NodeId node(std::size_t algebra, std::span<const Element> injective) const;
  ClassId node_class(NodeId n, int rank);

  struct PointType {
    std::vector<std::uint32_t> pattern;  // pattern[i] = first coordinate equal to coordinate i
    ClassId cls = 0;
    auto operator<=>(const PointType&) const = default;
  };
  PointType point_type(std::size_t algebra, std::span<const Element> values, int rank);

  /// A formula over `sort` true at mu (a point of algebra a) and false at nu
  /// (a point of algebra b). Requires the two to differ at `rank`.
  /// Quantified helper variables live in extension sorts "<X>_1", "<X>_2", ...
  /// which are appended to `extra_sorts` (may be null).
  Formula distinguishing_formula(const SortPtr& sort, std::size_t a, std::span<const Element> mu, std::size_t b,
                                 std::span<const Element> nu, int rank, std::vector<SortPtr>* extra_sorts = nullptr);

  /// A sentence over `sort` (all variables quantified) that holds in algebra
  /// a and fails in algebra b: "some point has the type of mu". Requires no
  /// point of b to share mu's type at `rank`.
  Formula separating_sentence(const SortPtr& sort, std::size_t a, std::span<const Element> mu, std::size_t b, int rank,
                              std::vector<SortPtr>* extra_sorts = nullptr);

 private:
  struct Node {
    std::uint32_t algebra;
    std::vector<Element> tuple;
    std::vector<std::int64_t> child;  // per element; -1 when the element is in the tuple
  };
  struct Emission {
    int op;
    std::vector<std::uint32_t> args;  // labels
  };
  struct Builder;

  std::vector<std::uint32_t> label_sequence(const Node& n, std::vector<Emission>* trace) const;
  void refine_once();

  std::vector<FiniteAlgebra> algebras_;
  int term_depth_;
  std::vector<Node> nodes_;
  std::vector<NodeId> roots_;
  std::vector<std::vector<ClassId>> classes_;  // classes_[r][node]
  std::vector<std::size_t> class_counts_;
  bool stable_ = false;
};

}  // namespace halgeo
