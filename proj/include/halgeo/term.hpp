#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "halgeo/signature.hpp"
#include "halgeo/sort.hpp"

namespace halgeo {

/// An element of the absolutely free algebra W(X): a tree whose leaves are
/// variables of one sort and whose inner nodes apply operation symbols.
/// Terms are immutable and share structure, so copies are cheap.
class Term {
 public:
  static Term variable(SignaturePtr sig, SortPtr sort, int var);
  static Term variable(SignaturePtr sig, SortPtr sort, std::string_view name);
  static Term apply(SignaturePtr sig, SortPtr sort, int op, const std::vector<Term>& args);

  bool is_variable() const { return node_->op < 0; }
  int var() const { return node_->var; }
  int op() const { return node_->op; }
  std::size_t arity() const { return node_->kids.size(); }
  Term arg(std::size_t i) const;

  const SortPtr& sort() const { return sort_; }
  const SignaturePtr& signature() const { return sig_; }

  /// Leaves (variables and nullary symbols) have depth 0.
  int depth() const { return node_->depth; }
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  /// Sorted indices of the variables occurring in the term.
  std::vector<int> support() const;

  std::string to_string() const;

  /// Structural comparison; sorts must be equal for two terms to be equal.
  friend bool operator==(const Term& a, const Term& b);
  /// Total order used for canonical enumeration: depth, then size, then shape.
  friend bool operator<(const Term& a, const Term& b);

  struct Node {
    int op = -1;
    int var = -1;
    std::vector<std::shared_ptr<const Node>> kids;
    int depth = 0;
    std::size_t size = 1;
    std::size_t hash = 0;
  };
  using NodePtr = std::shared_ptr<const Node>;

  const NodePtr& node() const { return node_; }
  static Term from_node(SignaturePtr sig, SortPtr sort, NodePtr node);

 private:
  Term(SignaturePtr sig, SortPtr sort, NodePtr node)
      : sig_(std::move(sig)), sort_(std::move(sort)), node_(std::move(node)) {}

  SignaturePtr sig_;
  SortPtr sort_;
  NodePtr node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// term := var | opname "(" term ("," term)* ")" | opname "()" | opname
Term parse_term(std::string_view text, const SortPtr& sort, const SignaturePtr& sig);

/// All terms over the sort of depth at most `max_depth`, in canonical order
/// (by depth, then by the order of construction). Grows quickly; callers
/// bound it with `limit` (throws CapExceeded beyond it).
std::vector<Term> enumerate_terms(const SignaturePtr& sig, const SortPtr& sort, int max_depth,
                                  std::size_t limit = 1u << 20);

}  // namespace halgeo
