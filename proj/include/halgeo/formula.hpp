#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "halgeo/finite_algebra.hpp"
#include "halgeo/point_set.hpp"
#include "halgeo/sort.hpp"
#include "halgeo/substitution.hpp"
#include "halgeo/term.hpp"

namespace halgeo {

enum class FormulaKind { Equality, Not, And, Or, Exists, Subst };

/// A node of the sorted formula language: equalities of terms closed under
/// ~, &, |, E x and substitution nodes s_* for s: W(X) -> W(Y).
/// Immutable; copies share structure.
class Formula {
 public:
  static Formula equality(const Term& w, const Term& w2);
  static Formula negation(const Formula& f);
  static Formula conjunction(const Formula& f, const Formula& g);
  static Formula disjunction(const Formula& f, const Formula& g);
  static Formula exists(int var, const Formula& f);
  static Formula exists(std::string_view var, const Formula& f);
  static Formula substitute(const Substitution& s, const Formula& f);

  FormulaKind kind() const { return node_->kind; }
  const SortPtr& sort() const { return node_->sort; }
  const SignaturePtr& signature() const { return node_->sig; }
  /// Equalities have length 0; ~, E and s_* add one; & and | give n1+n2+1.
  int length() const { return node_->length; }

  const Term& lhs() const { return node_->terms.at(0); }
  const Term& rhs() const { return node_->terms.at(1); }
  const Formula& child(std::size_t i = 0) const { return node_->kids.at(i); }
  int var() const { return node_->var; }
  const Substitution& substitution() const { return *node_->subst; }
  std::size_t hash() const { return node_->hash; }

  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    FormulaKind kind;
    SortPtr sort;
    SignaturePtr sig;
    int length = 0;
    int var = -1;
    std::vector<Term> terms;
    std::vector<Formula> kids;
    std::shared_ptr<const Substitution> subst;
    std::size_t hash = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// formula := "(" term "==" term ")" | "~" formula | "(" formula "&" formula ")"
///          | "(" formula "|" formula ")" | "E" var "." formula
///          | "[" var "->" term ("," var "->" term)* ":" Sort "->" Sort "]" formula
/// `sort` is the sort of the whole formula; substitution nodes name
/// registered sorts and the annotated codomain must match the context.
Formula parse_formula(std::string_view text, const SortPtr& sort, const SortRegistry& sorts, const SignaturePtr& sig);

/// Val_H(f): structural recursion into Hal^X(H).
PointSet val(const FiniteAlgebra& h, const Formula& f);

/// f in LKer(mu).
bool lker_contains(const FiniteAlgebra& h, const Point& mu, const Formula& f);

/// f in Th^X(H): val(H, f) is the whole space.
bool theory_contains(const FiniteAlgebra& h, const Formula& f);

/// val agrees on every witness algebra.
bool semantically_equal(const Formula& f, const Formula& g, std::span<const FiniteAlgebra> witnesses);

/// Rewrites with the oriented substitution identities until no rule applies:
/// substitution nodes are pushed through connectives, into equalities and
/// (under the side condition of 3b) through quantifiers; nested substitutions
/// are composed; identities and double negations disappear.
Formula normalize(const Formula& f);

}  // namespace halgeo
