#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "halgeo/term.hpp"

namespace halgeo {

/// A homomorphism s: W(X) -> W(Y), given by the image of every variable of X.
class Substitution {
 public:
  Substitution(SortPtr domain, SortPtr codomain, std::vector<Term> images);

  static Substitution identity(const SignaturePtr& sig, const SortPtr& sort);

  const SortPtr& domain() const { return domain_; }
  const SortPtr& codomain() const { return codomain_; }
  const SignaturePtr& signature() const { return images_.front().signature(); }
  const std::vector<Term>& images() const { return images_; }
  const Term& image(int var) const { return images_.at(static_cast<std::size_t>(var)); }

  bool is_identity() const;

  /// "x->meet(x, y), y->y : X -> Y"
  std::string to_string() const;

  friend bool operator==(const Substitution& a, const Substitution& b);

 private:
  SortPtr domain_;
  SortPtr codomain_;
  std::vector<Term> images_;
};

/// s(w): every variable leaf x of w replaced by s(x).
Term apply_substitution(const Substitution& s, const Term& w);

/// The substitution "apply s, then s2": x |-> s2(s(x)).
Substitution compose(const Substitution& s, const Substitution& s2);

/// The endomorphism of `sort` sending x to w and fixing every other variable.
Substitution elementary_substitution(const SortPtr& sort, std::string_view x, const Term& w);

}  // namespace halgeo
