#include <algorithm>

#include "halgeo/formula.hpp"

namespace halgeo {

namespace {

Formula negate(const Formula& f) {
  if (f.kind() == FormulaKind::Not) return f.child();
  return Formula::negation(f);
}

// s(x) is a variable y occurring in no other image.
bool commutes_with_exists(const Substitution& s, int x) {
  const auto& img = s.image(x);
  if (!img.is_variable()) return false;
  const int y = img.var();
  for (int u = 0; u < static_cast<int>(s.domain()->size()); ++u) {
    if (u == x) continue;
    auto supp = s.image(u).support();
    if (std::find(supp.begin(), supp.end(), y) != supp.end()) return false;
  }
  return true;
}

// s_* f with f already normal.
Formula push(const Substitution& s, const Formula& f) {
  if (s.is_identity() && same_sort(s.domain(), s.codomain())) return f;
  switch (f.kind()) {
    case FormulaKind::Equality:
      return Formula::equality(apply_substitution(s, f.lhs()), apply_substitution(s, f.rhs()));
    case FormulaKind::Not: return negate(push(s, f.child()));
    case FormulaKind::And: return Formula::conjunction(push(s, f.child(0)), push(s, f.child(1)));
    case FormulaKind::Or: return Formula::disjunction(push(s, f.child(0)), push(s, f.child(1)));
    case FormulaKind::Exists:
      if (commutes_with_exists(s, f.var())) return Formula::exists(s.image(f.var()).var(), push(s, f.child()));
      return Formula::substitute(s, f);
    case FormulaKind::Subst: return push(compose(f.substitution(), s), f.child());
  }
  return Formula::substitute(s, f);
}

}  // namespace

Formula normalize(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Equality: return f;
    case FormulaKind::Not: return negate(normalize(f.child()));
    case FormulaKind::And: return Formula::conjunction(normalize(f.child(0)), normalize(f.child(1)));
    case FormulaKind::Or: return Formula::disjunction(normalize(f.child(0)), normalize(f.child(1)));
    case FormulaKind::Exists: return Formula::exists(f.var(), normalize(f.child()));
    case FormulaKind::Subst: return push(f.substitution(), normalize(f.child()));
  }
  return f;
}

}  // namespace halgeo
