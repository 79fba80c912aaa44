#include "halgeo/error.hpp"
#include "halgeo/formula.hpp"

namespace halgeo {

PointSet val(const FiniteAlgebra& h, const Formula& f) {
  if (!same_signature(h.signature(), f.signature()))
    throw SignatureError("formula over a signature different from algebra " + h.name());
  switch (f.kind()) {
    case FormulaKind::Equality: return equality_set(h, f.sort(), f.lhs(), f.rhs());
    case FormulaKind::Not: return complement(val(h, f.child()));
    case FormulaKind::And: return set_intersection(val(h, f.child(0)), val(h, f.child(1)));
    case FormulaKind::Or: return set_union(val(h, f.child(0)), val(h, f.child(1)));
    case FormulaKind::Exists: return exists_x(val(h, f.child()), f.var());
    case FormulaKind::Subst: return transport(f.substitution(), val(h, f.child()));
  }
  throw Error("unknown formula node");
}

bool lker_contains(const FiniteAlgebra& h, const Point& mu, const Formula& f) {
  if (!same_sort(mu.sort, f.sort()))
    throw SortError("point of sort " + mu.sort->name() + " against a formula of sort " + f.sort()->name());
  return val(h, f).contains(point_index(h, mu));
}

bool theory_contains(const FiniteAlgebra& h, const Formula& f) { return val(h, f).is_top(); }

bool semantically_equal(const Formula& f, const Formula& g, std::span<const FiniteAlgebra> witnesses) {
  if (!same_sort(f.sort(), g.sort())) throw SortError("comparing formulas of different sorts");
  for (const auto& h : witnesses)
    if (!(val(h, f) == val(h, g))) return false;
  return true;
}

}  // namespace halgeo
