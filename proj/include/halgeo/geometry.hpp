#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "halgeo/finite_algebra.hpp"
#include "halgeo/formula.hpp"
#include "halgeo/point_set.hpp"

namespace halgeo {

using Equation = std::pair<Term, Term>;

struct EquationSystem {
  SortPtr sort;
  std::vector<Equation> equations;
};

struct FormulaSystem {
  SortPtr sort;
  std::vector<Formula> formulas;
};

/// First non-comment line: "sort <name>" (registered) or "sort <name> = v1 v2 ..."
/// (registered on the spot). Then one "term == term" per line. '#' starts a comment.
EquationSystem parse_equation_system(std::string_view text, SortRegistry& sorts, const SignaturePtr& sig);
/// Same header, then one formula per line.
FormulaSystem parse_formula_system(std::string_view text, SortRegistry& sorts, const SignaturePtr& sig);

/// T'_H: points whose kernel contains every pair. Empty T gives the whole space.
PointSet solve_equations(const FiniteAlgebra& h, const EquationSystem& t);

enum class EmptyClosure { Full, Strict };

struct ClosureAnswer {
  bool contains = false;
  bool empty_set = false;  // decided by the convention for the empty point set
};

/// (w, w2) in T''_H, through the presentation of A' for A = T'_H. For empty A
/// the closure is the full congruence (Full) or a DomainError (Strict).
ClosureAnswer algebraic_closure_contains(const FiniteAlgebra& h, const EquationSystem& t, const Term& w, const Term& w2,
                                         EmptyClosure mode = EmptyClosure::Full);

/// T^L_H: intersection of val over T; the whole space for empty T.
PointSet logical_solve(const FiniteAlgebra& h, const FormulaSystem& t);

/// f in A^L_H, i.e. A is contained in val(f). empty_set flags the vacuous case.
ClosureAnswer logical_closure_contains(const FiniteAlgebra& h, const PointSet& a, const Formula& f);

/// A^LL_H for finite H: the union of the Aut(H)-orbits meeting A.
PointSet definable_closure(const FiniteAlgebra& h, const PointSet& a);

/// Sort of n variables named x, y, z (or x1 .. xn beyond three), called "X<n>".
SortPtr standard_sort(std::size_t n);

struct AgOptions {
  int depth = 2;         // term depth of premises and conclusion
  int max_vars = 1;      // sorts of 1 .. max_vars variables
  int max_premises = 2;  // equations per system
  std::uint64_t budget = 10'000'000;  // quasiidentity checks
};

struct AgWitness {
  SortPtr sort;
  std::vector<Equation> premises;
  Equation conclusion;
  std::size_t holds_in = 0;  // index (0 or 1) of the algebra satisfying the quasiidentity
};

struct AgResult {
  bool not_equivalent = false;
  std::optional<AgWitness> witness;
  std::uint64_t checks = 0;
  bool budget_exhausted = false;
  AgOptions options;
};

/// Searches for a quasiidentity (T => w == w') with bounded T that holds in
/// one algebra and fails in the other. Terms are taken up to the term
/// functions they induce on both algebras together, so each class of
/// interchangeable terms is tried once, represented by its first term.
/// Never claims more than bounded equivalence.
AgResult ag_equivalent(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const AgOptions& options = {});

/// Does the quasiidentity hold in h?
bool quasiidentity_holds(const FiniteAlgebra& h, const SortPtr& sort, const std::vector<Equation>& premises,
                         const Equation& conclusion);

}  // namespace halgeo
