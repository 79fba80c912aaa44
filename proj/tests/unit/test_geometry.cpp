#include <doctest.h>

#include "halgeo/constructions.hpp"
#include "halgeo/error.hpp"
#include "halgeo/geometry.hpp"
#include "halgeo/morphisms.hpp"
#include "library.hpp"

using namespace halgeo;
using testing::formula;
using testing::load;
using testing::sort_of;
using testing::term;

namespace {

EquationSystem eqs(const FiniteAlgebra& h, const SortPtr& s, std::vector<std::pair<const char*, const char*>> pairs) {
  EquationSystem t{s, {}};
  for (auto [a, b] : pairs) t.equations.emplace_back(term(h, s, a), term(h, s, b));
  return t;
}

}  // namespace

TEST_CASE("solve_equations") {
  auto s2 = load("s2");
  auto X = sort_of({"x", "y"});
  CHECK(solve_equations(s2, eqs(s2, X, {{"meet(x, y)", "x"}})).indices() == std::vector<PointIndex>{0, 2, 3});
  CHECK(solve_equations(s2, eqs(s2, X, {})).is_top());
  auto z2 = load("z2");
  auto X1 = sort_of({"x"});
  auto e = solve_equations(z2, eqs(z2, X1, {{"x", "e"}}));
  REQUIRE(e.count() == 1);
  CHECK(format_point(z2, e.points()[0]) == "(x=e)");
}

TEST_CASE("algebraic_closure_contains") {
  auto z2 = load("z2");
  auto X1 = sort_of({"x"});
  auto t = eqs(z2, X1, {{"mul(x, x)", "e"}});
  CHECK(algebraic_closure_contains(z2, t, term(z2, X1, "mul(mul(x, x), x)"), term(z2, X1, "x")).contains);
  CHECK(algebraic_closure_contains(z2, t, term(z2, X1, "x"), term(z2, X1, "x")).contains);
  CHECK_FALSE(algebraic_closure_contains(z2, t, term(z2, X1, "x"), term(z2, X1, "e")).contains);
  auto s2 = load("s2");
  auto X = sort_of({"x", "y"});
  CHECK_FALSE(algebraic_closure_contains(s2, eqs(s2, X, {}), term(s2, X, "x"), term(s2, X, "y")).contains);

  auto s3 = load("s3");
  CHECK(algebraic_closure_contains(s3, eqs(s3, X, {{"x", "y"}}), term(s3, X, "meet(x, y)"), term(s3, X, "y")).contains);
}

TEST_CASE("closure of the empty algebraic set") {
  auto n2 = load("n2");
  auto X1 = sort_of({"x"});
  auto t = eqs(n2, X1, {{"neg(x)", "x"}});
  REQUIRE(solve_equations(n2, t).empty());
  auto full = algebraic_closure_contains(n2, t, term(n2, X1, "x"), term(n2, X1, "neg(x)"));
  CHECK(full.contains);
  CHECK(full.empty_set);
  CHECK_THROWS_AS(algebraic_closure_contains(n2, t, term(n2, X1, "x"), term(n2, X1, "x"), EmptyClosure::Strict),
                  DomainError);
}

TEST_CASE("logical_solve") {
  auto s2 = load("s2");
  auto X = sort_of({"x", "y"});
  CHECK(logical_solve(s2, FormulaSystem{X, {formula(s2, X, "E x.(meet(x,y)==y)")}}).is_top());
  auto f = formula(s2, X, "(meet(x,y)==y)");
  CHECK(logical_solve(s2, FormulaSystem{X, {f, Formula::negation(f)}}).empty());
  CHECK(logical_solve(s2, FormulaSystem{X, {}}).is_top());
  auto z3 = load("z3");
  auto X1 = sort_of({"x"});
  auto r = logical_solve(z3, FormulaSystem{X1, {formula(z3, X1, "~(x==e())")}});
  CHECK(r.indices() == std::vector<PointIndex>{1, 2});
}

TEST_CASE("algebraic sets are elementary") {
  for (const auto& h : testing::library(4)) {
    auto X = sort_of({"x", "y"});
    auto terms = enumerate_terms(h.signature(), X, 1);
    for (std::size_t i = 0; i < terms.size(); ++i)
      for (std::size_t j = i + 1; j < terms.size(); ++j) {
        EquationSystem t{X, {{terms[i], terms[j]}, {terms[j], terms[0]}}};
        FormulaSystem f{X, {Formula::equality(terms[i], terms[j]), Formula::equality(terms[j], terms[0])}};
        CHECK(solve_equations(h, t) == logical_solve(h, f));
      }
  }
}

TEST_CASE("logical_closure_contains") {
  auto z3 = load("z3");
  auto X1 = sort_of({"x"});
  auto f = formula(z3, X1, "~(x==e())");
  auto vac = logical_closure_contains(z3, PointSet::bottom(z3, X1), f);
  CHECK(vac.contains);
  CHECK(vac.empty_set);
  auto g = formula(z3, X1, "(x==e())");
  CHECK(logical_closure_contains(z3, PointSet::top(z3, X1), g).contains == theory_contains(z3, g));
  std::vector<PointIndex> one{1};
  auto a = PointSet::from_indices(z3, X1, one);
  CHECK(logical_closure_contains(z3, a, f).contains);
  CHECK_FALSE(logical_closure_contains(z3, a, g).contains);
  CHECK_THROWS_AS(logical_closure_contains(z3, a, formula(z3, sort_of({"x", "y"}), "(x==y)")), SortError);
}

TEST_CASE("definable_closure") {
  auto s2 = load("s2");
  auto X = sort_of({"x", "y"});
  for (std::uint64_t m = 0; m < 16; ++m) {
    auto a = PointSet::from_mask(s2, X, {m});
    CHECK(definable_closure(s2, a) == a);
  }
  auto z3 = load("z3");
  auto X1 = sort_of({"x"});
  std::vector<PointIndex> one{1};
  CHECK(definable_closure(z3, PointSet::from_indices(z3, X1, one)).indices() == std::vector<PointIndex>{1, 2});
  CHECK(definable_closure(z3, PointSet::top(z3, X1)).is_top());
  auto v4 = load("v4");
  for (std::uint64_t m = 0; m < 256; m += 7) {
    auto a = PointSet::from_mask(v4, X, {m});
    auto c = definable_closure(v4, a);
    CHECK(a.subset_of(c));
    CHECK(definable_closure(v4, c) == c);
  }
}

TEST_CASE("system files") {
  auto s2 = load("s2");
  SortRegistry reg;
  auto t = parse_equation_system("# comment\nsort X = x y\nmeet(x, y) == x  # trailing\n\n", reg, s2.signature());
  CHECK(t.sort->vars() == std::vector<std::string>{"x", "y"});
  REQUIRE(t.equations.size() == 1);
  CHECK(reg.find("X"));
  auto again = parse_equation_system("sort X\nx == y\n", reg, s2.signature());
  CHECK(again.sort == t.sort);
  auto fs = parse_formula_system("sort X\n(x == y)\nE x. (meet(x, y) == x)\n", reg, s2.signature());
  CHECK(fs.formulas.size() == 2);
  CHECK_THROWS_AS(parse_equation_system("meet(x, y) == x\n", reg, s2.signature()), FormatError);
  CHECK_THROWS_AS(parse_equation_system("sort Q\n", reg, s2.signature()), Error);
  try {
    parse_equation_system("sort X\nx == y\nmeet(x) == y\n", reg, s2.signature());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS(parse_equation_system("sort X\nx = y\n", reg, s2.signature()));
}

TEST_CASE("ag_equivalent") {
  auto z2 = load("z2");
  auto same = ag_equivalent(z2, z2);
  CHECK_FALSE(same.not_equivalent);
  auto pow = ag_equivalent(z2, direct_product(z2, z2), {3, 1, 2, 10'000'000});
  CHECK_FALSE(pow.not_equivalent);
  auto z3 = load("z3");
  auto r = ag_equivalent(z2, z3);
  REQUIRE(r.not_equivalent);
  REQUIRE(r.witness);
  const auto& w = *r.witness;
  const FiniteAlgebra& holds = w.holds_in == 0 ? z2 : z3;
  const FiniteAlgebra& fails = w.holds_in == 0 ? z3 : z2;
  CHECK(quasiidentity_holds(holds, w.sort, w.premises, w.conclusion));
  CHECK_FALSE(quasiidentity_holds(fails, w.sort, w.premises, w.conclusion));
  // a bounded run never claims more than it checked
  auto tight = ag_equivalent(z2, direct_product(z2, z2), {3, 2, 2, 5});
  CHECK_FALSE(tight.not_equivalent);
  CHECK(tight.budget_exhausted);
  CHECK(tight.checks <= 5);
  CHECK_THROWS_AS(ag_equivalent(z2, load("s2")), SignatureError);
}

TEST_CASE("the spec's Z2/Z3 quasiidentity") {
  auto z2 = load("z2");
  auto z3 = load("z3");
  auto X1 = standard_sort(1);
  std::vector<Equation> prem{{term(z3, X1, "mul(x, x)"), term(z3, X1, "e")}};
  Equation concl{term(z3, X1, "x"), term(z3, X1, "e")};
  CHECK(quasiidentity_holds(z3, X1, prem, concl));
  CHECK_FALSE(quasiidentity_holds(z2, X1, prem, concl));
  CHECK(standard_sort(2)->name() == "X2");
  CHECK(standard_sort(4)->vars() == std::vector<std::string>{"x1", "x2", "x3", "x4"});
}
