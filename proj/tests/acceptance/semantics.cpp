// Criteria 1-4: substitution axioms, naturality of val, kernels and theories.

#include <chrono>
#include <map>
#include <random>

#include "criteria.hpp"
#include "generators.hpp"
#include "halgeo/formula.hpp"
#include "halgeo/geometry.hpp"
#include "halgeo/halmos_axioms.hpp"
#include "halgeo/point_set.hpp"
#include "library.hpp"

namespace halgeo::acceptance {

Outcome criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  std::vector<SortPtr> sorts{standard_sort(1), standard_sort(2), standard_sort(3)};
  AxiomCheckOptions opts;
  opts.trials = 200;
  opts.seed = 2024;
  opts.term_depth = 2;
  std::size_t instances = 0;
  for (auto name : {"s2", "z2", "z3", "z4", "v4"}) {
    auto h = testing::load(name);
    auto r = verify_halmos_axioms(h, sorts, opts);
    for (const auto& tally : r.tallies) {
      instances += tally.total;
      t.check_lazy(tally.total == 200 && tally.passed == 200, [&] {
        return std::string(name) + " axiom " + std::string(axiom_label(tally.axiom)) + ": " +
               std::to_string(tally.passed) + "/" + std::to_string(tally.total) + " " +
               tally.counterexample.value_or("");
      });
    }
  }
  std::vector<SortPtr> micro{standard_sort(1), standard_sort(2)};
  std::size_t exhaustive = 0;
  std::size_t algebras = 0;
  for (const auto& h : testing::library(2)) {
    if (h.size() != 2) continue;
    ++algebras;
    auto r = verify_halmos_axioms_exhaustive(h, micro, 1);
    for (const auto& tally : r.tallies) {
      exhaustive += tally.total;
      t.check_lazy(tally.passed == tally.total && tally.total > 0, [&] {
        return h.name() + " exhaustive axiom " + std::string(axiom_label(tally.axiom)) + ": " +
               tally.counterexample.value_or("no instances");
      });
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.check_lazy(secs < 120, [&] { return "runtime " + std::to_string(secs) + "s"; });
  return t.outcome("5 algebras x 5 axioms x 200 random instances (" + std::to_string(instances) +
                   "), exhaustive on " + std::to_string(algebras) + " two-element algebras (" +
                   std::to_string(exhaustive) + " instances)");
}

Outcome criterion_2() {
  Tally t;
  // one formula family and one set of substitutions per signature; every
  // algebra of at most 3 elements is checked against them
  std::map<std::string, std::vector<FiniteAlgebra>> by_sig;
  for (const auto& h : testing::library(3)) by_sig[h.signature()->to_string()].push_back(h);
  auto X = standard_sort(2);
  std::vector<SortPtr> targets{standard_sort(1), standard_sort(2), standard_sort(3)};
  std::size_t formulas = 0;
  std::mt19937_64 rng(17);
  for (const auto& [sig_text, algebras] : by_sig) {
    const auto& sig = algebras.front().signature();
    auto atoms = testing::sample_atoms(sig, X, 2);
    auto fs = testing::generate_formulas(X, atoms, {}, 4);
    formulas += fs.size();
    std::vector<Substitution> subs;
    for (int i = 0; i < 50; ++i) {
      const auto& Y = targets[rng() % targets.size()];
      subs.push_back(testing::random_substitution(rng, sig, X, Y, 2));
    }
    for (const auto& h : algebras) {
      std::vector<PointSet> vals;
      vals.reserve(fs.size());
      for (const auto& f : fs) vals.push_back(val(h, f));
      for (const auto& s : subs)
        for (std::size_t i = 0; i < fs.size(); ++i) {
          auto expect = transport(s, vals[i]);
          auto node = Formula::substitute(s, fs[i]);
          t.check_lazy(val(h, normalize(node)) == expect, [&] {
            return h.name() + ": " + node.to_string();
          });
        }
    }
    (void)sig_text;
  }
  return t.outcome(std::to_string(formulas) + " formulas of length <= 4 over " + std::to_string(by_sig.size()) +
                   " signatures, 50 substitutions each, all algebras with <= 3 elements, via normalize");
}

namespace {

struct Fragment {
  SortPtr sort;
  std::vector<Term> terms;
};

std::vector<Fragment> fragments(const FiniteAlgebra& h) {
  return {{standard_sort(1), enumerate_terms(h.signature(), standard_sort(1), 3)},
          {standard_sort(2), enumerate_terms(h.signature(), standard_sort(2), 2)}};
}

}  // namespace

Outcome criterion_3() {
  Tally t;
  std::size_t atoms = 0;
  std::size_t algebras = 0;
  for (const auto& h : testing::library(4)) {
    ++algebras;
    for (const auto& fr : fragments(h)) {
      const auto points = enumerate_points(h, fr.sort);
      // LKer through the formula side; Ker through term evaluation
      std::vector<std::vector<Element>> value(fr.terms.size());
      for (std::size_t i = 0; i < fr.terms.size(); ++i)
        for (const auto& mu : points) value[i].push_back(eval_term(h, mu, fr.terms[i]));
      std::size_t spot = 0;
      for (std::size_t i = 0; i < fr.terms.size(); ++i)
        for (std::size_t j = i; j < fr.terms.size(); ++j) {
          ++atoms;
          auto atom = Formula::equality(fr.terms[i], fr.terms[j]);
          auto v = val(h, atom);
          for (std::size_t p = 0; p < points.size(); ++p) {
            const bool ker = kernel_contains(h, points[p], fr.terms[i], fr.terms[j]);
            t.check_lazy(ker == v.contains(p) && ker == (value[i][p] == value[j][p]), [&] {
              return h.name() + " " + format_point(h, points[p]) + " " + atom.to_string();
            });
          }
          // the public membership call as well, on a regular sample
          if (spot++ % 97 == 0)
            for (const auto& mu : points)
              t.check(lker_contains(h, mu, atom) == kernel_contains(h, mu, fr.terms[i], fr.terms[j]),
                      h.name() + " lker_contains " + atom.to_string());
        }
    }
  }
  return t.outcome(std::to_string(atoms) + " atoms (depth 3 over {x}, depth 2 over {x,y}) on " +
                   std::to_string(algebras) + " algebras with <= 4 elements, every point");
}

Outcome criterion_4() {
  Tally t;
  std::size_t formulas = 0;
  for (const auto& h : testing::library(4)) {
    for (const auto& fr : fragments(h)) {
      const auto points = enumerate_points(h, fr.sort);
      auto check = [&](const Formula& f) {
        ++formulas;
        bool all = true;
        for (const auto& mu : points) all = all && lker_contains(h, mu, f);
        t.check_lazy(theory_contains(h, f) == all, [&] { return h.name() + " " + f.to_string(); });
      };
      for (std::size_t i = 0; i < fr.terms.size(); ++i)
        for (std::size_t j = i; j < fr.terms.size(); ++j) check(Formula::equality(fr.terms[i], fr.terms[j]));
      // and past the atoms: a generated family with connectives and quantifiers
      for (const auto& f : testing::generate_formulas(fr.sort, testing::sample_atoms(h.signature(), fr.sort, 3), {}, 2))
        check(f);
    }
  }
  return t.outcome(std::to_string(formulas) + " formulas (the atoms of criterion 3 plus generated formulas of "
                   "length <= 2), algebras with <= 4 elements");
}

}  // namespace halgeo::acceptance
