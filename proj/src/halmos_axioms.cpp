#include "halgeo/halmos_axioms.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "halgeo/error.hpp"
#include "halgeo/point_set.hpp"
#include "halgeo/substitution.hpp"

namespace halgeo {

std::string_view axiom_label(Axiom a) {
  switch (a) {
    case Axiom::Composition: return "2";
    case Axiom::QuantifierAgree: return "3a";
    case Axiom::QuantifierCommute: return "3b";
    case Axiom::EqualityTransport: return "4a";
    case Axiom::EqualityReplace: return "4b";
  }
  return "?";
}

bool AxiomReport::all_passed() const {
  for (const auto& t : tallies)
    if (t.passed != t.total || t.total == 0) return false;
  return !tallies.empty();
}

std::string AxiomReport::summary() const {
  std::ostringstream out;
  bool uniform = all_passed();
  for (const auto& t : tallies) uniform = uniform && t.total == tallies.front().total;
  if (uniform) {
    out << "axioms ";
    for (std::size_t i = 0; i < tallies.size(); ++i) out << (i ? "," : "") << axiom_label(tallies[i].axiom);
    out << ": PASS " << tallies.front().passed << '/' << tallies.front().total << '\n';
    return out.str();
  }
  for (const auto& t : tallies) {
    out << "axiom " << axiom_label(t.axiom) << ": " << (t.passed == t.total && t.total ? "PASS " : "FAIL ")
        << t.passed << '/' << t.total << '\n';
    if (t.counterexample) out << "  counterexample: " << *t.counterexample << '\n';
  }
  return out.str();
}

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

// Random term over `sort` of depth <= depth, leaves drawn from `allowed`
// variables and nullary symbols. Returns nullopt when no leaf is available.
std::optional<Term> random_term(Rng& rng, const SignaturePtr& sig, const SortPtr& sort, int depth,
                                const std::vector<int>& allowed) {
  std::vector<int> nullary, compound;
  for (std::size_t i = 0; i < sig->size(); ++i)
    (sig->op(static_cast<int>(i)).arity == 0 ? nullary : compound).push_back(static_cast<int>(i));
  std::function<std::optional<Term>(int)> gen = [&](int d) -> std::optional<Term> {
    const bool leaf = d == 0 || compound.empty() || pick(rng, 3) == 0;
    if (!leaf) {
      int op = compound[pick(rng, compound.size())];
      std::vector<Term> args;
      for (int j = 0; j < sig->op(op).arity; ++j) {
        auto a = gen(d - 1);
        if (!a) return std::nullopt;
        args.push_back(*a);
      }
      return Term::apply(sig, sort, op, args);
    }
    const auto leaves = allowed.size() + nullary.size();
    if (leaves == 0) {
      if (compound.empty() || d == 0) return std::nullopt;
      return gen(d);  // fall through to a compound node
    }
    auto k = pick(rng, leaves);
    if (k < allowed.size()) return Term::variable(sig, sort, allowed[k]);
    return Term::apply(sig, sort, nullary[k - allowed.size()], {});
  };
  return gen(depth);
}

std::vector<int> all_vars(const SortPtr& s) {
  std::vector<int> v(s->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
  return v;
}

Term random_term_all(Rng& rng, const SignaturePtr& sig, const SortPtr& sort, int depth) {
  return *random_term(rng, sig, sort, depth, all_vars(sort));
}

Substitution random_substitution(Rng& rng, const SignaturePtr& sig, const SortPtr& from, const SortPtr& to, int depth) {
  std::vector<Term> images;
  for (std::size_t i = 0; i < from->size(); ++i) images.push_back(random_term_all(rng, sig, to, depth));
  return Substitution(from, to, std::move(images));
}

PointSet random_set(Rng& rng, const FiniteAlgebra& h, const SortPtr& sort) {
  const auto space = space_size(h, *sort);
  kernels::Mask m(kernels::word_count(space));
  for (auto& w : m) w = rng();
  return PointSet::from_mask(h, sort, std::move(m));
}

std::string describe_set(const PointSet& a) { return a.sort()->name() + "{mask " + a.hex() + "}"; }

// Outcome of one instance: nullopt when it holds, else a description.
using Outcome = std::optional<std::string>;

Outcome check_composition(const FiniteAlgebra& h, const Substitution& s, const Substitution& s2, const PointSet& a,
                          const PointSet& b) {
  auto direct = transport(compose(s, s2), a);
  auto staged = transport(s2, transport(s, a));
  if (!(direct == staged))
    return "s=[" + s.to_string() + "] s2=[" + s2.to_string() + "] a=" + describe_set(a) + ": composite gives " +
           direct.hex() + ", staged gives " + staged.hex();
  if (!(transport(s, set_union(a, b)) == set_union(transport(s, a), transport(s, b))))
    return "s=[" + s.to_string() + "] does not preserve union";
  if (!(transport(s, complement(a)) == complement(transport(s, a))))
    return "s=[" + s.to_string() + "] does not preserve complement";
  (void)h;
  return std::nullopt;
}

Outcome check_quantifier_agree(const Substitution& s1, const Substitution& s2, int x, const PointSet& a) {
  auto ex = exists_x(a, x);
  auto l = transport(s1, ex), r = transport(s2, ex);
  if (l == r) return std::nullopt;
  return "x=" + a.sort()->var(x) + " s1=[" + s1.to_string() + "] s2=[" + s2.to_string() + "] a=" + describe_set(a);
}

Outcome check_quantifier_commute(const Substitution& s, int x, const PointSet& a) {
  const int y = s.image(x).var();
  auto l = transport(s, exists_x(a, x));
  auto r = exists_x(transport(s, a), y);
  if (l == r) return std::nullopt;
  return "x=" + a.sort()->var(x) + " s=[" + s.to_string() + "] a=" + describe_set(a) + ": " + l.hex() + " vs " + r.hex();
}

Outcome check_equality_transport(const FiniteAlgebra& h, const Substitution& s, const Term& w, const Term& w2) {
  auto l = transport(s, equality_set(h, s.domain(), w, w2));
  auto r = equality_set(h, s.codomain(), apply_substitution(s, w), apply_substitution(s, w2));
  if (l == r) return std::nullopt;
  return "s=[" + s.to_string() + "] w=" + w.to_string() + " w'=" + w2.to_string();
}

Outcome check_equality_replace(const FiniteAlgebra& h, const SortPtr& sort, int x, const Term& w, const Term& w2,
                               const PointSet& a) {
  const auto& name = sort->var(x);
  auto lhs = set_intersection(transport(elementary_substitution(sort, name, w), a), equality_set(h, sort, w, w2));
  auto rhs = transport(elementary_substitution(sort, name, w2), a);
  if (lhs.subset_of(rhs)) return std::nullopt;
  return "x=" + name + " w=" + w.to_string() + " w'=" + w2.to_string() + " a=" + describe_set(a);
}

// Substitution X -> Y with s(x) = y and every other image avoiding y.
std::optional<Substitution> commuting_substitution(Rng& rng, const SignaturePtr& sig, const SortPtr& from,
                                                   const SortPtr& to, int x, int y, int depth) {
  std::vector<int> others;
  for (std::size_t i = 0; i < to->size(); ++i)
    if (static_cast<int>(i) != y) others.push_back(static_cast<int>(i));
  std::vector<Term> images;
  for (std::size_t i = 0; i < from->size(); ++i) {
    if (static_cast<int>(i) == x) {
      images.push_back(Term::variable(sig, to, y));
      continue;
    }
    auto t = random_term(rng, sig, to, depth, others);
    if (!t) return std::nullopt;
    images.push_back(*t);
  }
  return Substitution(from, to, std::move(images));
}

Outcome run_trial(Axiom axiom, const FiniteAlgebra& h, std::span<const SortPtr> sorts, int depth, Rng& rng,
                  bool& applicable) {
  const auto& sig = h.signature();
  auto any_sort = [&] { return sorts[pick(rng, sorts.size())]; };
  applicable = true;
  switch (axiom) {
    case Axiom::Composition: {
      auto x = any_sort(), y = any_sort(), z = any_sort();
      auto s = random_substitution(rng, sig, x, y, depth);
      auto s2 = random_substitution(rng, sig, y, z, depth);
      auto a = random_set(rng, h, x);
      auto b = random_set(rng, h, x);
      return check_composition(h, s, s2, a, b);
    }
    case Axiom::QuantifierAgree: {
      auto x = any_sort(), y = any_sort();
      int v = static_cast<int>(pick(rng, x->size()));
      auto s1 = random_substitution(rng, sig, x, y, depth);
      auto images = s1.images();
      images[static_cast<std::size_t>(v)] = random_term_all(rng, sig, y, depth);
      Substitution s2(x, y, std::move(images));
      return check_quantifier_agree(s1, s2, v, random_set(rng, h, x));
    }
    case Axiom::QuantifierCommute: {
      for (int attempt = 0; attempt < 64; ++attempt) {
        auto x = any_sort(), y = any_sort();
        int v = static_cast<int>(pick(rng, x->size()));
        int target = static_cast<int>(pick(rng, y->size()));
        auto s = commuting_substitution(rng, sig, x, y, v, target, depth);
        if (!s) continue;
        return check_quantifier_commute(*s, v, random_set(rng, h, x));
      }
      applicable = false;
      return std::nullopt;
    }
    case Axiom::EqualityTransport: {
      auto x = any_sort(), y = any_sort();
      auto s = random_substitution(rng, sig, x, y, depth);
      return check_equality_transport(h, s, random_term_all(rng, sig, x, depth), random_term_all(rng, sig, x, depth));
    }
    case Axiom::EqualityReplace: {
      auto x = any_sort();
      int v = static_cast<int>(pick(rng, x->size()));
      auto w = random_term_all(rng, sig, x, depth);
      auto w2 = random_term_all(rng, sig, x, depth);
      return check_equality_replace(h, x, v, w, w2, random_set(rng, h, x));
    }
  }
  return std::nullopt;
}

}  // namespace

AxiomReport verify_halmos_axioms(const FiniteAlgebra& h, std::span<const SortPtr> sorts,
                                 const AxiomCheckOptions& options) {
  if (sorts.empty()) throw DomainError("axiom verification needs at least one sort");
  if (options.trials == 0) throw DomainError("axiom verification needs at least one trial");
  for (const auto& s : sorts) space_size(h, *s);
  AxiomReport report;
  for (auto axiom : kAllAxioms) {
    const auto n = static_cast<std::int64_t>(options.trials);
    std::vector<Outcome> outcomes(options.trials);
    std::vector<char> applicable(options.trials, 1);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      std::seed_seq seq{options.seed, static_cast<std::uint64_t>(axiom), static_cast<std::uint64_t>(i)};
      Rng rng(seq);
      bool ok = true;
      try {
        outcomes[static_cast<std::size_t>(i)] = run_trial(axiom, h, sorts, options.term_depth, rng, ok);
      } catch (const std::exception& e) {
        outcomes[static_cast<std::size_t>(i)] = std::string("error: ") + e.what();
      }
      applicable[static_cast<std::size_t>(i)] = ok;
    }
    AxiomTally tally;
    tally.axiom = axiom;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (!applicable[i]) continue;
      ++tally.total;
      if (!outcomes[i]) {
        ++tally.passed;
      } else if (!tally.counterexample) {
        tally.counterexample = "trial " + std::to_string(i) + ": " + *outcomes[i];
      }
    }
    report.tallies.push_back(std::move(tally));
  }
  return report;
}

AxiomReport verify_halmos_axioms_exhaustive(const FiniteAlgebra& h, std::span<const SortPtr> sorts, int term_depth) {
  if (h.size() > 2) throw DomainError("exhaustive axiom mode needs |H| <= 2");
  for (const auto& s : sorts)
    if (s->size() > 2) throw DomainError("exhaustive axiom mode needs sorts of at most two variables");
  const auto& sig = h.signature();

  auto pool = [&](const SortPtr& s) { return enumerate_terms(sig, s, term_depth); };
  auto all_substitutions = [&](const SortPtr& from, const SortPtr& to) {
    auto terms = pool(to);
    std::vector<Substitution> out;
    std::vector<std::size_t> idx(from->size(), 0);
    while (true) {
      std::vector<Term> images;
      for (auto i : idx) images.push_back(terms[i]);
      out.emplace_back(from, to, std::move(images));
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == terms.size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
    return out;
  };
  auto all_sets = [&](const SortPtr& s) {
    const auto space = space_size(h, *s);
    std::vector<PointSet> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << space); ++bits)
      out.push_back(PointSet::from_mask(h, s, kernels::Mask{bits}));
    return out;
  };

  std::vector<AxiomTally> tallies;
  for (auto a : kAllAxioms) {
    tallies.emplace_back();
    tallies.back().axiom = a;
  }
  auto record = [&](Axiom a, const Outcome& o) {
    auto& t = tallies[static_cast<std::size_t>(a)];
    ++t.total;
    if (!o) {
      ++t.passed;
    } else if (!t.counterexample) {
      t.counterexample = *o;
    }
  };

  for (const auto& x : sorts) {
    const auto sets = all_sets(x);
    const auto terms_x = pool(x);
    for (const auto& y : sorts) {
      const auto subs = all_substitutions(x, y);
      for (const auto& z : sorts) {
        const auto subs2 = all_substitutions(y, z);
        for (const auto& s : subs)
          for (const auto& s2 : subs2)
            for (const auto& a : sets) record(Axiom::Composition, check_composition(h, s, s2, a, complement(a)));
      }
      for (int v = 0; v < static_cast<int>(x->size()); ++v) {
        for (const auto& s1 : subs) {
          for (const auto& s2 : subs) {
            bool agree = true;
            for (int u = 0; u < static_cast<int>(x->size()); ++u)
              if (u != v && !(s1.image(u) == s2.image(u))) agree = false;
            if (!agree) continue;
            for (const auto& a : sets) record(Axiom::QuantifierAgree, check_quantifier_agree(s1, s2, v, a));
          }
          if (!s1.image(v).is_variable()) continue;
          const int target = s1.image(v).var();
          bool side = true;
          for (int u = 0; u < static_cast<int>(x->size()); ++u) {
            if (u == v) continue;
            auto supp = s1.image(u).support();
            if (std::find(supp.begin(), supp.end(), target) != supp.end()) side = false;
          }
          if (!side) continue;
          for (const auto& a : sets) record(Axiom::QuantifierCommute, check_quantifier_commute(s1, v, a));
        }
      }
      for (const auto& s : subs)
        for (const auto& w : terms_x)
          for (const auto& w2 : terms_x) record(Axiom::EqualityTransport, check_equality_transport(h, s, w, w2));
    }
    for (int v = 0; v < static_cast<int>(x->size()); ++v)
      for (const auto& w : terms_x)
        for (const auto& w2 : terms_x)
          for (const auto& a : sets) record(Axiom::EqualityReplace, check_equality_replace(h, x, v, w, w2, a));
  }
  return AxiomReport{std::move(tallies)};
}

}  // namespace halgeo
