#include "halgeo/geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "halgeo/congruence.hpp"
#include "halgeo/error.hpp"
#include "halgeo/morphisms.hpp"
#include "lexer.hpp"
#include "term_parser.hpp"

namespace halgeo {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Line {
  std::size_t number;
  std::string text;
};

// Content lines with comments stripped; the header sort resolved.
std::pair<SortPtr, std::vector<Line>> read_system(std::string_view text, SortRegistry& sorts) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto t = trim(raw);
    if (!t.empty()) lines.push_back({number, t});
  }
  if (lines.empty() || lines.front().text.rfind("sort", 0) != 0 ||
      (lines.front().text.size() > 4 && lines.front().text[4] != ' ' && lines.front().text[4] != '\t'))
    throw FormatError("system file must start with a 'sort <name>' header");
  auto header = trim(std::string_view(lines.front().text).substr(4));
  SortPtr sort;
  auto eq = header.find('=');
  if (eq == std::string::npos) {
    if (header.empty() || !is_identifier(header)) throw FormatError("line " + std::to_string(lines.front().number) + ": bad sort header");
    sort = sorts.find(header);
    if (!sort) throw FormatError("line " + std::to_string(lines.front().number) + ": unknown sort '" + header + "'");
  } else {
    auto name = trim(std::string_view(header).substr(0, eq));
    std::istringstream vs(header.substr(eq + 1));
    std::vector<std::string> vars;
    for (std::string v; vs >> v;) vars.push_back(v);
    try {
      sort = make_sort(name, std::move(vars));
      sorts.add(sort);
    } catch (const Error& e) {
      throw FormatError("line " + std::to_string(lines.front().number) + ": " + e.what());
    }
  }
  lines.erase(lines.begin());
  return {sort, std::move(lines)};
}

}  // namespace

EquationSystem parse_equation_system(std::string_view text, SortRegistry& sorts, const SignaturePtr& sig) {
  auto [sort, lines] = read_system(text, sorts);
  EquationSystem t{sort, {}};
  for (const auto& line : lines) {
    try {
      detail::TokenStream ts(line.text);
      auto w = detail::parse_term_tokens(ts, sort, sig);
      ts.expect(detail::Tok::EqEq, "'=='");
      auto w2 = detail::parse_term_tokens(ts, sort, sig);
      if (!ts.at_end()) ts.fail("expected end of equation");
      t.equations.emplace_back(w, w2);
    } catch (const Error& e) {
      throw FormatError("line " + std::to_string(line.number) + ": " + e.what());
    }
  }
  return t;
}

FormulaSystem parse_formula_system(std::string_view text, SortRegistry& sorts, const SignaturePtr& sig) {
  auto [sort, lines] = read_system(text, sorts);
  FormulaSystem t{sort, {}};
  for (const auto& line : lines) {
    try {
      t.formulas.push_back(parse_formula(line.text, sort, sorts, sig));
    } catch (const Error& e) {
      throw FormatError("line " + std::to_string(line.number) + ": " + e.what());
    }
  }
  return t;
}

PointSet solve_equations(const FiniteAlgebra& h, const EquationSystem& t) {
  auto out = PointSet::top(h, t.sort);
  for (const auto& [w, w2] : t.equations) out = set_intersection(out, equality_set(h, t.sort, w, w2));
  return out;
}

ClosureAnswer algebraic_closure_contains(const FiniteAlgebra& h, const EquationSystem& t, const Term& w, const Term& w2,
                                         EmptyClosure mode) {
  if (!same_sort(w.sort(), t.sort) || !same_sort(w2.sort(), t.sort))
    throw SortError("closure query over a sort different from the system's");
  auto a = solve_equations(h, t);
  if (a.empty()) {
    if (mode == EmptyClosure::Strict) throw DomainError("system has no solutions; closure of the empty set requested");
    return {true, true};
  }
  auto points = a.points();
  auto q = present_closed_congruence(h, t.sort, points);
  return {q.contains(w, w2), false};
}

PointSet logical_solve(const FiniteAlgebra& h, const FormulaSystem& t) {
  auto out = PointSet::top(h, t.sort);
  for (const auto& f : t.formulas) {
    if (!same_sort(f.sort(), t.sort)) throw SortError("formula of sort " + f.sort()->name() + " in a system of sort " + t.sort->name());
    out = set_intersection(out, val(h, f));
  }
  return out;
}

ClosureAnswer logical_closure_contains(const FiniteAlgebra& h, const PointSet& a, const Formula& f) {
  if (!same_sort(a.sort(), f.sort())) throw SortError("point set and formula have different sorts");
  return {a.subset_of(val(h, f)), a.empty()};
}

PointSet definable_closure(const FiniteAlgebra& h, const PointSet& a) {
  auto out = a;
  for (const auto& sigma : automorphism_group(h)) out = set_union(out, act(sigma, a));
  return out;
}

SortPtr standard_sort(std::size_t n) {
  static const char* names[] = {"x", "y", "z"};
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back(n <= 3 ? names[i] : "x" + std::to_string(i + 1));
  return make_sort("X" + std::to_string(n), std::move(vars));
}

bool quasiidentity_holds(const FiniteAlgebra& h, const SortPtr& sort, const std::vector<Equation>& premises,
                         const Equation& conclusion) {
  auto sol = solve_equations(h, EquationSystem{sort, premises});
  return sol.subset_of(equality_set(h, sort, conclusion.first, conclusion.second));
}

namespace {

constexpr std::size_t kMaxTermFunctions = 1u << 12;

struct TermFamily {
  std::vector<Term> reps;
  std::vector<std::vector<Element>> values;  // joint values: points of h1, then points of h2
};

TermFamily term_functions(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const SortPtr& sort, int depth) {
  const auto& sig = h1.signature();
  const auto n = sort->size();
  const auto p1 = space_size(h1, *sort), p2 = space_size(h2, *sort);
  std::vector<std::vector<Element>> assign;
  std::vector<int> owner;
  for (PointIndex i = 0; i < p1; ++i) {
    assign.push_back(point_values(h1.size(), n, i));
    owner.push_back(0);
  }
  for (PointIndex i = 0; i < p2; ++i) {
    assign.push_back(point_values(h2.size(), n, i));
    owner.push_back(1);
  }
  TermFamily fam;
  std::map<std::vector<Element>, std::size_t> seen;
  auto add = [&](const Term& t, std::vector<Element> v) {
    if (seen.count(v)) return;
    if (fam.reps.size() >= kMaxTermFunctions)
      throw CapExceeded("more than " + std::to_string(kMaxTermFunctions) + " term functions at this depth");
    seen.emplace(v, fam.reps.size());
    fam.reps.push_back(t);
    fam.values.push_back(std::move(v));
  };
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Element> v(assign.size());
    for (std::size_t p = 0; p < assign.size(); ++p) v[p] = assign[p][x];
    add(Term::variable(sig, sort, static_cast<int>(x)), std::move(v));
  }
  for (int op = 0; op < static_cast<int>(sig->size()); ++op) {
    if (sig->op(op).arity != 0) continue;
    std::vector<Element> v(assign.size());
    for (std::size_t p = 0; p < assign.size(); ++p) v[p] = (owner[p] ? h2 : h1).table(op)[0];
    add(Term::apply(sig, sort, op, {}), std::move(v));
  }
  std::vector<Element> args;
  for (int d = 1; d <= depth; ++d) {
    const auto snapshot = fam.reps.size();
    for (int op = 0; op < static_cast<int>(sig->size()); ++op) {
      const auto k = static_cast<std::size_t>(sig->op(op).arity);
      if (k == 0) continue;
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        std::vector<Element> v(assign.size());
        args.resize(k);
        for (std::size_t p = 0; p < assign.size(); ++p) {
          for (std::size_t i = 0; i < k; ++i) args[i] = fam.values[idx[i]][p];
          v[p] = (owner[p] ? h2 : h1).apply(op, args);
        }
        if (!seen.count(v)) {
          std::vector<Term> kids;
          for (auto i : idx) kids.push_back(fam.reps[i]);
          add(Term::apply(sig, sort, op, kids), std::move(v));
        }
        std::size_t pos = k;
        while (pos > 0 && ++idx[pos - 1] == snapshot) idx[--pos] = 0;
        if (pos == 0) break;
      }
    }
  }
  return fam;
}

}  // namespace

AgResult ag_equivalent(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const AgOptions& options) {
  require_same_signature(h1, h2);
  if (options.depth < 0 || options.max_vars < 1 || options.max_premises < 0)
    throw DomainError("ag-equivalence needs depth >= 0, max_vars >= 1 and max_premises >= 0");
  AgResult result;
  result.options = options;
  for (int n = 1; n <= options.max_vars; ++n) {
    auto sort = standard_sort(static_cast<std::size_t>(n));
    auto fam = term_functions(h1, h2, sort, options.depth);
    const auto p1 = space_size(h1, *sort), p2 = space_size(h2, *sort);
    const auto w1 = kernels::word_count(p1), w2 = kernels::word_count(p2);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<kernels::Mask> m1, m2;
    for (std::size_t i = 0; i < fam.reps.size(); ++i)
      for (std::size_t j = i + 1; j < fam.reps.size(); ++j) {
        kernels::Mask a(w1, 0), b(w2, 0);
        for (PointIndex p = 0; p < p1; ++p)
          if (fam.values[i][p] == fam.values[j][p]) kernels::set_bit(a, p);
        for (PointIndex p = 0; p < p2; ++p)
          if (fam.values[i][p1 + p] == fam.values[j][p1 + p]) kernels::set_bit(b, p);
        pairs.emplace_back(i, j);
        m1.push_back(std::move(a));
        m2.push_back(std::move(b));
      }
    auto full = [](std::size_t words, std::uint64_t points) {
      kernels::Mask m(words, ~kernels::Word{0});
      if (points % 64) m.back() = (kernels::Word{1} << (points % 64)) - 1;
      return m;
    };
    auto subset = [](const kernels::Mask& a, const kernels::Mask& b) {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
      return true;
    };
    for (int k = 0; k <= options.max_premises && static_cast<std::size_t>(k) <= pairs.size(); ++k) {
      std::vector<std::size_t> combo(static_cast<std::size_t>(k));
      for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = i;
      while (true) {
        auto s1 = full(w1, p1), s2 = full(w2, p2);
        for (auto c : combo) {
          for (std::size_t i = 0; i < w1; ++i) s1[i] &= m1[c][i];
          for (std::size_t i = 0; i < w2; ++i) s2[i] &= m2[c][i];
        }
        for (std::size_t c = 0; c < pairs.size(); ++c) {
          if (std::find(combo.begin(), combo.end(), c) != combo.end()) continue;
          if (result.checks >= options.budget) {
            result.budget_exhausted = true;
            return result;
          }
          ++result.checks;
          const bool in1 = subset(s1, m1[c]), in2 = subset(s2, m2[c]);
          if (in1 == in2) continue;
          std::vector<Equation> premises;
          for (auto p : combo) premises.emplace_back(fam.reps[pairs[p].first], fam.reps[pairs[p].second]);
          result.not_equivalent = true;
          result.witness = AgWitness{sort, std::move(premises), {fam.reps[pairs[c].first], fam.reps[pairs[c].second]},
                                     in1 ? std::size_t{0} : std::size_t{1}};
          return result;
        }
        // next k-combination in lexicographic order
        int pos = k - 1;
        while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == pairs.size() - static_cast<std::size_t>(k - pos)) --pos;
        if (pos < 0) break;
        ++combo[static_cast<std::size_t>(pos)];
        for (auto i = static_cast<std::size_t>(pos) + 1; i < combo.size(); ++i) combo[i] = combo[i - 1] + 1;
      }
    }
  }
  return result;
}

}  // namespace halgeo
