#include "generators.hpp"

namespace halgeo::testing {

Term random_term(std::mt19937_64& rng, const SignaturePtr& sig, const SortPtr& sort, int max_depth) {
  std::vector<int> leaves_ops, inner_ops;
  for (int op = 0; op < static_cast<int>(sig->size()); ++op)
    (sig->op(op).arity == 0 ? leaves_ops : inner_ops).push_back(op);
  std::uniform_int_distribution<int> coin(0, 4);
  if (max_depth == 0 || inner_ops.empty() || coin(rng) < 2) {
    const int leaves = static_cast<int>(sort->size() + leaves_ops.size());
    const int pick = std::uniform_int_distribution<int>(0, leaves - 1)(rng);
    if (pick < static_cast<int>(sort->size())) return Term::variable(sig, sort, pick);
    return Term::apply(sig, sort, leaves_ops[static_cast<std::size_t>(pick) - sort->size()], {});
  }
  const int op = inner_ops[std::uniform_int_distribution<std::size_t>(0, inner_ops.size() - 1)(rng)];
  std::vector<Term> kids;
  for (int a = 0; a < sig->op(op).arity; ++a) kids.push_back(random_term(rng, sig, sort, max_depth - 1));
  return Term::apply(sig, sort, op, kids);
}

Substitution random_substitution(std::mt19937_64& rng, const SignaturePtr& sig, const SortPtr& from,
                                 const SortPtr& to, int max_depth) {
  std::vector<Term> images;
  for (std::size_t v = 0; v < from->size(); ++v) images.push_back(random_term(rng, sig, to, max_depth));
  return Substitution(from, to, std::move(images));
}

std::vector<Formula> generate_formulas(const SortPtr& sort, const std::vector<Formula>& atoms,
                                       const std::vector<Substitution>& subs, int max_length) {
  std::vector<std::vector<Formula>> by_len(static_cast<std::size_t>(max_length) + 1);
  by_len[0] = atoms;
  for (int len = 1; len <= max_length; ++len) {
    auto& out = by_len[len];
    for (const auto& f : by_len[len - 1]) {
      out.push_back(Formula::negation(f));
      for (int v = 0; v < static_cast<int>(sort->size()); ++v) out.push_back(Formula::exists(v, f));
      for (const auto& s : subs) out.push_back(Formula::substitute(s, f));
    }
    for (int a = 0; a < len; ++a)
      for (const auto& f : by_len[a])
        for (const auto& g : by_len[len - 1 - a]) {
          out.push_back(Formula::conjunction(f, g));
          out.push_back(Formula::disjunction(f, g));
        }
  }
  std::vector<Formula> all;
  for (auto& v : by_len) all.insert(all.end(), v.begin(), v.end());
  return all;
}

std::vector<Formula> sample_atoms(const SignaturePtr& sig, const SortPtr& sort, std::size_t count) {
  std::vector<Formula> out;
  const int n = static_cast<int>(sort->size());
  auto var = [&](int v) { return Term::variable(sig, sort, v); };
  if (n >= 2) out.push_back(Formula::equality(var(0), var(1)));
  for (int op = 0; op < static_cast<int>(sig->size()) && out.size() < count; ++op) {
    const int k = sig->op(op).arity;
    if (k == 0) continue;
    std::vector<Term> kids;
    for (int a = 0; a < k; ++a) kids.push_back(var(a % n));
    out.push_back(Formula::equality(Term::apply(sig, sort, op, kids), var(n - 1)));
  }
  for (int op = 0; op < static_cast<int>(sig->size()) && out.size() < count; ++op)
    if (sig->op(op).arity == 0) out.push_back(Formula::equality(var(0), Term::apply(sig, sort, op, {})));
  if (out.size() > count) out.erase(out.begin() + static_cast<long>(count), out.end());
  return out;
}

}  // namespace halgeo::testing
