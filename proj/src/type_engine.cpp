#include "halgeo/type_engine.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "halgeo/error.hpp"

namespace halgeo {

namespace {

template <class Sig>
std::vector<TypeEngine::ClassId> canonical_ids(const std::vector<Sig>& sigs, std::size_t& count) {
  std::vector<const Sig*> order(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i) order[i] = &sigs[i];
  std::sort(order.begin(), order.end(), [](const Sig* a, const Sig* b) { return *a < *b; });
  order.erase(std::unique(order.begin(), order.end(), [](const Sig* a, const Sig* b) { return *a == *b; }),
              order.end());
  std::vector<TypeEngine::ClassId> ids(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    auto it = std::lower_bound(order.begin(), order.end(), &sigs[i], [](const Sig* a, const Sig* b) { return *a < *b; });
    ids[i] = static_cast<TypeEngine::ClassId>(it - order.begin());
  }
  count = order.size();
  return ids;
}

std::uint64_t injective_tuple_count(std::uint64_t n) {
  std::uint64_t total = 0, run = 1;
  for (std::uint64_t l = 0; l <= n; ++l) {
    total += run;
    run *= (n - l);
  }
  return total;
}

}  // namespace

TypeEngine::TypeEngine(std::vector<FiniteAlgebra> algebras, int term_depth)
    : algebras_(std::move(algebras)), term_depth_(term_depth) {
  if (algebras_.empty()) throw DomainError("type engine needs an algebra");
  if (term_depth < 0) throw DomainError("term depth must be non-negative");
  for (const auto& h : algebras_) require_same_signature(algebras_.front(), h);
  std::uint64_t total = 0;
  for (const auto& h : algebras_) total += injective_tuple_count(h.size());
  if (total > point_cap())
    throw CapExceeded("type computation needs " + std::to_string(total) + " tuples, cap is " +
                      std::to_string(point_cap()));

  for (std::size_t a = 0; a < algebras_.size(); ++a) {
    const auto n = algebras_[a].size();
    roots_.push_back(static_cast<NodeId>(nodes_.size()));
    nodes_.push_back(Node{static_cast<std::uint32_t>(a), {}, {}});
    for (std::size_t i = roots_.back(); i < nodes_.size(); ++i) {
      std::vector<std::int64_t> child(n, -1);
      for (Element e = 0; e < n; ++e) {
        const auto& t = nodes_[i].tuple;
        if (std::find(t.begin(), t.end(), e) != t.end()) continue;
        auto ext = t;
        ext.push_back(e);
        child[e] = static_cast<std::int64_t>(nodes_.size());
        nodes_.push_back(Node{static_cast<std::uint32_t>(a), std::move(ext), {}});
      }
      nodes_[i].child = std::move(child);
    }
  }

  std::vector<std::vector<std::uint32_t>> sigs(nodes_.size());
  const auto count = static_cast<std::int64_t>(nodes_.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) sigs[static_cast<std::size_t>(i)] = label_sequence(nodes_[static_cast<std::size_t>(i)], nullptr);
  std::size_t classes = 0;
  classes_.push_back(canonical_ids(sigs, classes));
  class_counts_.push_back(classes);
}

std::vector<std::uint32_t> TypeEngine::label_sequence(const Node& n, std::vector<Emission>* trace) const {
  const auto& h = algebras_[n.algebra];
  const auto& sig = *h.signature();
  std::vector<std::int64_t> label_of(h.size(), -1);
  std::vector<Element> values;
  std::vector<std::uint32_t> out{static_cast<std::uint32_t>(n.tuple.size())};
  for (auto e : n.tuple) {
    label_of[e] = static_cast<std::int64_t>(values.size());
    values.push_back(e);
  }
  auto emit = [&](int op, const std::vector<std::uint32_t>& args, Element v) {
    if (label_of[v] < 0) {
      label_of[v] = static_cast<std::int64_t>(values.size());
      values.push_back(v);
    }
    out.push_back(static_cast<std::uint32_t>(label_of[v]));
    if (trace) trace->push_back(Emission{op, args});
  };
  for (int op = 0; op < static_cast<int>(sig.size()); ++op)
    if (sig.op(op).arity == 0) emit(op, {}, h.table(op)[0]);
  std::vector<Element> elems;
  for (int round = 1; round <= term_depth_; ++round) {
    const auto snapshot = static_cast<std::uint32_t>(values.size());
    if (snapshot == 0) break;  // empty tuple, no constants
    for (int op = 0; op < static_cast<int>(sig.size()); ++op) {
      const auto k = static_cast<std::size_t>(sig.op(op).arity);
      if (k == 0) continue;
      std::vector<std::uint32_t> args(k, 0);
      elems.assign(k, 0);
      while (true) {
        for (std::size_t i = 0; i < k; ++i) elems[i] = values[args[i]];
        emit(op, args, h.apply(op, elems));
        std::size_t pos = k;
        while (pos > 0 && ++args[pos - 1] == snapshot) args[--pos] = 0;
        if (pos == 0) break;
      }
    }
  }
  return out;
}

void TypeEngine::refine_once() {
  const auto& prev = classes_.back();
  using Sig = std::vector<ClassId>;
  std::vector<Sig> sigs(nodes_.size());
  const auto count = static_cast<std::int64_t>(nodes_.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& n = nodes_[static_cast<std::size_t>(i)];
    Sig s;
    for (auto c : n.child)
      if (c >= 0) s.push_back(prev[static_cast<std::size_t>(c)]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    s.insert(s.begin(), prev[static_cast<std::size_t>(i)]);
    sigs[static_cast<std::size_t>(i)] = std::move(s);
  }
  std::size_t classes = 0;
  auto ids = canonical_ids(sigs, classes);
  if (classes == class_counts_.back()) {
    stable_ = true;
    return;
  }
  classes_.push_back(std::move(ids));
  class_counts_.push_back(classes);
}

int TypeEngine::effective_rank(int rank) {
  if (rank < 0) throw DomainError("rank must be non-negative");
  while (static_cast<int>(classes_.size()) - 1 < rank && !stable_) refine_once();
  return std::min(rank, static_cast<int>(classes_.size()) - 1);
}

int TypeEngine::stable_rank() {
  while (!stable_) refine_once();
  return static_cast<int>(classes_.size()) - 1;
}

TypeEngine::NodeId TypeEngine::node(std::size_t algebra, std::span<const Element> injective) const {
  auto id = static_cast<std::int64_t>(roots_.at(algebra));
  for (auto e : injective) {
    const auto& n = nodes_[static_cast<std::size_t>(id)];
    if (e >= n.child.size() || n.child[e] < 0) throw DomainError("tuple is not injective over the algebra");
    id = n.child[e];
  }
  return static_cast<NodeId>(id);
}

TypeEngine::ClassId TypeEngine::node_class(NodeId n, int rank) { return classes_[static_cast<std::size_t>(effective_rank(rank))].at(n); }

namespace {

std::vector<std::uint32_t> equality_pattern(std::span<const Element> values) {
  std::vector<std::uint32_t> p(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    p[i] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j < i; ++j)
      if (values[j] == values[i]) {
        p[i] = static_cast<std::uint32_t>(j);
        break;
      }
  }
  return p;
}

std::vector<Element> dedup(std::span<const Element> values, const std::vector<std::uint32_t>& pattern) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (pattern[i] == i) out.push_back(values[i]);
  return out;
}

}  // namespace

TypeEngine::PointType TypeEngine::point_type(std::size_t algebra, std::span<const Element> values, int rank) {
  PointType t;
  t.pattern = equality_pattern(values);
  t.cls = node_class(node(algebra, dedup(values, t.pattern)), rank);
  return t;
}

// Builds formulas over the sort of a fixed point and its extension sorts.
struct TypeEngine::Builder {
  TypeEngine& engine;
  SortPtr base;
  std::vector<int> varmap;  // deduplicated coordinate -> variable of base
  std::vector<SortPtr> ext;
  std::vector<SortPtr>* extra;
  std::map<std::tuple<NodeId, NodeId, int>, Formula> memo;

  const SignaturePtr& sig() const { return engine.algebras_.front().signature(); }

  const SortPtr& sort_at(std::size_t j) {
    while (ext.size() <= j) {
      auto vars = ext.back()->vars();
      std::string name;
      for (int k = static_cast<int>(ext.size());; ++k) {
        name = "z" + std::to_string(k);
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) break;
      }
      vars.push_back(name);
      ext.push_back(make_sort(base->name() + "_" + std::to_string(ext.size()), std::move(vars)));
      if (extra) extra->push_back(ext.back());
    }
    return ext[j];
  }

  int var_index(std::size_t i) const {
    const auto m0 = varmap.size();
    return i < m0 ? varmap[i] : static_cast<int>(base->size() + (i - m0));
  }

  Formula conj(const std::vector<Formula>& parts, const SortPtr& sort) {
    if (parts.empty()) {
      auto v = Term::variable(sig(), sort, 0);
      return Formula::equality(v, v);
    }
    Formula f = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) f = Formula::conjunction(f, parts[i]);
    return f;
  }

  // E z. body over sort j+1, then renamed back to sort j.
  Formula exists_new(const Formula& body, std::size_t j) {
    const auto& upper = sort_at(j + 1);
    const auto& lower = sort_at(j);
    auto quantified = Formula::exists(static_cast<int>(upper->size()) - 1, body);
    std::vector<Term> images;
    for (std::size_t i = 0; i < lower->size(); ++i) images.push_back(Term::variable(sig(), lower, static_cast<int>(i)));
    images.push_back(Term::variable(sig(), lower, 0));
    return Formula::substitute(Substitution(upper, lower, std::move(images)), quantified);
  }

  Formula atom(NodeId c, NodeId d, std::size_t j) {
    std::vector<Emission> trace;
    auto sc = engine.label_sequence(engine.nodes_[c], &trace);
    auto sd = engine.label_sequence(engine.nodes_[d], nullptr);
    const auto& sort = sort_at(j);
    const auto m = engine.nodes_[c].tuple.size();
    std::vector<Term> rep;
    for (std::size_t i = 0; i < m; ++i) rep.push_back(Term::variable(sig(), sort, var_index(i)));
    for (std::size_t p = 1; p < sc.size(); ++p) {
      const auto& e = trace[p - 1];
      std::vector<Term> args;
      for (auto l : e.args) args.push_back(rep[l]);
      auto t = Term::apply(sig(), sort, e.op, args);
      if (p >= sd.size() || sc[p] != sd[p]) {
        if (sc[p] < rep.size()) return Formula::equality(t, rep[sc[p]]);
        return Formula::negation(Formula::equality(t, rep[sd[p]]));
      }
      if (sc[p] == rep.size()) rep.push_back(t);
    }
    throw Error("internal: rank 0 classes differ but label sequences agree");
  }

  Formula delta(NodeId c, NodeId d, std::size_t j, int rank) {
    auto key = std::make_tuple(c, d, rank);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int r0 = 0;
    while (r0 <= rank && engine.classes_[static_cast<std::size_t>(r0)][c] == engine.classes_[static_cast<std::size_t>(r0)][d]) ++r0;
    if (r0 > rank) throw Error("internal: nodes agree at the requested rank");
    Formula out = r0 == 0 ? atom(c, d, j) : step(c, d, j, r0 - 1);
    memo.emplace(key, out);
    return out;
  }

  std::map<ClassId, NodeId> children(NodeId n, int r) {
    std::map<ClassId, NodeId> out;
    for (auto ch : engine.nodes_[n].child)
      if (ch >= 0) out.emplace(engine.classes_[static_cast<std::size_t>(r)][static_cast<std::size_t>(ch)], static_cast<NodeId>(ch));
    return out;
  }

  // c and d agree at rank r and differ at r+1.
  Formula step(NodeId c, NodeId d, std::size_t j, int r) {
    auto cc = children(c, r);
    auto cd = children(d, r);
    const auto& upper = sort_at(j + 1);
    const auto m = engine.nodes_[c].tuple.size();
    auto z = Term::variable(sig(), upper, static_cast<int>(upper->size()) - 1);
    auto body = [&](NodeId from, const std::map<ClassId, NodeId>& against) {
      std::vector<Formula> parts;
      for (const auto& [cls, other] : against) parts.push_back(delta(from, other, j + 1, r));
      for (std::size_t i = 0; i < m; ++i)
        parts.push_back(Formula::negation(Formula::equality(z, Term::variable(sig(), upper, var_index(i)))));
      return conj(parts, upper);
    };
    for (const auto& [cls, node] : cc)
      if (!cd.count(cls)) return exists_new(body(node, cd), j);
    for (const auto& [cls, node] : cd)
      if (!cc.count(cls)) return Formula::negation(exists_new(body(node, cc), j));
    throw Error("internal: child classes agree");
  }
};

namespace {

// Formula over `sort` true when coordinates (i, k) relate as in mu and not as in nu.
std::optional<Formula> pattern_atom(const SignaturePtr& sig, const SortPtr& sort, const std::vector<std::uint32_t>& pm,
                                    const std::vector<std::uint32_t>& pn) {
  for (std::size_t i = 0; i < pm.size(); ++i)
    for (std::size_t k = 0; k < i; ++k) {
      bool em = pm[i] == pm[k], en = pn[i] == pn[k];
      if (em == en) continue;
      auto f = Formula::equality(Term::variable(sig, sort, static_cast<int>(i)), Term::variable(sig, sort, static_cast<int>(k)));
      return em ? f : Formula::negation(f);
    }
  return std::nullopt;
}

}  // namespace

Formula TypeEngine::distinguishing_formula(const SortPtr& sort, std::size_t a, std::span<const Element> mu,
                                           std::size_t b, std::span<const Element> nu, int rank,
                                           std::vector<SortPtr>* extra_sorts) {
  if (mu.size() != sort->size() || nu.size() != sort->size()) throw SortError("point does not match sort " + sort->name());
  rank = effective_rank(rank);
  auto tm = point_type(a, mu, rank), tn = point_type(b, nu, rank);
  if (tm == tn) throw DomainError("points share their type at rank " + std::to_string(rank));
  const auto& sig = algebras_.front().signature();
  if (auto f = pattern_atom(sig, sort, tm.pattern, tn.pattern)) return *f;
  Builder builder{*this, sort, {}, {sort}, extra_sorts, {}};
  for (std::size_t i = 0; i < tm.pattern.size(); ++i)
    if (tm.pattern[i] == i) builder.varmap.push_back(static_cast<int>(i));
  return builder.delta(node(a, dedup(mu, tm.pattern)), node(b, dedup(nu, tn.pattern)), 0, rank);
}

Formula TypeEngine::separating_sentence(const SortPtr& sort, std::size_t a, std::span<const Element> mu, std::size_t b,
                                        int rank, std::vector<SortPtr>* extra_sorts) {
  if (mu.size() != sort->size()) throw SortError("point does not match sort " + sort->name());
  rank = effective_rank(rank);
  const auto& hb = algebras_.at(b);
  const auto& sig = algebras_.front().signature();
  auto tm = point_type(a, mu, rank);
  const auto mu_node = node(a, dedup(mu, tm.pattern));

  std::map<PointType, std::vector<Element>> others;
  const auto space = space_size(hb, *sort);
  for (PointIndex i = 0; i < space; ++i) {
    auto values = point_values(hb.size(), sort->size(), i);
    auto t = point_type(b, values, rank);
    if (t == tm) throw DomainError("a point of " + hb.name() + " shares the type at rank " + std::to_string(rank));
    others.emplace(std::move(t), std::move(values));
  }

  Builder builder{*this, sort, {}, {sort}, extra_sorts, {}};
  for (std::size_t i = 0; i < tm.pattern.size(); ++i)
    if (tm.pattern[i] == i) builder.varmap.push_back(static_cast<int>(i));
  std::vector<Formula> parts;
  for (const auto& [t, values] : others) {
    if (auto f = pattern_atom(sig, sort, tm.pattern, t.pattern)) {
      parts.push_back(*f);
      continue;
    }
    parts.push_back(builder.delta(mu_node, node(b, dedup(values, t.pattern)), 0, rank));
  }
  auto f = builder.conj(parts, sort);
  for (int v = static_cast<int>(sort->size()) - 1; v >= 0; --v) f = Formula::exists(v, f);
  return f;
}

}  // namespace halgeo
