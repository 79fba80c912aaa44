#include "halgeo/congruence.hpp"

#include <unordered_map>

#include "halgeo/error.hpp"

namespace halgeo {

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<Element>& v) const {
    std::size_t h = v.size();
    for (auto e : v) h = h * 1000003u ^ e;
    return h;
  }
};

struct Closure {
  std::vector<std::vector<Element>> tuples;
  std::unordered_map<std::vector<Element>, Element, TupleHash> ids;
  std::vector<Element> generators;

  Element intern(std::vector<Element> t) {
    auto [it, inserted] = ids.emplace(t, static_cast<Element>(tuples.size()));
    if (inserted) tuples.push_back(std::move(t));
    return it->second;
  }
};

std::vector<Element> apply_componentwise(const FiniteAlgebra& h, int op, const std::vector<const std::vector<Element>*>& args,
                                         std::size_t width) {
  std::vector<Element> out(width);
  std::vector<Element> a(args.size());
  for (std::size_t c = 0; c < width; ++c) {
    for (std::size_t j = 0; j < args.size(); ++j) a[j] = (*args[j])[c];
    out[c] = h.apply(op, a);
  }
  return out;
}

Closure generate(const FiniteAlgebra& h, const SortPtr& sort, std::span<const Point> witnesses) {
  if (witnesses.empty()) throw DomainError("closed congruence of an empty point set is not defined");
  for (const auto& mu : witnesses)
    if (!same_sort(mu.sort, sort)) throw SortError("witness point is not over sort " + sort->name());
  const auto width = witnesses.size();
  Closure cl;
  for (std::size_t v = 0; v < sort->size(); ++v) {
    std::vector<Element> t(width);
    for (std::size_t c = 0; c < width; ++c) t[c] = witnesses[c].values[v];
    cl.generators.push_back(cl.intern(std::move(t)));
  }
  const auto& sig = *h.signature();
  const std::uint64_t limit = point_cap();
  std::size_t done = 0;
  while (true) {
    const std::size_t known = cl.tuples.size();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const int k = sig.op(static_cast<int>(op)).arity;
      if (k == 0) {
        if (done == 0) cl.intern(std::vector<Element>(width, h.table(static_cast<int>(op))[0]));
        continue;
      }
      std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
      std::vector<const std::vector<Element>*> args(static_cast<std::size_t>(k));
      while (true) {
        bool fresh = false;
        for (auto i : idx) fresh |= i >= done;
        if (fresh) {
          for (std::size_t j = 0; j < idx.size(); ++j) args[j] = &cl.tuples[idx[j]];
          auto t = apply_componentwise(h, static_cast<int>(op), args, width);
          cl.intern(std::move(t));
          if (cl.tuples.size() > limit)
            throw CapExceeded("presentation exceeds " + std::to_string(limit) + " elements");
        }
        int pos = k - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == known) idx[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
      }
    }
    done = known;
    if (cl.tuples.size() == known) break;
  }
  return cl;
}

}  // namespace

Element QuotientPresentation::evaluate(const Term& w) const {
  if (!same_sort(w.sort(), sort_))
    throw SortError("term " + w.to_string() + " is not over sort " + sort_->name());
  require_term_signature(image_, w);
  return eval_term(image_, generators_, w);
}

bool QuotientPresentation::contains(const Term& w, const Term& w2) const { return evaluate(w) == evaluate(w2); }

QuotientPresentation present_closed_congruence(const FiniteAlgebra& h, const SortPtr& sort,
                                               std::span<const Point> witnesses) {
  auto cl = generate(h, sort, witnesses);
  const auto g = cl.tuples.size();
  const auto& sig = *h.signature();
  std::uint64_t rows_limit = point_cap();
  std::vector<std::vector<Element>> tables;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const int k = sig.op(static_cast<int>(op)).arity;
    std::uint64_t rows = 1;
    for (int i = 0; i < k; ++i) {
      rows *= g;
      if (rows > rows_limit) throw CapExceeded("presentation tables exceed the point cap");
    }
    std::vector<Element> table(rows);
    std::vector<const std::vector<Element>*> args(static_cast<std::size_t>(k));
    for (std::uint64_t row = 0; row < rows; ++row) {
      auto r = row;
      for (int j = k - 1; j >= 0; --j) {
        args[static_cast<std::size_t>(j)] = &cl.tuples[r % g];
        r /= g;
      }
      auto t = k == 0 ? std::vector<Element>(witnesses.size(), h.table(static_cast<int>(op))[0])
                      : apply_componentwise(h, static_cast<int>(op), args, witnesses.size());
      table[row] = cl.ids.at(t);
    }
    tables.push_back(std::move(table));
  }
  std::vector<std::string> names;
  for (const auto& t : cl.tuples) {
    std::string name = "<";
    for (std::size_t c = 0; c < t.size(); ++c) {
      if (c) name += ',';
      name += h.element_name(t[c]);
    }
    names.push_back(name + ">");
  }
  FiniteAlgebra image(h.name() + "/" + sort->name(), h.signature(), names, std::move(tables));
  return QuotientPresentation(sort, {witnesses.begin(), witnesses.end()}, std::move(image), std::move(cl.generators),
                              std::move(cl.tuples));
}

std::size_t presentation_size(const FiniteAlgebra& h, const SortPtr& sort, std::span<const Point> witnesses) {
  return generate(h, sort, witnesses).tuples.size();
}

bool congruence_includes(const FiniteAlgebra& h, const SortPtr& sort, std::span<const Point> a,
                         std::span<const Point> b) {
  std::vector<Point> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  return presentation_size(h, sort, both) == presentation_size(h, sort, a);
}

bool congruence_equal(const FiniteAlgebra& h, const SortPtr& sort, std::span<const Point> a,
                      std::span<const Point> b) {
  std::vector<Point> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  const auto n = presentation_size(h, sort, both);
  return n == presentation_size(h, sort, a) && n == presentation_size(h, sort, b);
}

}  // namespace halgeo
