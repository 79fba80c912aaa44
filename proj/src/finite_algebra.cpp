#include "halgeo/finite_algebra.hpp"

#include <atomic>
#include <cctype>
#include <set>
#include <sstream>

#include "halgeo/error.hpp"
#include "halgeo/substitution.hpp"
#include "halgeo/variety.hpp"

namespace halgeo {

namespace {

std::atomic<std::uint64_t> g_point_cap{kDefaultPointCap};

std::size_t table_size(std::size_t n, int arity) {
  std::size_t rows = 1;
  for (int i = 0; i < arity; ++i) rows *= n;
  return rows;
}

Element eval_node(const FiniteAlgebra& h, std::span<const Element> assignment, const Term::Node& n) {
  if (n.op < 0) return assignment[static_cast<std::size_t>(n.var)];
  const auto& table = h.table(n.op);
  std::size_t idx = 0;
  for (const auto& k : n.kids) idx = idx * h.size() + eval_node(h, assignment, *k);
  return table[idx];
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, SignaturePtr sig, std::vector<std::string> elements,
                             std::vector<std::vector<Element>> tables) {
  if (!sig) throw SignatureError("algebra without signature");
  if (elements.empty()) throw DomainError("algebra '" + name + "' has no elements");
  std::set<std::string, std::less<>> seen;
  for (const auto& e : elements)
    if (!seen.insert(e).second) throw FormatError("duplicate element '" + e + "' in algebra '" + name + "'");
  if (tables.size() != sig->size())
    throw SignatureError("algebra '" + name + "' has " + std::to_string(tables.size()) + " tables for " +
                         std::to_string(sig->size()) + " operations");
  const auto n = elements.size();
  for (std::size_t op = 0; op < tables.size(); ++op) {
    const auto& sym = sig->op(static_cast<int>(op));
    if (tables[op].size() != table_size(n, sym.arity))
      throw FormatError("table of '" + sym.name + "' in algebra '" + name + "' is not total");
    for (auto v : tables[op])
      if (v >= n) throw FormatError("table of '" + sym.name + "' leaves the carrier");
  }
  data_ = std::make_shared<const Data>(Data{std::move(name), std::move(sig), std::move(elements), std::move(tables)});
}

std::optional<Element> FiniteAlgebra::find_element(std::string_view name) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (data_->elements[i] == name) return static_cast<Element>(i);
  return std::nullopt;
}

Element FiniteAlgebra::apply(int op, std::span<const Element> args) const {
  std::size_t idx = 0;
  for (auto a : args) idx = idx * size() + a;
  return table(op)[idx];
}

void FiniteAlgebra::check_identities(const VarietySpec& spec) const {
  if (!same_signature(spec.signature, signature()))
    throw SignatureError("algebra '" + name() + "' does not match the variety signature");
  if (spec.identities.empty()) return;
  const auto& sort = spec.identity_sort;
  const auto total = space_size(*this, *sort);
  for (PointIndex i = 0; i < total; ++i) {
    auto values = point_values(size(), sort->size(), i);
    for (const auto& [lhs, rhs] : spec.identities) {
      if (eval_term(*this, values, lhs) != eval_term(*this, values, rhs)) {
        throw DomainError("algebra '" + name() + "' violates identity " + lhs.to_string() + " == " +
                          rhs.to_string() + " at " + format_point(*this, Point{sort, values}));
      }
    }
  }
}

std::uint64_t point_cap() { return g_point_cap.load(); }
void set_point_cap(std::uint64_t cap) { g_point_cap.store(cap); }

std::uint64_t space_size(std::size_t algebra_size, std::size_t vars) {
  const auto cap = point_cap();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    if (total > cap / std::max<std::size_t>(algebra_size, 1))
      throw CapExceeded("point space " + std::to_string(algebra_size) + "^" + std::to_string(vars) +
                        " exceeds the cap of " + std::to_string(cap) + " points");
    total *= algebra_size;
  }
  if (total > cap)
    throw CapExceeded("point space " + std::to_string(algebra_size) + "^" + std::to_string(vars) +
                      " exceeds the cap of " + std::to_string(cap) + " points");
  return total;
}

std::uint64_t space_size(const FiniteAlgebra& h, const VarSort& sort) { return space_size(h.size(), sort.size()); }

PointIndex point_index(std::size_t algebra_size, std::span<const Element> values) {
  PointIndex idx = 0;
  for (std::size_t i = values.size(); i-- > 0;) idx = idx * algebra_size + values[i];
  return idx;
}

std::vector<Element> point_values(std::size_t algebra_size, std::size_t vars, PointIndex index) {
  std::vector<Element> v(vars);
  for (std::size_t i = 0; i < vars; ++i) {
    v[i] = static_cast<Element>(index % algebra_size);
    index /= algebra_size;
  }
  return v;
}

PointIndex point_index(const FiniteAlgebra& h, const Point& mu) { return point_index(h.size(), mu.values); }

Point point_at(const FiniteAlgebra& h, const SortPtr& sort, PointIndex index) {
  if (index >= space_size(h, *sort)) throw DomainError("point index " + std::to_string(index) + " out of range");
  return Point{sort, point_values(h.size(), sort->size(), index)};
}

std::vector<Point> enumerate_points(const FiniteAlgebra& h, const SortPtr& sort) {
  const auto total = space_size(h, *sort);
  std::vector<Point> out;
  out.reserve(total);
  for (PointIndex i = 0; i < total; ++i) out.push_back(Point{sort, point_values(h.size(), sort->size(), i)});
  return out;
}

std::string format_point(const FiniteAlgebra& h, const Point& mu) {
  std::string out = "(";
  for (std::size_t i = 0; i < mu.values.size(); ++i) {
    if (i) out += ", ";
    out += mu.sort->var(static_cast<int>(i));
    out += '=';
    out += h.element_name(mu.values[i]);
  }
  out += ')';
  return out;
}

Point parse_point(const FiniteAlgebra& h, const SortPtr& sort, std::string_view text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == ',' || c == '(' || c == ')') ? ' ' : c;
  std::istringstream in(cleaned);
  std::vector<std::optional<Element>> values(sort->size());
  std::string item;
  while (in >> item) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw SyntaxError("expected var=element in point, got '" + item + "'");
    auto var = item.substr(0, eq);
    auto elem = item.substr(eq + 1);
    auto vi = sort->index_of(var);
    if (!vi) throw SortError("variable '" + var + "' not in sort " + sort->name());
    auto e = h.find_element(elem);
    if (!e) throw DomainError("element '" + elem + "' not in algebra '" + h.name() + "'");
    if (values[static_cast<std::size_t>(*vi)]) throw SyntaxError("variable '" + var + "' assigned twice");
    values[static_cast<std::size_t>(*vi)] = *e;
  }
  Point mu{sort, {}};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) throw SyntaxError("point leaves variable '" + sort->var(static_cast<int>(i)) + "' unassigned");
    mu.values.push_back(*values[i]);
  }
  return mu;
}

void require_same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!same_signature(a.signature(), b.signature()))
    throw SignatureError("algebras '" + a.name() + "' " + a.signature()->to_string() + " and '" + b.name() +
                         "' " + b.signature()->to_string() + " have different signatures");
}

void require_term_signature(const FiniteAlgebra& h, const Term& w) {
  if (!same_signature(h.signature(), w.signature()))
    throw SignatureError("term " + w.to_string() + " does not use the signature of algebra '" + h.name() + "'");
}

Element eval_term(const FiniteAlgebra& h, const Point& mu, const Term& w) {
  if (!same_sort(mu.sort, w.sort()))
    throw SortError("term " + w.to_string() + " is over sort " + w.sort()->name() + ", point is over " +
                    mu.sort->name());
  require_term_signature(h, w);
  return eval_node(h, mu.values, *w.node());
}

Element eval_term(const FiniteAlgebra& h, std::span<const Element> assignment, const Term& w) {
  return eval_node(h, assignment, *w.node());
}

bool kernel_contains(const FiniteAlgebra& h, const Point& mu, const Term& w, const Term& w2) {
  return eval_term(h, mu, w) == eval_term(h, mu, w2);
}

Point pull_back(const FiniteAlgebra& h, const Substitution& s, const Point& mu) {
  if (!same_sort(mu.sort, s.codomain()))
    throw SortError("point over " + mu.sort->name() + " cannot be pulled back along a substitution into " +
                    s.codomain()->name());
  Point out{s.domain(), {}};
  out.values.reserve(s.images().size());
  for (const auto& t : s.images()) out.values.push_back(eval_term(h, mu, t));
  return out;
}

}  // namespace halgeo
