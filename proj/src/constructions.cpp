#include "halgeo/constructions.hpp"

#include "halgeo/error.hpp"

namespace halgeo {

SignaturePtr group_signature() {
  static const SignaturePtr sig = make_signature({{"mul", 2}, {"e", 0}});
  return sig;
}

FiniteAlgebra cyclic_group(std::size_t n, const SignaturePtr& sig) {
  if (n == 0) throw DomainError("cyclic group of order 0");
  auto mul = sig->find("mul");
  auto e = sig->find("e");
  if (!mul || !e || sig->size() != 2) throw SignatureError("cyclic_group needs the signature {mul/2, e/0}");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : i == 1 ? "g" : "g" + std::to_string(i));
  std::vector<std::vector<Element>> tables(2);
  auto& m = tables[static_cast<std::size_t>(*mul)];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.push_back(static_cast<Element>((a + b) % n));
  tables[static_cast<std::size_t>(*e)] = {0};
  return FiniteAlgebra("Z" + std::to_string(n), sig, names, tables);
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b, std::string name) {
  require_same_signature(a, b);
  const auto na = a.size(), nb = b.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) names.push_back(a.element_name(static_cast<Element>(i)) + "." +
                                                         b.element_name(static_cast<Element>(j)));
  const auto& sig = *a.signature();
  const auto n = na * nb;
  std::vector<std::vector<Element>> tables;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const int k = sig.op(static_cast<int>(op)).arity;
    std::size_t rows = 1;
    for (int i = 0; i < k; ++i) rows *= n;
    std::vector<Element> table(rows);
    std::vector<Element> xa(static_cast<std::size_t>(k)), xb(static_cast<std::size_t>(k));
    for (std::size_t row = 0; row < rows; ++row) {
      auto r = row;
      for (int j = k - 1; j >= 0; --j) {
        auto p = static_cast<Element>(r % n);
        r /= n;
        xa[static_cast<std::size_t>(j)] = static_cast<Element>(p / nb);
        xb[static_cast<std::size_t>(j)] = static_cast<Element>(p % nb);
      }
      table[row] = static_cast<Element>(a.apply(static_cast<int>(op), xa) * nb + b.apply(static_cast<int>(op), xb));
    }
    tables.push_back(std::move(table));
  }
  if (name.empty()) name = a.name() + "x" + b.name();
  return FiniteAlgebra(name, a.signature(), names, tables);
}

FiniteAlgebra relabel(const FiniteAlgebra& h, std::span<const Element> perm, std::string name) {
  const auto n = h.size();
  if (perm.size() != n) throw DomainError("relabel needs a permutation of size " + std::to_string(n));
  std::vector<Element> inv(n, static_cast<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || inv[perm[i]] != n) throw DomainError("relabel argument is not a permutation");
    inv[perm[i]] = static_cast<Element>(i);
  }
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[perm[i]] = h.element_name(static_cast<Element>(i));
  const auto& sig = *h.signature();
  std::vector<std::vector<Element>> tables;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const int k = sig.op(static_cast<int>(op)).arity;
    std::vector<Element> table(h.table(static_cast<int>(op)).size());
    std::vector<Element> args(static_cast<std::size_t>(k));
    for (std::size_t row = 0; row < table.size(); ++row) {
      auto r = row;
      for (int j = k - 1; j >= 0; --j) {
        args[static_cast<std::size_t>(j)] = inv[r % n];
        r /= n;
      }
      table[row] = perm[h.apply(static_cast<int>(op), args)];
    }
    tables.push_back(std::move(table));
  }
  if (name.empty()) name = h.name() + "'";
  return FiniteAlgebra(name, h.signature(), names, tables);
}

}  // namespace halgeo
