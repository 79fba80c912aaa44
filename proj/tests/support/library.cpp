#include "library.hpp"

#include <algorithm>

#include "halgeo/algebra_io.hpp"
#include "halgeo/error.hpp"
#include "halgeo/point_set.hpp"

namespace halgeo::testing {

std::filesystem::path data_dir() { return HALGEO_DATA_DIR; }

FiniteAlgebra load(std::string_view name) {
  return load_algebra(data_dir() / "algebras" / (std::string(name) + ".alg"));
}

std::vector<std::string> library_names() {
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir() / "algebras"))
    if (entry.path().extension() == ".alg") names.push_back(entry.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

std::vector<FiniteAlgebra> library(std::size_t max_size) {
  std::vector<FiniteAlgebra> out;
  for (const auto& n : library_names()) {
    auto h = load(n);
    if (h.size() <= max_size) out.push_back(h);
  }
  return out;
}

SortPtr sort_of(std::vector<std::string> vars, std::string name) { return make_sort(std::move(name), std::move(vars)); }

Term term(const FiniteAlgebra& h, const SortPtr& sort, std::string_view text) {
  return parse_term(text, sort, h.signature());
}

Formula formula(const FiniteAlgebra& h, const SortPtr& sort, std::string_view text) {
  SortRegistry reg;
  reg.add(sort);
  return parse_formula(text, sort, reg, h.signature());
}

Formula formula(const FiniteAlgebra& h, const SortPtr& sort, const SortRegistry& sorts, std::string_view text) {
  return parse_formula(text, sort, sorts, h.signature());
}

std::vector<std::vector<Element>> brute_automorphisms(const FiniteAlgebra& h) {
  const std::size_t n = h.size();
  std::vector<Element> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = static_cast<Element>(i);
  std::vector<std::vector<Element>> out;
  const auto& ops = h.signature()->ops();
  do {
    bool ok = true;
    for (std::size_t op = 0; ok && op < ops.size(); ++op) {
      const auto& tab = h.table(static_cast<int>(op));
      const auto arity = static_cast<std::size_t>(ops[op].arity);
      std::vector<Element> args(arity);
      for (std::size_t row = 0; ok && row < tab.size(); ++row) {
        // first argument most significant
        std::size_t r = row, moved = 0;
        for (std::size_t k = arity; k-- > 0;) {
          args[k] = static_cast<Element>(r % n);
          r /= n;
        }
        for (std::size_t k = 0; k < arity; ++k) moved = moved * n + sigma[args[k]];
        ok = sigma[tab[row]] == tab[moved];
      }
    }
    if (ok) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::uint64_t bits(const PointSet& a) {
  if (a.space() > 64) throw DomainError("bits: space over 64 points");
  return a.mask().empty() ? 0 : a.mask()[0];
}

}  // namespace halgeo::testing
