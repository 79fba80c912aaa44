#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "halgeo/signature.hpp"
#include "halgeo/sort.hpp"
#include "halgeo/term.hpp"

namespace halgeo {

struct VarietySpec;

using Element = std::uint32_t;
using PointIndex = std::uint64_t;

/// A finite algebra given by total operation tables. Copies share the
/// underlying tables; two handles denote the same algebra iff `same_as`.
class FiniteAlgebra {
 public:
  /// `tables[op]` lists results in row-major order of the argument tuple
  /// (first argument most significant). Nullary tables have one entry.
  FiniteAlgebra(std::string name, SignaturePtr sig, std::vector<std::string> elements,
                std::vector<std::vector<Element>> tables);

  const std::string& name() const { return data_->name; }
  const SignaturePtr& signature() const { return data_->sig; }
  std::size_t size() const { return data_->elements.size(); }
  const std::vector<std::string>& elements() const { return data_->elements; }
  const std::string& element_name(Element e) const { return data_->elements.at(e); }
  std::optional<Element> find_element(std::string_view name) const;
  const std::vector<Element>& table(int op) const { return data_->tables[static_cast<std::size_t>(op)]; }

  Element apply(int op, std::span<const Element> args) const;

  bool same_as(const FiniteAlgebra& other) const { return data_ == other.data_; }

  /// Throws DomainError naming the first failing identity and assignment.
  void check_identities(const VarietySpec& spec) const;

 private:
  struct Data {
    std::string name;
    SignaturePtr sig;
    std::vector<std::string> elements;
    std::vector<std::vector<Element>> tables;
  };
  std::shared_ptr<const Data> data_;
};

/// A point mu: X -> H.
struct Point {
  SortPtr sort;
  std::vector<Element> values;

  bool operator==(const Point& o) const { return same_sort(sort, o.sort) && values == o.values; }
};

/// Largest point space the library will materialise. Defaults to 2^24.
std::uint64_t point_cap();
void set_point_cap(std::uint64_t cap);
constexpr std::uint64_t kDefaultPointCap = std::uint64_t{1} << 24;

/// |H|^|X|, throwing CapExceeded past the cap.
std::uint64_t space_size(std::size_t algebra_size, std::size_t vars);
std::uint64_t space_size(const FiniteAlgebra& h, const VarSort& sort);

/// index = sum_i values[i] * |H|^i (first variable least significant).
PointIndex point_index(std::size_t algebra_size, std::span<const Element> values);
std::vector<Element> point_values(std::size_t algebra_size, std::size_t vars, PointIndex index);

PointIndex point_index(const FiniteAlgebra& h, const Point& mu);
Point point_at(const FiniteAlgebra& h, const SortPtr& sort, PointIndex index);

std::vector<Point> enumerate_points(const FiniteAlgebra& h, const SortPtr& sort);

/// "(x=e0, y=e1)"
std::string format_point(const FiniteAlgebra& h, const Point& mu);
/// Accepts "x=a, y=b" or "x=a y=b", parentheses optional; every variable of
/// the sort must be assigned exactly once.
Point parse_point(const FiniteAlgebra& h, const SortPtr& sort, std::string_view text);

/// Value of w under the homomorphic extension of mu.
Element eval_term(const FiniteAlgebra& h, const Point& mu, const Term& w);
/// Same, with the assignment given positionally; no sort checks.
Element eval_term(const FiniteAlgebra& h, std::span<const Element> assignment, const Term& w);

/// (w, w2) in Ker(mu).
bool kernel_contains(const FiniteAlgebra& h, const Point& mu, const Term& w, const Term& w2);

/// The point over X obtained by pulling a point over Y back along s: X -> Y,
/// i.e. x |-> mu(s(x)).
class Substitution;
Point pull_back(const FiniteAlgebra& h, const Substitution& s, const Point& mu);

void require_same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b);
void require_term_signature(const FiniteAlgebra& h, const Term& w);

}  // namespace halgeo
