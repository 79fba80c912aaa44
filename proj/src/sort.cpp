#include "halgeo/sort.hpp"

#include <set>
#include <sstream>

#include "halgeo/error.hpp"
#include "halgeo/signature.hpp"

namespace halgeo {

VarSort::VarSort(std::string name, std::vector<std::string> vars)
    : name_(std::move(name)), vars_(std::move(vars)) {
  if (name_.empty()) throw SortError("sort name must not be empty");
  if (vars_.empty()) throw SortError("sort '" + name_ + "' has no variables");
  std::set<std::string, std::less<>> seen;
  for (const auto& v : vars_) {
    if (!is_identifier(v)) throw SortError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw SortError("duplicate variable '" + v + "' in sort '" + name_ + "'");
  }
}

std::optional<int> VarSort::index_of(std::string_view var) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) return static_cast<int>(i);
  return std::nullopt;
}

std::string VarSort::to_string() const {
  std::ostringstream out;
  out << name_ << " = (";
  for (std::size_t i = 0; i < vars_.size(); ++i) out << (i ? ", " : "") << vars_[i];
  out << ')';
  return out.str();
}

SortPtr make_sort(std::string name, std::vector<std::string> vars) {
  return std::make_shared<const VarSort>(std::move(name), std::move(vars));
}

bool same_sort(const SortPtr& a, const SortPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void SortRegistry::add(SortPtr sort) {
  auto [it, inserted] = sorts_.emplace(sort->name(), sort);
  if (!inserted && !same_sort(it->second, sort))
    throw SortError("sort '" + sort->name() + "' registered twice with different variables");
}

SortPtr SortRegistry::find(std::string_view name) const {
  auto it = sorts_.find(name);
  return it == sorts_.end() ? nullptr : it->second;
}

SortPtr SortRegistry::get(std::string_view name) const {
  auto s = find(name);
  if (!s) throw SortError("unknown sort '" + std::string(name) + "'");
  return s;
}

std::vector<SortPtr> SortRegistry::all() const {
  std::vector<SortPtr> out;
  for (const auto& [_, s] : sorts_) out.push_back(s);
  return out;
}

}  // namespace halgeo
