#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace halgeo {

/// A finite, ordered set of variables. The order fixes point indexing:
/// the first variable is the least significant digit.
class VarSort {
 public:
  VarSort(std::string name, std::vector<std::string> vars);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  const std::string& var(int index) const { return vars_.at(static_cast<std::size_t>(index)); }
  std::optional<int> index_of(std::string_view var) const;
  bool contains(std::string_view var) const { return index_of(var).has_value(); }

  /// "X = (x, y)"
  std::string to_string() const;

  bool operator==(const VarSort&) const = default;

 private:
  std::string name_;
  std::vector<std::string> vars_;
};

using SortPtr = std::shared_ptr<const VarSort>;

SortPtr make_sort(std::string name, std::vector<std::string> vars);

bool same_sort(const SortPtr& a, const SortPtr& b);

/// Registered sorts by name. Sorts with equal variable lists but different
/// names are kept apart.
class SortRegistry {
 public:
  void add(SortPtr sort);
  SortPtr find(std::string_view name) const;
  SortPtr get(std::string_view name) const;
  std::vector<SortPtr> all() const;
  bool empty() const { return sorts_.empty(); }

 private:
  std::map<std::string, SortPtr, std::less<>> sorts_;
};

}  // namespace halgeo
