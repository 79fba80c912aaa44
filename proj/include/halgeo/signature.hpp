#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace halgeo {

struct OpSymbol {
  std::string name;
  int arity = 0;

  bool operator==(const OpSymbol&) const = default;
};

/// Operation symbols of a variety, in declaration order. The index of a
/// symbol is its position in that order and is what terms and tables store.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpSymbol> ops);

  const std::vector<OpSymbol>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  const OpSymbol& op(int index) const { return ops_.at(static_cast<std::size_t>(index)); }
  std::optional<int> find(std::string_view name) const;
  int max_arity() const;

  std::string to_string() const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<OpSymbol> ops_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::vector<OpSymbol> ops);

/// True when both pointers denote equal signatures.
bool same_signature(const SignaturePtr& a, const SignaturePtr& b);

bool is_identifier(std::string_view text);

}  // namespace halgeo
