#include "halgeo/signature.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "halgeo/error.hpp"

namespace halgeo {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = static_cast<unsigned char>(text.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Signature::Signature(std::vector<OpSymbol> ops) : ops_(std::move(ops)) {
  std::set<std::string, std::less<>> seen;
  for (const auto& op : ops_) {
    if (!is_identifier(op.name)) throw SignatureError("invalid operation name '" + op.name + "'");
    if (op.arity < 0) throw SignatureError("negative arity for '" + op.name + "'");
    if (!seen.insert(op.name).second) throw SignatureError("duplicate operation '" + op.name + "'");
  }
}

std::optional<int> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

int Signature::max_arity() const {
  int best = 0;
  for (const auto& op : ops_) best = std::max(best, op.arity);
  return best;
}

std::string Signature::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (i) out << ", ";
    out << ops_[i].name << '/' << ops_[i].arity;
  }
  out << '}';
  return out.str();
}

SignaturePtr make_signature(std::vector<OpSymbol> ops) {
  return std::make_shared<const Signature>(std::move(ops));
}

bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace halgeo
