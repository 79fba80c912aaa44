#include "halgeo/morphisms.hpp"

#include <functional>

#include "halgeo/error.hpp"

namespace halgeo {

namespace {

constexpr Element kUnset = ~Element{0};

// Every table row whose arguments and result are all mapped must commute
// with the map.
bool consistent(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const ElementMap& map) {
  const auto n = h1.size();
  const auto& sig = *h1.signature();
  std::vector<Element> a1, a2;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const int k = sig.op(static_cast<int>(op)).arity;
    const auto& t1 = h1.table(static_cast<int>(op));
    a1.assign(static_cast<std::size_t>(k), 0);
    a2.assign(static_cast<std::size_t>(k), 0);
    for (std::size_t row = 0; row < t1.size(); ++row) {
      auto r = row;
      bool mapped = true;
      for (int j = k - 1; j >= 0 && mapped; --j) {
        auto x = static_cast<Element>(r % n);
        r /= n;
        if (map[x] == kUnset) mapped = false;
        a2[static_cast<std::size_t>(j)] = map[x];
      }
      if (!mapped) continue;
      auto res = map[t1[row]];
      if (res == kUnset) continue;
      if (h2.apply(static_cast<int>(op), a2) != res) return false;
    }
  }
  return true;
}

void search(const FiniteAlgebra& h1, const FiniteAlgebra& h2, bool all, std::vector<ElementMap>& found) {
  const auto n = h1.size();
  ElementMap map(n, kUnset);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t next) -> bool {
    if (next == n) {
      found.push_back(map);
      return !all;
    }
    for (Element cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      map[next] = cand;
      used[cand] = true;
      if (consistent(h1, h2, map) && go(next + 1)) return true;
      used[cand] = false;
      map[next] = kUnset;
    }
    return false;
  };
  go(0);
}

}  // namespace

std::vector<ElementMap> automorphism_group(const FiniteAlgebra& h) {
  std::vector<ElementMap> out;
  search(h, h, true, out);
  return out;
}

std::optional<ElementMap> isomorphism_search(const FiniteAlgebra& h1, const FiniteAlgebra& h2) {
  require_same_signature(h1, h2);
  if (h1.size() != h2.size()) return std::nullopt;
  std::vector<ElementMap> out;
  search(h1, h2, false, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

bool is_homomorphism(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const ElementMap& map) {
  if (map.size() != h1.size()) return false;
  for (auto v : map)
    if (v >= h2.size()) return false;
  return consistent(h1, h2, map);
}

PointIndex act_on_point(const ElementMap& sigma, std::size_t algebra_size, std::size_t vars, PointIndex index) {
  PointIndex out = 0, weight = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    out += sigma[index % algebra_size] * weight;
    index /= algebra_size;
    weight *= algebra_size;
  }
  return out;
}

}  // namespace halgeo
