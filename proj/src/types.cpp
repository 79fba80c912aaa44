#include "halgeo/types.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "halgeo/congruence.hpp"
#include "halgeo/error.hpp"
#include "halgeo/kernels.hpp"
#include "halgeo/morphisms.hpp"
#include "halgeo/type_engine.hpp"

namespace halgeo {

std::size_t Partition::class_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < class_of.size(); ++i)
    if (class_of[i] == i) ++n;
  return n;
}

std::vector<std::vector<PointIndex>> Partition::classes() const {
  std::map<PointIndex, std::vector<PointIndex>> by_id;
  for (std::size_t i = 0; i < class_of.size(); ++i) by_id[class_of[i]].push_back(i);
  std::vector<std::vector<PointIndex>> out;
  for (auto& [id, members] : by_id) out.push_back(std::move(members));
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (class_of.size() != coarser.class_of.size()) throw SortError("partitions of different point spaces");
  for (std::size_t i = 0; i < class_of.size(); ++i)
    if (coarser.class_of[i] != coarser.class_of[class_of[i]]) return false;
  return true;
}

Partition orbit_partition(const FiniteAlgebra& h, const SortPtr& sort) {
  const auto space = space_size(h, *sort);
  Partition p{h, sort, -1, {}};
  p.class_of.resize(space);
  auto group = automorphism_group(h);
  kernels::orbit_minima(h.size(), sort->size(), group, p.class_of);
  return p;
}

namespace {

// Canonical ids from arbitrary keys: each point gets the least index sharing its key.
template <class Key>
std::vector<PointIndex> canonical_classes(const std::vector<Key>& keys) {
  std::map<Key, PointIndex> first;
  std::vector<PointIndex> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) out[i] = first.emplace(keys[i], i).first->second;
  return out;
}

std::vector<TypeEngine::PointType> point_types(TypeEngine& engine, std::size_t a, const SortPtr& sort, int rank) {
  const auto& h = engine.algebra(a);
  const auto space = space_size(h, *sort);
  std::vector<TypeEngine::PointType> out;
  out.reserve(space);
  for (PointIndex i = 0; i < space; ++i) out.push_back(engine.point_type(a, point_values(h.size(), sort->size(), i), rank));
  return out;
}

}  // namespace

Partition type_partition(const FiniteAlgebra& h, const SortPtr& sort, int rank, int term_depth) {
  if (rank < 0) throw DomainError("rank must be non-negative");
  space_size(h, *sort);
  TypeEngine engine({h}, term_depth);
  return Partition{h, sort, rank, canonical_classes(point_types(engine, 0, sort, rank))};
}

bool same_type_cross(const FiniteAlgebra& h1, const Point& mu, const FiniteAlgebra& h2, const Point& nu, int rank,
                     int term_depth) {
  require_same_signature(h1, h2);
  if (!same_sort(mu.sort, nu.sort)) throw SortError("points of different sorts");
  TypeEngine engine({h1, h2}, term_depth);
  return engine.point_type(0, mu.values, rank) == engine.point_type(1, nu.values, rank);
}

IsotypyResult isotypic_check(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const IsotypyOptions& options) {
  require_same_signature(h1, h2);
  if (options.max_vars < 1) throw DomainError("max-vars must be at least 1");
  IsotypyResult result;
  result.max_vars = options.max_vars;
  result.rank = options.rank.value_or(static_cast<int>(h1.size() + h2.size()) + options.max_vars);
  result.term_depth = options.term_depth;
  if (result.rank < 0) throw DomainError("rank must be non-negative");
  for (int n = 1; n <= options.max_vars; ++n) space_size(std::max(h1.size(), h2.size()), static_cast<std::size_t>(n));
  TypeEngine engine({h1, h2}, options.term_depth);
  const FiniteAlgebra* hs[2] = {&h1, &h2};

  // The witness is the unmatched point with the least separating rank,
  // then the smallest sort, then algebra order, then point index.
  const int top = engine.effective_rank(result.rank);
  for (int r = 0; r <= top; ++r) {
    for (int n = 1; n <= options.max_vars; ++n) {
      auto sort = standard_sort(static_cast<std::size_t>(n));
      std::vector<TypeEngine::PointType> types[2] = {point_types(engine, 0, sort, r), point_types(engine, 1, sort, r)};
      std::set<TypeEngine::PointType> present[2] = {{types[0].begin(), types[0].end()},
                                                    {types[1].begin(), types[1].end()}};
      for (std::size_t side = 0; side < 2; ++side) {
        for (std::size_t i = 0; i < types[side].size(); ++i) {
          if (present[1 - side].count(types[side][i])) continue;
          IsotypyWitness w;
          w.side = side;
          w.point = point_at(*hs[side], sort, i);
          w.separating_rank = r;
          if (options.sentence) {
            w.sorts.push_back(sort);
            w.sentence = engine.separating_sentence(sort, side, w.point.values, 1 - side, r, &w.sorts);
          }
          result.witness = std::move(w);
          return result;
        }
      }
    }
  }
  result.isotypic = true;
  return result;
}

IsotypyResult lg_equivalent(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const IsotypyOptions& options) {
  return isotypic_check(h1, h2, options);
}

HomogeneityResult homogeneity_check(const FiniteAlgebra& h, int max_vars, std::optional<int> rank, int term_depth) {
  if (max_vars < 1) throw DomainError("max-vars must be at least 1");
  HomogeneityResult result;
  result.max_vars = max_vars;
  result.rank = rank.value_or(static_cast<int>(h.size()) + max_vars);
  TypeEngine engine({h}, term_depth);
  for (int n = 1; n <= max_vars; ++n) {
    auto sort = standard_sort(static_cast<std::size_t>(n));
    const int r = rank.value_or(static_cast<int>(h.size()) + n);
    auto types = canonical_classes(point_types(engine, 0, sort, r));
    auto orbits = orbit_partition(h, sort);
    for (std::size_t i = 0; i < types.size(); ++i) {
      const auto j = types[i];
      if (orbits.class_of[i] == orbits.class_of[j]) continue;
      result.counterexample = std::make_pair(point_at(h, sort, j), point_at(h, sort, i));
      return result;
    }
  }
  result.homogeneous = true;
  return result;
}

HomogeneityResult algebraic_homogeneity_check(const FiniteAlgebra& h, int max_vars) {
  if (max_vars < 1) throw DomainError("max-vars must be at least 1");
  HomogeneityResult result;
  result.max_vars = max_vars;
  for (int n = 1; n <= max_vars; ++n) {
    auto sort = standard_sort(static_cast<std::size_t>(n));
    auto orbits = orbit_partition(h, sort);
    auto points = enumerate_points(h, sort);
    std::vector<std::size_t> sizes;
    for (const auto& p : points) sizes.push_back(presentation_size(h, sort, std::span<const Point>(&p, 1)));
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        if (orbits.class_of[i] == orbits.class_of[j] || sizes[i] != sizes[j]) continue;
        if (!congruence_equal(h, sort, std::span<const Point>(&points[i], 1), std::span<const Point>(&points[j], 1)))
          continue;
        result.counterexample = std::make_pair(points[i], points[j]);
        return result;
      }
  }
  result.homogeneous = true;
  return result;
}

FormulaSystem noetherian_reduce(const FiniteAlgebra& h, const FormulaSystem& t) {
  std::vector<Formula> kept;
  for (const auto& f : t.formulas)
    if (std::find(kept.begin(), kept.end(), f) == kept.end()) kept.push_back(f);
  std::vector<PointSet> vals;
  for (const auto& f : kept) vals.push_back(val(h, f));
  auto solve_without = [&](std::size_t skip, const std::vector<char>& alive) {
    auto out = PointSet::top(h, t.sort);
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (i != skip && alive[i]) out = set_intersection(out, vals[i]);
    return out;
  };
  std::vector<char> alive(kept.size(), 1);
  const auto target = solve_without(kept.size(), alive);
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (solve_without(i, alive) == target) alive[i] = 0;
  FormulaSystem out{t.sort, {}};
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (alive[i]) out.formulas.push_back(kept[i]);
  return out;
}

}  // namespace halgeo
