#include "halgeo/point_set.hpp"

#include <bit>
#include <sstream>

#include "halgeo/error.hpp"
#include "halgeo/morphisms.hpp"

namespace halgeo {

using kernels::Mask;
using kernels::Word;

namespace {

void clear_tail(Mask& m, std::uint64_t space) {
  if (m.empty()) return;
  const auto used = space % kernels::kWordBits;
  if (used) m.back() &= (Word{1} << used) - 1;
}

}  // namespace

PointSet PointSet::bottom(const FiniteAlgebra& h, const SortPtr& sort) {
  const auto space = space_size(h, *sort);
  return PointSet(h, sort, space, Mask(kernels::word_count(space), 0));
}

PointSet PointSet::top(const FiniteAlgebra& h, const SortPtr& sort) {
  const auto space = space_size(h, *sort);
  Mask m(kernels::word_count(space), ~Word{0});
  clear_tail(m, space);
  return PointSet(h, sort, space, std::move(m));
}

PointSet PointSet::from_indices(const FiniteAlgebra& h, const SortPtr& sort, std::span<const PointIndex> indices) {
  auto out = bottom(h, sort);
  for (auto i : indices) {
    if (i >= out.space_) throw DomainError("point index " + std::to_string(i) + " outside the space");
    kernels::set_bit(out.mask_, i);
  }
  return out;
}

PointSet PointSet::from_mask(const FiniteAlgebra& h, const SortPtr& sort, Mask mask) {
  const auto space = space_size(h, *sort);
  if (mask.size() != kernels::word_count(space)) throw DomainError("mask length does not match the point space");
  clear_tail(mask, space);
  return PointSet(h, sort, space, std::move(mask));
}

bool PointSet::contains(const Point& mu) const {
  if (!same_sort(mu.sort, sort_)) throw SortError("point is not over sort " + sort_->name());
  return contains(point_index(algebra_, mu));
}

std::size_t PointSet::count() const {
  std::size_t n = 0;
  for (auto w : mask_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool PointSet::empty() const {
  for (auto w : mask_)
    if (w) return false;
  return true;
}

bool PointSet::is_top() const { return count() == space_; }

std::vector<PointIndex> PointSet::indices() const {
  std::vector<PointIndex> out;
  for (std::size_t wi = 0; wi < mask_.size(); ++wi) {
    auto w = mask_[wi];
    while (w) {
      out.push_back(wi * kernels::kWordBits + static_cast<PointIndex>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  for (auto i : indices()) out.push_back(point_at(algebra_, sort_, i));
  return out;
}

bool PointSet::subset_of(const PointSet& other) const {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] & ~other.mask_[i]) return false;
  return true;
}

std::string PointSet::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t wi = mask_.size(); wi-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) {
      auto d = (mask_[wi] >> (nib * 4)) & 0xf;
      if (out.empty() && d == 0) continue;
      out += digits[d];
    }
  }
  return out.empty() ? "0" : out;
}

std::string PointSet::to_string() const {
  std::ostringstream out;
  out << "points " << count() << " of " << space_ << '\n';
  for (auto i : indices()) out << "  " << format_point(algebra_, point_at(algebra_, sort_, i)) << '\n';
  out << "mask " << hex() << '\n';
  return out.str();
}

bool operator==(const PointSet& a, const PointSet& b) {
  return a.algebra_.same_as(b.algebra_) && same_sort(a.sort_, b.sort_) && a.mask_ == b.mask_;
}

void require_compatible(const PointSet& a, const PointSet& b) {
  if (!a.algebra().same_as(b.algebra()))
    throw SignatureError("point sets over different algebras ('" + a.algebra().name() + "', '" +
                         b.algebra().name() + "')");
  if (!same_sort(a.sort(), b.sort()))
    throw SortError("point sets over different sorts (" + a.sort()->name() + ", " + b.sort()->name() + ")");
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  require_compatible(a, b);
  auto m = a.mask_;
  for (std::size_t i = 0; i < m.size(); ++i) m[i] |= b.mask_[i];
  return PointSet(a.algebra_, a.sort_, a.space_, std::move(m));
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  require_compatible(a, b);
  auto m = a.mask_;
  for (std::size_t i = 0; i < m.size(); ++i) m[i] &= b.mask_[i];
  return PointSet(a.algebra_, a.sort_, a.space_, std::move(m));
}

PointSet complement(const PointSet& a) {
  auto m = a.mask_;
  for (auto& w : m) w = ~w;
  clear_tail(m, a.space_);
  return PointSet(a.algebra_, a.sort_, a.space_, std::move(m));
}

PointSet equality_set(const FiniteAlgebra& h, const SortPtr& sort, const Term& w, const Term& w2) {
  for (const auto* t : {&w, &w2}) {
    if (!same_sort(t->sort(), sort))
      throw SortError("term " + t->to_string() + " is over sort " + t->sort()->name() + ", expected " + sort->name());
    require_term_signature(h, *t);
  }
  space_size(h, *sort);
  Mask m;
  kernels::equality_mask(h, sort->size(), w, w2, m);
  return PointSet::from_mask(h, sort, std::move(m));
}

PointSet exists_x(const PointSet& a, std::string_view x) {
  auto var = a.sort()->index_of(x);
  if (!var) throw SortError("variable '" + std::string(x) + "' not in sort " + a.sort()->name());
  return exists_x(a, *var);
}

PointSet exists_x(const PointSet& a, int var) {
  if (var < 0 || static_cast<std::size_t>(var) >= a.sort()->size())
    throw SortError("variable index out of range for sort " + a.sort()->name());
  Mask m;
  kernels::exists_mask(a.algebra().size(), a.sort()->size(), static_cast<std::size_t>(var), a.mask(), m);
  return PointSet::from_mask(a.algebra(), a.sort(), std::move(m));
}

PointSet transport(const Substitution& s, const PointSet& a) {
  if (!same_sort(s.domain(), a.sort()))
    throw SortError("substitution from " + s.domain()->name() + " cannot transport a set over " + a.sort()->name());
  require_term_signature(a.algebra(), s.images().front());
  space_size(a.algebra(), *s.codomain());
  Mask m;
  kernels::transport_mask(a.algebra(), s.codomain()->size(), s.images(), s.domain()->size(), a.mask(), m);
  return PointSet::from_mask(a.algebra(), s.codomain(), std::move(m));
}

PointSet act(const std::vector<Element>& sigma, const PointSet& a) {
  std::vector<PointIndex> image;
  for (auto i : a.indices()) image.push_back(act_on_point(sigma, a.algebra().size(), a.sort()->size(), i));
  return PointSet::from_indices(a.algebra(), a.sort(), image);
}

}  // namespace halgeo
