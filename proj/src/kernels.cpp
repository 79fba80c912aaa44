#include "halgeo/kernels.hpp"

#include <algorithm>
#include <cstdint>

namespace halgeo::kernels {

namespace {

// Digits of consecutive point indices, advanced like an odometer.
class Cursor {
 public:
  Cursor(std::size_t base, std::size_t vars, PointIndex start) : base_(base), digits_(vars) {
    for (auto& d : digits_) {
      d = static_cast<Element>(start % base);
      start /= base;
    }
  }
  const Element* data() const { return digits_.data(); }
  Element digit(std::size_t i) const { return digits_[i]; }
  void advance() {
    for (auto& d : digits_) {
      if (++d < base_) return;
      d = 0;
    }
  }

 private:
  std::size_t base_;
  std::vector<Element> digits_;
};

std::uint64_t total_points(std::size_t base, std::size_t vars) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < vars; ++i) n *= base;
  return n;
}

}  // namespace

TermProgram::TermProgram(const Term& t) {
  std::size_t depth = 0;
  auto emit = [&](auto&& self, const Term::Node& n) -> void {
    for (const auto& k : n.kids) self(self, *k);
    if (n.op < 0) {
      code_.push_back({-1, n.var});
      ++depth;
    } else {
      code_.push_back({n.op, static_cast<std::int32_t>(n.kids.size())});
      depth = depth - n.kids.size() + 1;
    }
    stack_depth_ = std::max(stack_depth_, depth);
  };
  emit(emit, *t.node());
}

Element TermProgram::run(const FiniteAlgebra& h, const Element* assignment, Element* stack) const {
  std::size_t top = 0;
  const std::size_t n = h.size();
  for (const auto& in : code_) {
    if (in.op < 0) {
      stack[top++] = assignment[in.arg];
      continue;
    }
    std::size_t idx = 0;
    const std::size_t k = static_cast<std::size_t>(in.arg);
    for (std::size_t j = top - k; j < top; ++j) idx = idx * n + stack[j];
    top -= k;
    stack[top++] = h.table(in.op)[idx];
  }
  return stack[0];
}

void equality_mask(const FiniteAlgebra& h, std::size_t vars, const Term& w, const Term& w2, Mask& out) {
  const auto points = total_points(h.size(), vars);
  const auto words = word_count(points);
  out.assign(words, 0);
  const TermProgram p1(w), p2(w2);
  const auto depth = std::max(p1.stack_depth(), p2.stack_depth());
  const auto nwords = static_cast<std::int64_t>(words);
#pragma omp parallel for schedule(static) if (words >= kParallelThresholdWords)
  for (std::int64_t wi = 0; wi < nwords; ++wi) {
    std::vector<Element> stack(depth + 1);
    const PointIndex begin = static_cast<PointIndex>(wi) * kWordBits;
    const PointIndex end = std::min<PointIndex>(begin + kWordBits, points);
    Cursor cur(h.size(), vars, begin);
    Word word = 0;
    for (PointIndex p = begin; p < end; ++p, cur.advance())
      if (p1.run(h, cur.data(), stack.data()) == p2.run(h, cur.data(), stack.data())) word |= Word{1} << (p - begin);
    out[static_cast<std::size_t>(wi)] = word;
  }
}

void exists_mask(std::size_t base, std::size_t vars, std::size_t var, const Mask& in, Mask& out) {
  const auto points = total_points(base, vars);
  const auto words = word_count(points);
  out.assign(words, 0);
  PointIndex stride = 1;
  for (std::size_t i = 0; i < var; ++i) stride *= base;
  const auto nwords = static_cast<std::int64_t>(words);
#pragma omp parallel for schedule(static) if (words >= kParallelThresholdWords)
  for (std::int64_t wi = 0; wi < nwords; ++wi) {
    const PointIndex begin = static_cast<PointIndex>(wi) * kWordBits;
    const PointIndex end = std::min<PointIndex>(begin + kWordBits, points);
    Word word = 0;
    for (PointIndex p = begin; p < end; ++p) {
      const PointIndex digit = (p / stride) % base;
      const PointIndex fiber = p - digit * stride;
      for (PointIndex v = 0; v < base; ++v) {
        if (test_bit(in, fiber + v * stride)) {
          word |= Word{1} << (p - begin);
          break;
        }
      }
    }
    out[static_cast<std::size_t>(wi)] = word;
  }
}

void transport_mask(const FiniteAlgebra& h, std::size_t y_vars, std::span<const Term> images, std::size_t x_vars,
                    const Mask& in, Mask& out) {
  const auto points = total_points(h.size(), y_vars);
  const auto words = word_count(points);
  out.assign(words, 0);
  std::vector<TermProgram> progs;
  std::size_t depth = 1;
  for (const auto& t : images) {
    progs.emplace_back(t);
    depth = std::max(depth, progs.back().stack_depth());
  }
  const auto nwords = static_cast<std::int64_t>(words);
  const auto n = h.size();
#pragma omp parallel for schedule(static) if (words >= kParallelThresholdWords)
  for (std::int64_t wi = 0; wi < nwords; ++wi) {
    std::vector<Element> stack(depth + 1);
    const PointIndex begin = static_cast<PointIndex>(wi) * kWordBits;
    const PointIndex end = std::min<PointIndex>(begin + kWordBits, points);
    Cursor cur(n, y_vars, begin);
    Word word = 0;
    for (PointIndex p = begin; p < end; ++p, cur.advance()) {
      PointIndex idx = 0;
      for (std::size_t i = x_vars; i-- > 0;) idx = idx * n + progs[i].run(h, cur.data(), stack.data());
      if (test_bit(in, idx)) word |= Word{1} << (p - begin);
    }
    out[static_cast<std::size_t>(wi)] = word;
  }
}

void orbit_minima(std::size_t base, std::size_t vars, std::span<const std::vector<Element>> group,
                  std::vector<PointIndex>& out) {
  const auto points = total_points(base, vars);
  out.assign(points, 0);
  const auto npoints = static_cast<std::int64_t>(points);
#pragma omp parallel for schedule(static) if (points >= kParallelThresholdWords * kWordBits)
  for (std::int64_t pi = 0; pi < npoints; ++pi) {
    const auto p = static_cast<PointIndex>(pi);
    PointIndex best = p;
    for (const auto& sigma : group) {
      PointIndex img = 0, weight = 1, rest = p;
      for (std::size_t i = 0; i < vars; ++i) {
        img += sigma[rest % base] * weight;
        rest /= base;
        weight *= base;
      }
      best = std::min(best, img);
    }
    out[static_cast<std::size_t>(pi)] = best;
  }
}

namespace serial {

void equality_mask(const FiniteAlgebra& h, std::size_t vars, const Term& w, const Term& w2, Mask& out) {
  const auto points = total_points(h.size(), vars);
  out.assign(word_count(points), 0);
  for (PointIndex p = 0; p < points; ++p) {
    auto mu = point_values(h.size(), vars, p);
    if (eval_term(h, mu, w) == eval_term(h, mu, w2)) set_bit(out, p);
  }
}

void exists_mask(std::size_t base, std::size_t vars, std::size_t var, const Mask& in, Mask& out) {
  const auto points = total_points(base, vars);
  out.assign(word_count(points), 0);
  for (PointIndex p = 0; p < points; ++p) {
    if (!test_bit(in, p)) continue;
    auto nu = point_values(base, vars, p);
    for (Element v = 0; v < base; ++v) {
      nu[var] = v;
      set_bit(out, point_index(base, nu));
    }
  }
}

void transport_mask(const FiniteAlgebra& h, std::size_t y_vars, std::span<const Term> images, std::size_t x_vars,
                    const Mask& in, Mask& out) {
  const auto points = total_points(h.size(), y_vars);
  out.assign(word_count(points), 0);
  std::vector<Element> pulled(x_vars);
  for (PointIndex p = 0; p < points; ++p) {
    auto mu = point_values(h.size(), y_vars, p);
    for (std::size_t i = 0; i < x_vars; ++i) pulled[i] = eval_term(h, mu, images[i]);
    if (test_bit(in, point_index(h.size(), pulled))) set_bit(out, p);
  }
}

void orbit_minima(std::size_t base, std::size_t vars, std::span<const std::vector<Element>> group,
                  std::vector<PointIndex>& out) {
  const auto points = total_points(base, vars);
  out.assign(points, 0);
  for (PointIndex p = 0; p < points; ++p) {
    auto mu = point_values(base, vars, p);
    PointIndex best = p;
    std::vector<Element> img(vars);
    for (const auto& sigma : group) {
      for (std::size_t i = 0; i < vars; ++i) img[i] = sigma[mu[i]];
      best = std::min(best, point_index(base, img));
    }
    out[p] = best;
  }
}

}  // namespace serial

}  // namespace halgeo::kernels
