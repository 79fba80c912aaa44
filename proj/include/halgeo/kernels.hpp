#pragma once

// Data-parallel kernels over point spaces. Every kernel writes whole 64-bit
// words of the output mask, one word per loop iteration, so OpenMP threads
// never share an output word. The `serial` namespace holds the reference
// implementations the tests compare against; they evaluate terms through
// the tree walker rather than compiled programs.

#include <cstdint>
#include <span>
#include <vector>

#include "halgeo/finite_algebra.hpp"
#include "halgeo/term.hpp"

namespace halgeo::kernels {

using Word = std::uint64_t;
using Mask = std::vector<Word>;

constexpr std::size_t kWordBits = 64;

inline std::size_t word_count(std::uint64_t points) { return static_cast<std::size_t>((points + kWordBits - 1) / kWordBits); }

inline bool test_bit(const Mask& m, std::uint64_t i) { return (m[i / kWordBits] >> (i % kWordBits)) & 1u; }
inline void set_bit(Mask& m, std::uint64_t i) { m[i / kWordBits] |= Word{1} << (i % kWordBits); }

/// Postfix form of a term: variable pushes and table applications.
class TermProgram {
 public:
  explicit TermProgram(const Term& t);

  Element run(const FiniteAlgebra& h, const Element* assignment, Element* stack) const;
  std::size_t stack_depth() const { return stack_depth_; }

 private:
  struct Instr {
    std::int32_t op;   // < 0: push variable `arg`
    std::int32_t arg;  // variable index or arity
  };
  std::vector<Instr> code_;
  std::size_t stack_depth_ = 0;
};

/// Below this many words the parallel kernels run on the calling thread.
constexpr std::size_t kParallelThresholdWords = 64;

void equality_mask(const FiniteAlgebra& h, std::size_t vars, const Term& w, const Term& w2, Mask& out);

/// out[mu] = OR over the |H| points that agree with mu off variable `var`.
void exists_mask(std::size_t base, std::size_t vars, std::size_t var, const Mask& in, Mask& out);

/// out[mu over Y] = in[index of (x |-> mu(images[x]))].
void transport_mask(const FiniteAlgebra& h, std::size_t y_vars, std::span<const Term> images, std::size_t x_vars,
                    const Mask& in, Mask& out);

/// For each point, the least index in its orbit under `group`.
void orbit_minima(std::size_t base, std::size_t vars, std::span<const std::vector<Element>> group,
                  std::vector<PointIndex>& out);

namespace serial {

void equality_mask(const FiniteAlgebra& h, std::size_t vars, const Term& w, const Term& w2, Mask& out);
void exists_mask(std::size_t base, std::size_t vars, std::size_t var, const Mask& in, Mask& out);
void transport_mask(const FiniteAlgebra& h, std::size_t y_vars, std::span<const Term> images, std::size_t x_vars,
                    const Mask& in, Mask& out);
void orbit_minima(std::size_t base, std::size_t vars, std::span<const std::vector<Element>> group,
                  std::vector<PointIndex>& out);

}  // namespace serial

}  // namespace halgeo::kernels
