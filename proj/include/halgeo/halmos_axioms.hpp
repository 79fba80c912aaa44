#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "halgeo/finite_algebra.hpp"

namespace halgeo {

/// The substitution axioms of a Halmos algebra, checked on Hal(H).
enum class Axiom {
  Composition,        // 2: s_* is boolean and s'_*(s_*(u)) = (s then s')_*(u)
  QuantifierAgree,    // 3a: s1(y) = s2(y) for y != x  =>  s1_* Ex a = s2_* Ex a
  QuantifierCommute,  // 3b: s(x) = y not in supp s(x'), x' != x  =>  s_* Ex a = Ey s_* a
  EqualityTransport,  // 4a: s_*(w == w') = (s(w) == s(w'))
  EqualityReplace,    // 4b: (s^x_w)_* a & (w == w') <= (s^x_w')_* a
};

inline constexpr Axiom kAllAxioms[] = {Axiom::Composition, Axiom::QuantifierAgree, Axiom::QuantifierCommute,
                                       Axiom::EqualityTransport, Axiom::EqualityReplace};

std::string_view axiom_label(Axiom a);

struct AxiomTally {
  Axiom axiom;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::optional<std::string> counterexample;
};

struct AxiomReport {
  std::vector<AxiomTally> tallies;

  bool all_passed() const;
  /// "axioms 2,3a,3b,4a,4b: PASS 100/100" when every tally is full; one
  /// line per failing axiom otherwise.
  std::string summary() const;
};

struct AxiomCheckOptions {
  std::size_t trials = 100;  // per axiom
  std::uint64_t seed = 0;
  int term_depth = 2;
};

/// Seeded random instances. Trial i of axiom a draws from a generator seeded
/// by (seed, a, i) alone, so results do not depend on scheduling.
AxiomReport verify_halmos_axioms(const FiniteAlgebra& h, std::span<const SortPtr> sorts,
                                 const AxiomCheckOptions& options = {});

/// Every substitution with images of depth <= term_depth, every point set,
/// every variable and term choice. Restricted to |H| <= 2 and sorts of at
/// most two variables (DomainError otherwise).
AxiomReport verify_halmos_axioms_exhaustive(const FiniteAlgebra& h, std::span<const SortPtr> sorts,
                                            int term_depth = 1);

}  // namespace halgeo
