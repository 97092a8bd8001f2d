#pragma once

#include <optional>
#include <vector>

#include "pmalg/algebra.hpp"
#include "pmalg/duality.hpp"

namespace pmalg {

// A congruence as a partition of the elements, stored as a restricted growth
// string: block_of[e] is the block index, blocks numbered by first element.
struct Congruence {
  std::vector<int> block_of;

  static Congruence from_raw(const std::vector<int>& raw_block_of);

  int num_blocks() const;
  std::vector<std::vector<int>> blocks() const;

  // this refines other: every block of this lies inside a block of other.
  bool refines(const Congruence& other) const;

  bool operator==(const Congruence&) const = default;
  auto operator<=>(const Congruence&) const = default;
};

// A C-subset of a space: phi-invariant, and up-closure adds no new maximal
// points (equivalently, down-closure adds no new minimal points).
bool is_c_subset(const DualSpace& x, const Bitset& y);

// All C-subsets, sorted by bitmask.  Enumerates unions of phi-orbits and
// filters by the maximal-point rule.
std::vector<Bitset> all_c_subsets(const DualSpace& x);

// theta(Y): elements are congruent iff their eta-images agree inside Y.
// x must be dual_space(a) (its filters drive the computation).
Congruence congruence_from_csubset(const Algebra& a, const DualSpace& x, const Bitset& y);

// The congruence lattice via the C-subset correspondence, paired with the
// C-subsets that induce each congruence.  Sorted finest-first (block count
// descending, then lexicographically), a linear extension of refinement.
std::vector<std::pair<Bitset, Congruence>> congruence_lattice_with_csubsets(const Algebra& a);
std::vector<Congruence> congruence_lattice(const Algebra& a);

// Independent brute-force route: closes principal congruences under the four
// operations and then under joins.  Throws CapError for |a| > element_cap.
std::vector<Congruence> congruence_lattice_bruteforce(const Algebra& a, int element_cap = 10);

// Simplicity and subdirect irreducibility from the explicitly computed
// congruence lattice (exactly two congruences / a unique minimal nontrivial
// congruence).
bool is_simple(const Algebra& a);
bool is_subdirectly_irreducible(const Algebra& a);
std::optional<Congruence> monolith(const Algebra& a);

// The same properties read off the dual space: both require a phi-connected
// space; simplicity needs X = Max ∪ Min, subdirect irreducibility |Body| < 2
// or Body = {P, phi(P)} with phi(P) != P.
bool is_simple_by_dual(const Algebra& a);
bool is_subdirectly_irreducible_by_dual(const Algebra& a);

}  // namespace pmalg
