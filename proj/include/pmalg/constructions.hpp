#pragma once

#include <vector>

#include "pmalg/algebra.hpp"
#include "pmalg/congruence.hpp"

namespace pmalg {

// Descriptor (i, m) of a canonical subdirectly irreducible algebra: Boolean
// blocks of 2^i elements glued below and above an m-element chain.  Valid
// descriptors are (0,0) = trivial, (1,0) = two-element chain, and i >= 1 with
// m in {1,2,3}.
struct SiDescriptor {
  int i = 0;
  int m = 0;

  bool valid() const {
    return (i == 0 && m == 0) || (i == 1 && m == 0) || (i >= 1 && m >= 1 && m <= 3);
  }
  // 2^(i+1) + m - 2 elements for i >= 1; 1 or 2 for the special descriptors.
  int expected_size() const;
  bool operator==(const SiDescriptor&) const = default;
};

// Bounded lattices used as raw material (no neg/star attached).
Lattice boolean_block(int k);  // 2^k elements, masks ordered by inclusion
Lattice chain(int m);          // m >= 1 elements

// Glues l2 on top of l1, identifying top(l1) with bottom(l2).  Elements of l1
// keep their indices; the rest of l2 follows in index order.
Lattice ordinal_sum(const Lattice& l1, const Lattice& l2);

// B(i,m): lower Boolean block, chain of length m, upper Boolean block, with
// the mirror involution (Boolean complement composed with block swap, chain
// reversed) and pseudocomplements computed from the order.
Algebra build_si(const SiDescriptor& d);

// Closure of seed ∪ {0, 1} under meet, join, neg and star.
Bitset subuniverse_closure(const Algebra& a, Bitset seed);

struct Subalgebra {
  Algebra algebra;
  std::vector<int> embedding;  // new index -> index in the parent
};

// Subalgebra generated by the given elements (0 and 1 are always included).
Subalgebra subalgebra_generated(const Algebra& a, const std::vector<int>& generators);

// Every subuniverse, as bitsets over a's elements, sorted by bitmask.
std::vector<Bitset> all_subuniverses(const Algebra& a);

// All homomorphisms a -> b (preserving meet, join, neg, star, 0, 1), each as
// an image vector indexed by a's elements, sorted lexicographically.
std::vector<std::vector<int>> homomorphisms(const Algebra& a, const Algebra& b);
std::vector<std::vector<int>> surjective_homomorphisms(const Algebra& a, const Algebra& b);
std::vector<std::vector<int>> automorphisms(const Algebra& a);

// Quotient by a congruence; element k is the block containing the k-th
// distinct block representative in element order.
Algebra quotient_algebra(const Algebra& a, const Congruence& theta);

// The order on canonical s.i. algebras: B(i,m) <= B(j,n) iff i <= j, m <= n.
bool si_leq(const SiDescriptor& d1, const SiDescriptor& d2);

// Decides B(d1) ∈ HS(B(d2)) directly: enumerates subalgebras of B(d2) and
// their quotients, isomorphism-testing against B(d1).  Capped at d2.i <= 3.
bool si_membership_oracle(const SiDescriptor& d1, const SiDescriptor& d2);

// A finite member of BPK0 is weakly projective iff it has no element with
// x' = x; the trivial algebra has one (0 = 0') and so is never weakly
// projective.  Throws DomainError outside BPK0.
bool is_weakly_projective(const Algebra& a);

}  // namespace pmalg
