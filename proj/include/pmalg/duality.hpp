#pragma once

#include <vector>

#include "pmalg/algebra.hpp"
#include "pmalg/bitset.hpp"

namespace pmalg {

// Finite dual space: a poset of points with an order-reversing involution
// phi.  When produced from an algebra, `filters` holds each point's prime
// filter as a bitset over the algebra's elements, and points are sorted by
// that bitmask; spaces built directly may leave `filters` empty.
struct DualSpace {
  int points = 0;
  std::vector<Bitset> up;    // up[p] = {q : p <= q}, reflexive
  std::vector<int> phi;      // involution
  std::vector<Bitset> filters;

  bool leq(int p, int q) const { return up[p].test(q); }

  // Builds a space from strict order pairs (lower, upper); closure is taken.
  static DualSpace make(int points, const std::vector<std::pair<int, int>>& order,
                        const std::vector<int>& phi);

  // Checks that up is a partial order and phi an order-reversing involution.
  // Throws DomainError otherwise.
  void check() const;
};

// All prime filters, each as a bitset of elements, sorted by bitmask.
std::vector<Bitset> prime_filters(const Algebra& a);

// Priestley-style dual: points are the prime filters ordered by inclusion,
// phi(P) = {x : x' not in P}.
DualSpace dual_space(const Algebra& a);

// The algebra of up-sets of a space: meet/join are intersection/union,
// V' = complement of phi[V], V* = complement of the down-closure of V.
// Elements are sorted by point-set bitmask, so 0 is the empty set.
// Throws DomainError if the space is invalid, CapError if the up-set count
// would exceed element_cap.
Algebra upset_algebra(const DualSpace& x, int element_cap = kDefaultElementCap);

// True iff a |-> {P : a in P} is an isomorphism onto upset_algebra(dual_space(a))
// preserving meet, join, neg and star.
bool roundtrip_isomorphic(const Algebra& a);

// Maximal / minimal points and Body = X minus (Max union Min).
Bitset max_points(const DualSpace& x);
Bitset min_points(const DualSpace& x);
Bitset body(const DualSpace& x);

// Finest partition of the points into parts that are up-closed, down-closed
// and phi-invariant: order components merged along phi.
std::vector<Bitset> phi_components(const DualSpace& x);

enum class SpaceType { Type1, Type2, Type3, Other };

// Classifies the shape of a space.  Tags other than Other require every
// maximal point to lie above every non-maximal point; given that, the tag is
// Type1 for empty body, Type2 for a singleton body, Type3 for a body
// {P, phi(P)} with phi(P) != P, and Other otherwise.
SpaceType space_type(const DualSpace& x);

const char* space_type_name(SpaceType t);

}  // namespace pmalg
