#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <utility>
#include <vector>

#include "pmalg/errors.hpp"

namespace pmalg {

using BigNat = boost::multiprecision::cpp_int;

inline constexpr long long kDefaultTupleCap = 100'000'000;

// One direct factor of a finitely generated free algebra in the variety BPK0.
// The simple-type index k names the factor: k = 0 is the two-element Boolean
// algebra, k = 1 is the three-element Kleene chain, and k >= 2 is the simple
// algebra B_k of size 2^(k+1) - 1 built from two k-atom Boolean blocks glued
// at a shared middle element.
struct FreeFactor {
  int k = 0;
  BigNat multiplicity;
  BigNat factor_size;
};

// Full factor table of the free algebra on n generators: one row per
// simple-type index 0 <= k <= 2^n, in increasing k.
struct FreeDecomposition {
  int generators = 0;
  std::vector<FreeFactor> factors;
};

// Memoized counting table behind the decomposition.
//
// g(n, k) counts the surjective homomorphisms from the free Boolean algebra
// on n generators onto the Boolean algebra with k atoms that send no
// generator to the top element.  It satisfies
//
//   g(n, k) = (2^n)(2^n - 1)...(2^n - k + 1) - sum_{i=1..n} C(n, i) g(n-i, k)
//
// because the falling factorial counts all surjections and the sum removes
// those sending exactly i >= 1 generators to the top.  The base row is
// g(0, 0) = g(0, 1) = 1 and g(0, k) = 0 for k >= 2 (the falling factorial
// vanishes past the algebra size, which is the only convention consistent
// with the factor tables this feeds).
//
// f(n, k, i) = C(n, i) * g(n-i, k) counts the surjections that send exactly
// i chosen generators to the top.
class CountTable {
 public:
  const BigNat& g(int n, int k);
  BigNat f(int n, int k, int i);

 private:
  std::map<std::pair<int, int>, BigNat> g_;
};

BigNat g_count(int n, int k);
BigNat f_count(int n, int k, int i);

// Number of surjective homomorphisms from the free algebra on n generators
// in BPK0 onto the simple algebra of type k.  For k >= 2 this is the sum
// sum_{i=0..n} 2^(n-i) f(n, k, i): every generating n-tuple of B_k arises
// from a unique tuple over the lower Boolean block by independently priming
// coordinates, and a lower-block tuple sending exactly i coordinates to the
// shared middle element has 2^(n-i) primed variants.  That correspondence
// breaks down for the two degenerate factors, which are counted directly:
// k = 0 gives 2^n (every tuple over the two-element algebra generates it)
// and k = 1 gives 3^n - 2^n (a tuple generates the three-element chain
// exactly when some coordinate is the middle fixed point).
BigNat surjection_count(int n, int k);

// Multiplicity of the type-k factor in the decomposition: surjections
// divided by the automorphism count k! (exact division enforced; a remainder
// signals an internal counting bug and throws Error).  k = 0 and k = 1 have
// trivial automorphism groups, so their multiplicities are the raw counts.
BigNat factor_multiplicity(int n, int k);

// Factor table of the free algebra on n >= 1 generators in BPK0.
FreeDecomposition free_decomposition(int n);

// Cardinality of the free algebra: product of factor_size^multiplicity.
BigNat free_size(int n);
BigNat free_size(const FreeDecomposition& d);

// Independent check of surjection_count: builds the type-k simple algebra
// and counts, by direct enumeration with cached prefix closures, the
// n-tuples whose generated subalgebra is the whole algebra.  Throws CapError
// when size^n exceeds tuple_cap.
BigNat oracle_surjection_count(int n, int k, long long tuple_cap = kDefaultTupleCap);

}  // namespace pmalg
