#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmalg/bitset.hpp"
#include "pmalg/errors.hpp"

namespace pmalg {

inline constexpr int kDefaultElementCap = 4096;

// Raw, unvalidated algebra data as it appears in input files.  `covers` lists
// pairs (lower, upper); the order relation is its reflexive-transitive
// closure.  `star` may be omitted, in which case pseudocomplements are
// computed from the order.
struct RawAlgebra {
  int elements = 0;
  std::vector<std::pair<int, int>> covers;
  std::vector<int> neg;
  std::optional<std::vector<int>> star;
  std::vector<std::string> names;  // empty or one per element
};

// Finite bounded lattice on elements 0..size-1 with cached order and
// meet/join tables.  Invariant: leq is a partial order, every pair has a meet
// and a join, bottom and top exist.
class Lattice {
 public:
  // Builds from a cover relation.  Throws MalformedError on dangling indices
  // or cycles, DomainError if meets/joins/bounds do not exist.
  static Lattice from_covers(int n, const std::vector<std::pair<int, int>>& covers);

  // Builds from an explicit reflexive order given as up-sets.  Same checks.
  static Lattice from_upsets(std::vector<Bitset> up);

  int size() const { return n_; }
  bool leq(int a, int b) const { return up_[a].test(b); }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const Bitset& upset(int a) const { return up_[a]; }    // {b : a <= b}
  const Bitset& downset(int a) const { return down_[a]; }  // {b : b <= a}

  bool is_distributive() const;

  // Covering pairs (lower, upper) of the order, lexicographically sorted.
  std::vector<std::pair<int, int>> cover_pairs() const;

  // Elements with exactly one lower cover (excludes bottom).
  std::vector<int> join_irreducibles() const;

 private:
  friend struct LatticeBuilder;
  int n_ = 0;
  std::vector<Bitset> up_, down_;
  std::vector<int> meet_, join_;
  int bottom_ = -1, top_ = -1;
};

// A validated finite pseudocomplemented De Morgan algebra.
class Algebra : public Lattice {
 public:
  // Validates raw data and builds the algebra; star is completed from the
  // order when absent.  Throws MalformedError / DomainError.
  static Algebra from_raw(const RawAlgebra& raw, int element_cap = kDefaultElementCap);

  // Assembles from parts already known to satisfy the axioms; verifies them
  // and throws DomainError if they do not hold.
  static Algebra from_parts(Lattice lattice, std::vector<int> neg,
                            std::optional<std::vector<int>> star = std::nullopt,
                            std::vector<std::string> names = {});

  int neg(int a) const { return neg_[a]; }
  int star(int a) const { return star_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  // Element label for output: the stored name, or the decimal index.
  std::string name(int a) const;

  RawAlgebra to_raw() const;

 private:
  std::vector<int> neg_, star_;
  std::vector<std::string> names_;
};

// One violated axiom with the lexicographically least witness tuple.
struct Violation {
  std::string axiom;
  std::vector<int> witness;
};

struct ValidationReport {
  bool passed = false;
  std::vector<Violation> violations;
};

// Checks every axiom of pseudocomplemented De Morgan algebras on candidate
// data: bounded distributive lattice, De Morgan involution laws, and the
// pseudocomplement law (a ∧ b = 0  ⟺  b ≤ a*).  Structural junk (dangling
// indices, non-function neg/star, cyclic covers) throws MalformedError
// instead of being reported.  Throws CapError when elements > element_cap.
ValidationReport validate(const RawAlgebra& raw, int element_cap = kDefaultElementCap);

// Pseudocomplement table computed from the order: star[a] is the largest b
// with a ∧ b = 0.  Throws DomainError if some element has no largest
// annihilator.
std::vector<int> compute_star(const Lattice& lat);

// Kleene condition: x ∧ x′ ≤ y ∨ y′ for all x, y.
bool is_kleene(const Algebra& a);

// Elements with a* = 0, and the least one if it exists.
std::vector<int> dense_elements(const Algebra& a);
std::optional<int> least_dense(const Algebra& a);

// Elements with x′ = x.
std::vector<int> fixed_points(const Algebra& a);

// Componentwise product; element (i, j) of A × B gets index i * |B| + j.
Algebra direct_product(const Algebra& a, const Algebra& b);

// Isomorphism of algebras (preserving ∧, ∨, ′, *): backtracking over an
// invariant-refinement partition of the elements.
bool is_isomorphic(const Algebra& a, const Algebra& b);

// Like is_isomorphic but returns the element map a -> b when one exists.
std::optional<std::vector<int>> isomorphism(const Algebra& a, const Algebra& b);

// Factors a finite member of BPK0 into simple factors along the
// phi-components of its dual space; the factor list is empty for the trivial
// algebra and the product of the factors is isomorphic to the input.  Throws
// DomainError when the algebra is outside BPK0.
std::vector<Algebra> decompose_into_simples(const Algebra& a);

}  // namespace pmalg
