// Tests for lattice building blocks, the canonical subdirectly irreducible
// algebras B(i,m), subalgebra and homomorphism machinery, and the membership
// order on the canonical algebras.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "pmalg/algebra.hpp"
#include "pmalg/congruence.hpp"
#include "pmalg/constructions.hpp"
#include "pmalg/errors.hpp"
#include "pmalg/variety.hpp"
#include "test_helpers.hpp"

using namespace pmalg;
using namespace pmalg::testing;

namespace {

Bitset bits(int size, std::initializer_list<int> idx) {
  Bitset b(size);
  for (int i : idx) b.set(i);
  return b;
}

const std::vector<SiDescriptor>& grid_descriptors() {
  static const std::vector<SiDescriptor> d = {
      {0, 0}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2},
      {2, 3}, {3, 1}, {3, 2}, {3, 3}};
  return d;
}

}  // namespace

TEST_CASE("boolean_block builds powerset lattices") {
  Lattice b0 = boolean_block(0);
  CHECK(b0.size() == 1);
  CHECK(b0.bottom() == 0);
  CHECK(b0.top() == 0);

  Lattice b2 = boolean_block(2);
  CHECK(b2.size() == 4);
  CHECK(b2.bottom() == 0);
  CHECK(b2.top() == 3);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(b2.leq(a, b) == ((a | b) == b));
      CHECK(b2.meet(a, b) == (a & b));
      CHECK(b2.join(a, b) == (a | b));
    }
  CHECK(b2.cover_pairs() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

  Lattice b3 = boolean_block(3);
  CHECK(b3.size() == 8);
  CHECK(b3.is_distributive());
  CHECK(b3.join_irreducibles() == std::vector<int>{1, 2, 4});

  CHECK_THROWS_WITH_AS(boolean_block(13), "boolean_block supports 0 <= k <= 12",
                       DomainError);
  CHECK_THROWS_WITH_AS(boolean_block(-1), "boolean_block supports 0 <= k <= 12",
                       DomainError);
}

TEST_CASE("chain builds total orders") {
  Lattice c3 = chain(3);
  CHECK(c3.size() == 3);
  CHECK(c3.cover_pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(c3.leq(a, b) == (a <= b));
      CHECK(c3.meet(a, b) == std::min(a, b));
      CHECK(c3.join(a, b) == std::max(a, b));
    }
  CHECK(chain(1).size() == 1);
  CHECK_THROWS_WITH_AS(chain(0), "chain requires at least one element",
                       DomainError);
}

TEST_CASE("ordinal_sum glues lattices at the shared bound") {
  Lattice s = ordinal_sum(chain(2), chain(2));
  CHECK(s.size() == 3);
  CHECK(s.cover_pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(s.bottom() == 0);
  CHECK(s.top() == 2);

  // A one-element summand is an identity for the sum.
  Lattice left = ordinal_sum(chain(1), boolean_block(2));
  CHECK(left.size() == 4);
  CHECK(left.cover_pairs() == boolean_block(2).cover_pairs());
  Lattice right = ordinal_sum(boolean_block(1), chain(1));
  CHECK(right.size() == 2);
  CHECK(right.cover_pairs() == std::vector<std::pair<int, int>>{{0, 1}});

  Lattice stacked = ordinal_sum(boolean_block(2), boolean_block(2));
  CHECK(stacked.size() == 7);
  CHECK(stacked.is_distributive());
  // The lower block keeps its indices; its top is the new middle.
  CHECK(stacked.leq(3, 4));
  CHECK_FALSE(stacked.leq(4, 3));
}

TEST_CASE("descriptor validity and sizes") {
  CHECK(SiDescriptor{0, 0}.valid());
  CHECK(SiDescriptor{1, 0}.valid());
  CHECK_FALSE(SiDescriptor{0, 1}.valid());
  CHECK_FALSE(SiDescriptor{2, 0}.valid());
  CHECK_FALSE(SiDescriptor{1, 4}.valid());
  CHECK_FALSE(SiDescriptor{-1, 0}.valid());

  CHECK(SiDescriptor{0, 0}.expected_size() == 1);
  CHECK(SiDescriptor{1, 0}.expected_size() == 2);
  CHECK(SiDescriptor{1, 1}.expected_size() == 3);
  CHECK(SiDescriptor{2, 1}.expected_size() == 7);
  CHECK(SiDescriptor{2, 2}.expected_size() == 8);
  CHECK(SiDescriptor{2, 3}.expected_size() == 9);
  CHECK(SiDescriptor{3, 1}.expected_size() == 15);
  CHECK(SiDescriptor{3, 3}.expected_size() == 17);
}

TEST_CASE("build_si produces valid Kleene algebras of the documented size") {
  for (const SiDescriptor& d : grid_descriptors()) {
    CAPTURE(d.i);
    CAPTURE(d.m);
    Algebra a = build_si(d);
    CHECK(a.size() == d.expected_size());
    CHECK(validate(a.to_raw()).passed);
    CHECK(is_kleene(a));
    if (d.i >= 1) {
      CHECK(is_subdirectly_irreducible(a));
      CHECK(is_simple(a) == (d.m <= 1));
    }
  }
}

TEST_CASE("the i = 1 canonical algebras are the small chains") {
  CHECK(is_isomorphic(build_si({1, 1}), chain_algebra(3)));
  CHECK(is_isomorphic(build_si({1, 2}), chain_algebra(4)));
  CHECK(is_isomorphic(build_si({1, 3}), chain_algebra(5)));
  CHECK(is_isomorphic(build_si({1, 0}), chain_algebra(2)));
  CHECK_FALSE(is_isomorphic(build_si({2, 1}), chain_algebra(7)));
}

TEST_CASE("build_si index layout mirrors the involution") {
  Algebra a = build_si({2, 2});
  CHECK(a.size() == 8);
  std::vector<int> neg;
  for (int x = 0; x < 8; ++x) neg.push_back(a.neg(x));
  CHECK(neg == std::vector<int>{7, 6, 5, 4, 3, 2, 1, 0});
  // The lower block sits under the upper block across the chain.
  CHECK(a.leq(3, 4));
  CHECK(a.leq(4, 5));
  CHECK(a.bottom() == 0);
  CHECK(a.top() == 7);
}

TEST_CASE("build_si rejects invalid descriptors") {
  CHECK_THROWS_WITH_AS(
      build_si({0, 1}),
      "invalid descriptor (0, 1); need (0,0), (1,0) or i >= 1, 1 <= m <= 3",
      DomainError);
  CHECK_THROWS_WITH_AS(
      build_si({2, 0}),
      "invalid descriptor (2, 0); need (0,0), (1,0) or i >= 1, 1 <= m <= 3",
      DomainError);
  CHECK_THROWS_WITH_AS(
      build_si({1, 4}),
      "invalid descriptor (1, 4); need (0,0), (1,0) or i >= 1, 1 <= m <= 3",
      DomainError);
}

TEST_CASE("subuniverse closure always contains the bounds") {
  Algebra b2 = build_si({2, 1});
  CHECK(subuniverse_closure(b2, Bitset(7)) == bits(7, {0, 6}));
  CHECK(subuniverse_closure(b2, bits(7, {3})) == bits(7, {0, 3, 6}));
  CHECK(subuniverse_closure(b2, bits(7, {1})).count() == 7);

  Algebra c4 = chain_algebra(4);
  CHECK(subuniverse_closure(c4, Bitset(4)) == bits(4, {0, 3}));
  CHECK(subuniverse_closure(c4, bits(4, {1})).count() == 4);
}

TEST_CASE("subalgebra_generated returns an embedded algebra") {
  Algebra b2 = build_si({2, 1});

  Subalgebra whole = subalgebra_generated(b2, {1});
  CHECK(whole.algebra.size() == 7);

  Subalgebra center = subalgebra_generated(b2, {3});
  CHECK(center.algebra.size() == 3);
  CHECK(center.embedding == std::vector<int>{0, 3, 6});
  CHECK(is_isomorphic(center.algebra, chain_algebra(3)));
  // The embedding preserves every operation.
  const Algebra& s = center.algebra;
  for (int x = 0; x < s.size(); ++x) {
    CHECK(center.embedding[s.neg(x)] == b2.neg(center.embedding[x]));
    CHECK(center.embedding[s.star(x)] == b2.star(center.embedding[x]));
    for (int y = 0; y < s.size(); ++y) {
      CHECK(center.embedding[s.meet(x, y)] ==
            b2.meet(center.embedding[x], center.embedding[y]));
      CHECK(center.embedding[s.join(x, y)] ==
            b2.join(center.embedding[x], center.embedding[y]));
    }
  }

  Subalgebra least = subalgebra_generated(chain_algebra(4), {});
  CHECK(least.algebra.size() == 2);
  CHECK(least.embedding == std::vector<int>{0, 3});

  CHECK_THROWS_WITH_AS(subalgebra_generated(b2, {7}),
                       "generator index out of range", MalformedError);
  CHECK_THROWS_WITH_AS(subalgebra_generated(b2, {-1}),
                       "generator index out of range", MalformedError);
}

TEST_CASE("all_subuniverses enumerates exactly the closed sets") {
  CHECK(all_subuniverses(chain_algebra(3)).size() == 2);
  CHECK(all_subuniverses(chain_algebra(4)).size() == 2);
  CHECK(all_subuniverses(chain_algebra(5)).size() == 4);
  CHECK(all_subuniverses(boolean_square()).size() == 2);

  Algebra b2 = build_si({2, 1});
  std::vector<Bitset> subs = all_subuniverses(b2);
  REQUIRE(subs.size() == 3);
  CHECK(std::is_sorted(subs.begin(), subs.end()));
  std::set<Bitset> expected = {bits(7, {0, 6}), bits(7, {0, 3, 6}),
                               subuniverse_closure(b2, bits(7, {1}))};
  CHECK(std::set<Bitset>(subs.begin(), subs.end()) == expected);

  // Every reported set is closed, and four singletons generate everything.
  int full = 0;
  for (int x = 0; x < 7; ++x)
    if (subalgebra_generated(b2, {x}).algebra.size() == 7) ++full;
  CHECK(full == 4);
}

TEST_CASE("homomorphism search matches the exhaustive oracle") {
  Algebra two = chain_algebra(2);
  Algebra c3 = chain_algebra(3);
  Algebra c4 = chain_algebra(4);
  Algebra sq = boolean_square();
  Algebra b2 = build_si({2, 1});
  std::vector<std::pair<const Algebra*, const Algebra*>> pairs = {
      {&two, &c3}, {&c3, &two}, {&c3, &c3}, {&c4, &c4}, {&sq, &sq},
      {&c3, &b2},  {&b2, &two}, {&c4, &sq}, {&two, &b2}};
  for (auto [a, b] : pairs) {
    CAPTURE(a->size());
    CAPTURE(b->size());
    CHECK(homomorphisms(*a, *b) == homomorphisms_oracle(*a, *b));
  }
}

TEST_CASE("frozen homomorphism counts on small algebras") {
  Algebra two = chain_algebra(2);
  Algebra c3 = chain_algebra(3);
  Algebra c4 = chain_algebra(4);
  CHECK(homomorphisms(two, two).size() == 1);
  CHECK(homomorphisms(two, c3) ==
        std::vector<std::vector<int>>{{0, 2}});
  CHECK(homomorphisms(c3, two).empty());
  CHECK(homomorphisms(c3, c3) ==
        std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(homomorphisms(c4, two).empty());
  CHECK(homomorphisms(c4, c4) ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(homomorphisms(c3, build_si({2, 1})) ==
        std::vector<std::vector<int>>{{0, 3, 6}});
}

TEST_CASE("automorphism groups of the Boolean-block algebras") {
  CHECK(automorphisms(build_si({2, 1})).size() == 2);
  CHECK(automorphisms(build_si({3, 1})).size() == 6);
  CHECK(automorphisms(boolean_square()).size() == 2);
  CHECK(automorphisms(chain_algebra(5)).size() == 1);
  // The identity map is always present.
  std::vector<std::vector<int>> sq_autos = automorphisms(boolean_square());
  CHECK(std::count(sq_autos.begin(), sq_autos.end(),
                   std::vector<int>{0, 1, 2, 3}) == 1);
  CHECK(std::count(sq_autos.begin(), sq_autos.end(),
                   std::vector<int>{0, 2, 1, 3}) == 1);
}

TEST_CASE("surjective homomorphisms are the quotient maps") {
  CHECK(surjective_homomorphisms(chain_algebra(5), chain_algebra(3)).size() == 1);
  CHECK(surjective_homomorphisms(build_si({2, 1}), chain_algebra(2)).empty());
  CHECK(surjective_homomorphisms(chain_algebra(4), chain_algebra(4)).size() == 1);
  // Every surjective homomorphism is a homomorphism.
  Algebra c5 = chain_algebra(5);
  Algebra c3 = chain_algebra(3);
  auto all = homomorphisms(c5, c3);
  for (const auto& h : surjective_homomorphisms(c5, c3))
    CHECK(std::count(all.begin(), all.end(), h) == 1);
}

TEST_CASE("the descriptor order coincides with algebra membership") {
  for (const SiDescriptor& d1 : grid_descriptors())
    for (const SiDescriptor& d2 : grid_descriptors()) {
      CAPTURE(d1.i);
      CAPTURE(d1.m);
      CAPTURE(d2.i);
      CAPTURE(d2.m);
      CHECK(si_leq(d1, d2) == si_membership_oracle(d1, d2));
    }
}

TEST_CASE("descriptor order rejects invalid input and caps the oracle") {
  CHECK_THROWS_WITH_AS(si_leq({0, 1}, {1, 1}), "invalid descriptor", DomainError);
  CHECK_THROWS_WITH_AS(si_membership_oracle({1, 1}, {1, 4}), "invalid descriptor",
                       DomainError);
  CHECK_THROWS_WITH_AS(si_membership_oracle({1, 1}, {4, 1}),
                       "membership oracle supports d2.i <= 3", CapError);
}

TEST_CASE("weak projectivity is the absence of a fixed point") {
  CHECK(is_weakly_projective(chain_algebra(2)));
  CHECK(is_weakly_projective(direct_product(chain_algebra(2), build_si({2, 1}))));
  CHECK(is_weakly_projective(boolean_square()));
  CHECK_FALSE(is_weakly_projective(build_si({2, 1})));
  CHECK_FALSE(is_weakly_projective(chain_algebra(3)));
  CHECK_FALSE(is_weakly_projective(build_si({0, 0})));
  CHECK_THROWS_WITH_AS(is_weakly_projective(chain_algebra(4)),
                       "weak projectivity is defined here for members of BPK0",
                       DomainError);
  CHECK_THROWS_WITH_AS(
      is_weakly_projective(Algebra::from_raw(raw_demorgan_diamond())),
      "weak projectivity is defined here for members of BPK0", DomainError);
}
