#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "pmalg/algebra.hpp"
#include "pmalg/term.hpp"

namespace pmalg {

inline constexpr std::int64_t kDefaultEvalCap = 10'000'000;

// Result of an exhaustive identity check.  When the identity fails, witness
// holds the lexicographically least counterexample: variables sorted by name,
// assignments compared as element-index tuples.
struct HoldsResult {
  bool holds = false;
  std::map<std::string, int> witness;
};

// Checks lhs ≈ rhs over all |a|^(#vars) assignments.  Throws CapError when
// the assignment count exceeds eval_cap.
HoldsResult holds(const Algebra& a, const Identity& id,
                  std::int64_t eval_cap = kDefaultEvalCap);

// Membership in the named subvarieties, decided by their equational bases
// (relative to pseudocomplemented Kleene algebras):
//   PK    x ∧ x' ≤ y ∨ y'
//   PK0   PK and C(x)' ≤ C(x)
//   PK1   PK and C(x) ∧ C(x)' ≤ C(y)
//   BPK   PK and x* ∧ gamma(x,y) ≈ x*, i.e. x* ≤ T(x)* ∨ C(y); the argument
//         order matters: x* ≤ T(y)* ∨ C(x) is vacuous, since x* ≤ C(x) always
//   BPK1  PK and gamma(x,y) ≈ gamma(y,x)
//   BPK0  BPK and C(x) ∧ C(x)' ≈ C(x)'
struct VarietyMembership {
  bool pk = false, pk0 = false, pk1 = false;
  bool bpk = false, bpk1 = false, bpk0 = false;
};

VarietyMembership variety_membership(const Algebra& a,
                                     std::int64_t eval_cap = kDefaultEvalCap);

// How beta_n ≈ 1 is decided: through the dual space (each prime filter lies
// below at most n maximal ones) or by exhaustive evaluation.
enum class BetaMode { Dual, Exhaustive };

bool satisfies_beta(const Algebra& a, int n, BetaMode mode = BetaMode::Dual,
                    std::int64_t eval_cap = kDefaultEvalCap);

// V(B(n,m)) for m in {1,2,3}: the base identities for the m-chain together
// with beta_n ≈ 1.
bool in_si_generated_variety(const Algebra& a, int n, int m,
                             BetaMode mode = BetaMode::Dual,
                             std::int64_t eval_cap = kDefaultEvalCap);

// The join varieties BPK0 ∨ V(B(n,3)) and BPK1 ∨ V(B(n,3)):
//   BPK identity and C(y)' ≤ C(y) ∨ beta_n(x0..)
//   BPK identity and C(y) ∧ C(y)' ≤ C(z) ∨ beta_n(x0..)
// beta always evaluates inside the identity here.
bool in_join_bpk0_beta(const Algebra& a, int n, std::int64_t eval_cap = kDefaultEvalCap);
bool in_join_bpk1_beta(const Algebra& a, int n, std::int64_t eval_cap = kDefaultEvalCap);

// Verifies that the discriminator term switches correctly on all triples:
// t(x,y,z) = z when x = y, else x.  Requires a simple member of BPK0 and
// throws DomainError otherwise.
struct DiscriminatorReport {
  bool ok = false;
  std::optional<std::array<int, 3>> witness;  // first failing (x, y, z)
};

DiscriminatorReport discriminator_check(const Algebra& a,
                                        std::int64_t eval_cap = kDefaultEvalCap);

}  // namespace pmalg
