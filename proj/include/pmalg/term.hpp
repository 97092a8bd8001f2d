#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pmalg/algebra.hpp"

namespace pmalg {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term tree over the signature {meet, join, neg, star, 0, 1}.
class Term {
 public:
  enum class Kind { Var, Zero, One, Meet, Join, Neg, Star };

  Kind kind;
  std::string var;      // Kind::Var only
  TermPtr lhs, rhs;     // rhs only for Meet/Join

  static TermPtr make_var(std::string name);
  static TermPtr zero();
  static TermPtr one();
  static TermPtr meet(TermPtr a, TermPtr b);
  static TermPtr join(TermPtr a, TermPtr b);
  static TermPtr neg(TermPtr a);
  static TermPtr star(TermPtr a);

  std::vector<std::string> variables() const;  // sorted, deduplicated
  std::string to_string() const;
  bool equals(const Term& other) const;

 private:
  Term(Kind k, std::string v, TermPtr l, TermPtr r)
      : kind(k), var(std::move(v)), lhs(std::move(l)), rhs(std::move(r)) {}
};

// An identity lhs ≈ rhs.  Inequalities s ≤ t are encoded as s ∧ t ≈ s.
struct Identity {
  TermPtr lhs, rhs;

  static Identity eq(TermPtr l, TermPtr r) { return {std::move(l), std::move(r)}; }
  static Identity leq(TermPtr s, TermPtr t) {
    return {Term::meet(s, std::move(t)), s};
  }

  std::vector<std::string> variables() const;
  std::string to_string() const;
};

// Named term operators.  Supported names and arities:
//   C(x)      = (x ∧ x') ∨ (x ∧ x')*
//   T(x)      = C(x) ∧ C(x)'
//   gamma(x,y)= T(x)* ∨ C(y)
//   F(x)      = T(x)* ∧ x**
//   plus(a)   = a'*'
//   imp(a,b)  = (a* ∨ b**)** ∧ ((a ∨ a*)+ ∨ a* ∨ b ∨ b*)
//   t(x,y,z)  = (F((x→y) ∧ (y→x)) ∧ z) ∨ (F((x→y) ∧ (y→x))* ∧ x)
// Throws DomainError on unknown name or wrong arity.
TermPtr builtin(const std::string& name, const std::vector<TermPtr>& args);

// beta_n applied to the given n terms (n ≥ 1):
//   (t0 ∧ … ∧ t_{n-1})* ∨ ⋁_i (t0 ∧ … ∧ t_i* ∧ … ∧ t_{n-1})*
TermPtr beta_term(const std::vector<TermPtr>& args);

// beta_n(x0, …, x_{n-1}) ≈ 1 on fresh variables.
Identity beta_identity(int n);

// Evaluates under an assignment of elements to variables.  Throws
// DomainError when a variable is unassigned or a value is out of range.
int eval(const Algebra& a, const Term& t, const std::map<std::string, int>& assignment);

}  // namespace pmalg
