#include "pmalg/variety.hpp"

#include <algorithm>

#include "pmalg/congruence.hpp"
#include "pmalg/duality.hpp"
#include "pmalg/parser.hpp"

namespace pmalg {

namespace {

// Terms compiled to a register program so the inner assignment loop does no
// pointer chasing or map lookups.
struct Compiled {
  enum class Op { Load, Const, Meet, Join, Neg, Star };
  struct Instr {
    Op op;
    int a = 0, b = 0;  // Load: variable slot; Const: element; else registers
  };
  std::vector<Instr> code;
  int result_reg = 0;

  int compile(const Term& t, const std::vector<std::string>& vars, const Algebra& alg) {
    switch (t.kind) {
      case Term::Kind::Var: {
        int slot = static_cast<int>(
            std::lower_bound(vars.begin(), vars.end(), t.var) - vars.begin());
        code.push_back({Op::Load, slot, 0});
        break;
      }
      case Term::Kind::Zero: code.push_back({Op::Const, alg.bottom(), 0}); break;
      case Term::Kind::One: code.push_back({Op::Const, alg.top(), 0}); break;
      case Term::Kind::Meet: {
        int l = compile(*t.lhs, vars, alg);
        int r = compile(*t.rhs, vars, alg);
        code.push_back({Op::Meet, l, r});
        break;
      }
      case Term::Kind::Join: {
        int l = compile(*t.lhs, vars, alg);
        int r = compile(*t.rhs, vars, alg);
        code.push_back({Op::Join, l, r});
        break;
      }
      case Term::Kind::Neg: {
        int l = compile(*t.lhs, vars, alg);
        code.push_back({Op::Neg, l, 0});
        break;
      }
      case Term::Kind::Star: {
        int l = compile(*t.lhs, vars, alg);
        code.push_back({Op::Star, l, 0});
        break;
      }
    }
    return result_reg = static_cast<int>(code.size()) - 1;
  }

  int run(const Algebra& alg, const std::vector<int>& env, std::vector<int>& regs) const {
    for (std::size_t i = 0; i < code.size(); ++i) {
      const Instr& in = code[i];
      switch (in.op) {
        case Op::Load: regs[i] = env[in.a]; break;
        case Op::Const: regs[i] = in.a; break;
        case Op::Meet: regs[i] = alg.meet(regs[in.a], regs[in.b]); break;
        case Op::Join: regs[i] = alg.join(regs[in.a], regs[in.b]); break;
        case Op::Neg: regs[i] = alg.neg(regs[in.a]); break;
        case Op::Star: regs[i] = alg.star(regs[in.a]); break;
      }
    }
    return regs[result_reg];
  }
};

}  // namespace

HoldsResult holds(const Algebra& a, const Identity& id, std::int64_t eval_cap) {
  std::vector<std::string> vars = id.variables();
  int k = static_cast<int>(vars.size());
  // Assignment count |a|^k, checked against the cap before any work.
  std::int64_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > eval_cap / std::max(1, a.size())) {
      total = eval_cap + 1;
      break;
    }
    total *= a.size();
  }
  if (total > eval_cap)
    throw CapError("identity check needs " + std::to_string(a.size()) + "^" +
                   std::to_string(k) + " assignments, above the cap of " +
                   std::to_string(eval_cap));

  Compiled lhs, rhs;
  lhs.compile(*id.lhs, vars, a);
  rhs.compile(*id.rhs, vars, a);
  std::vector<int> regs_l(lhs.code.size()), regs_r(rhs.code.size());
  std::vector<int> env(std::max(k, 1), 0);

  // Odometer in lexicographic order: the last variable moves fastest.
  while (true) {
    if (lhs.run(a, env, regs_l) != rhs.run(a, env, regs_r)) {
      HoldsResult res;
      res.holds = false;
      for (int i = 0; i < k; ++i) res.witness[vars[i]] = env[i];
      return res;
    }
    int pos = k - 1;
    while (pos >= 0 && env[pos] == a.size() - 1) env[pos--] = 0;
    if (pos < 0) break;
    ++env[pos];
  }
  return {true, {}};
}

namespace {

Identity kleene_identity() { return parse_identity("x & x' <= y | y'"); }

}  // namespace

VarietyMembership variety_membership(const Algebra& a, std::int64_t eval_cap) {
  VarietyMembership m;
  m.pk = holds(a, kleene_identity(), eval_cap).holds;
  if (!m.pk) return m;
  bool c_contract = holds(a, parse_identity("C(x)' <= C(x)"), eval_cap).holds;
  bool t_bottom = holds(a, parse_identity("C(x) & C(x)' <= C(y)"), eval_cap).holds;
  bool gamma_abs = holds(a, parse_identity("x* & G(x, y) ~ x*"), eval_cap).holds;
  bool gamma_sym = holds(a, parse_identity("G(x, y) ~ G(y, x)"), eval_cap).holds;
  bool c_split = holds(a, parse_identity("C(x) & C(x)' ~ C(x)'"), eval_cap).holds;
  m.pk0 = c_contract;
  m.pk1 = t_bottom;
  m.bpk = gamma_abs;
  m.bpk1 = gamma_sym;
  m.bpk0 = gamma_abs && c_split;
  return m;
}

bool satisfies_beta(const Algebra& a, int n, BetaMode mode, std::int64_t eval_cap) {
  if (n < 1) throw DomainError("beta requires n >= 1");
  if (mode == BetaMode::Exhaustive) return holds(a, beta_identity(n), eval_cap).holds;
  DualSpace x = dual_space(a);
  Bitset mx = max_points(x);
  for (int p = 0; p < x.points; ++p)
    if ((x.up[p] & mx).count() > n) return false;
  return true;
}

bool in_si_generated_variety(const Algebra& a, int n, int m, BetaMode mode,
                             std::int64_t eval_cap) {
  if (m < 1 || m > 3) throw DomainError("chain length m must be 1, 2 or 3");
  VarietyMembership v = variety_membership(a, eval_cap);
  bool base = false;
  switch (m) {
    case 1: base = v.bpk0; break;
    case 2: base = v.bpk1; break;
    case 3: base = v.bpk; break;
  }
  return base && satisfies_beta(a, n, mode, eval_cap);
}

namespace {

std::string beta_vars_expr(int n) {
  std::string args;
  for (int i = 0; i < n; ++i) {
    if (i) args += ", ";
    args += "x" + std::to_string(i);
  }
  return "B" + std::to_string(n) + "(" + args + ")";
}

}  // namespace

bool in_join_bpk0_beta(const Algebra& a, int n, std::int64_t eval_cap) {
  if (n < 1) throw DomainError("beta requires n >= 1");
  if (!holds(a, kleene_identity(), eval_cap).holds) return false;
  if (!holds(a, parse_identity("x* & G(x, y) ~ x*"), eval_cap).holds) return false;
  return holds(a, parse_identity("C(y)' <= C(y) | " + beta_vars_expr(n)), eval_cap).holds;
}

bool in_join_bpk1_beta(const Algebra& a, int n, std::int64_t eval_cap) {
  if (n < 1) throw DomainError("beta requires n >= 1");
  if (!holds(a, kleene_identity(), eval_cap).holds) return false;
  if (!holds(a, parse_identity("x* & G(x, y) ~ x*"), eval_cap).holds) return false;
  return holds(a, parse_identity("C(y) & C(y)' <= C(z) | " + beta_vars_expr(n)), eval_cap)
      .holds;
}

DiscriminatorReport discriminator_check(const Algebra& a, std::int64_t eval_cap) {
  if (!variety_membership(a, eval_cap).bpk0)
    throw DomainError("discriminator check requires a member of BPK0");
  if (!is_simple(a))
    throw DomainError("discriminator check requires a simple algebra");
  std::int64_t n = a.size();
  if (n * n * n > eval_cap)
    throw CapError("discriminator check needs " + std::to_string(n * n * n) +
                   " evaluations, above the cap of " + std::to_string(eval_cap));

  std::vector<std::string> vars{"x", "y", "z"};
  TermPtr t = builtin("discriminator",
                      {Term::make_var("x"), Term::make_var("y"), Term::make_var("z")});
  Compiled prog;
  prog.compile(*t, vars, a);
  std::vector<int> regs(prog.code.size());
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      for (int z = 0; z < a.size(); ++z) {
        std::vector<int> env{x, y, z};
        int got = prog.run(a, env, regs);
        int want = (x == y) ? z : x;
        if (got != want) return {false, std::array<int, 3>{x, y, z}};
      }
  return {true, std::nullopt};
}

}  // namespace pmalg
