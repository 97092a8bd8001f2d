#include "pmalg/term.hpp"

#include <sstream>

namespace pmalg {

TermPtr Term::make_var(std::string name) {
  return TermPtr(new Term(Kind::Var, std::move(name), nullptr, nullptr));
}
TermPtr Term::zero() { return TermPtr(new Term(Kind::Zero, "", nullptr, nullptr)); }
TermPtr Term::one() { return TermPtr(new Term(Kind::One, "", nullptr, nullptr)); }
TermPtr Term::meet(TermPtr a, TermPtr b) {
  return TermPtr(new Term(Kind::Meet, "", std::move(a), std::move(b)));
}
TermPtr Term::join(TermPtr a, TermPtr b) {
  return TermPtr(new Term(Kind::Join, "", std::move(a), std::move(b)));
}
TermPtr Term::neg(TermPtr a) {
  return TermPtr(new Term(Kind::Neg, "", std::move(a), nullptr));
}
TermPtr Term::star(TermPtr a) {
  return TermPtr(new Term(Kind::Star, "", std::move(a), nullptr));
}

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  switch (t.kind) {
    case Term::Kind::Var: out.insert(t.var); break;
    case Term::Kind::Zero:
    case Term::Kind::One: break;
    default:
      collect_vars(*t.lhs, out);
      if (t.rhs) collect_vars(*t.rhs, out);
  }
}

int precedence(Term::Kind k) {
  switch (k) {
    case Term::Kind::Join: return 1;
    case Term::Kind::Meet: return 2;
    case Term::Kind::Neg:
    case Term::Kind::Star: return 3;
    default: return 4;
  }
}

void print(const Term& t, std::ostream& os) {
  auto child = [&](const Term& c, int min_prec) {
    if (precedence(c.kind) < min_prec) {
      os << "(";
      print(c, os);
      os << ")";
    } else {
      print(c, os);
    }
  };
  switch (t.kind) {
    case Term::Kind::Var: os << t.var; break;
    case Term::Kind::Zero: os << "0"; break;
    case Term::Kind::One: os << "1"; break;
    case Term::Kind::Meet:
      child(*t.lhs, 2);
      os << " & ";
      child(*t.rhs, 2);
      break;
    case Term::Kind::Join:
      child(*t.lhs, 1);
      os << " | ";
      child(*t.rhs, 1);
      break;
    case Term::Kind::Neg:
      child(*t.lhs, 3);
      os << "'";
      break;
    case Term::Kind::Star:
      child(*t.lhs, 3);
      os << "*";
      break;
  }
}

}  // namespace

std::vector<std::string> Term::variables() const {
  std::set<std::string> s;
  collect_vars(*this, s);
  return {s.begin(), s.end()};
}

std::string Term::to_string() const {
  std::ostringstream os;
  print(*this, os);
  return os.str();
}

bool Term::equals(const Term& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::Var: return var == other.var;
    case Kind::Zero:
    case Kind::One: return true;
    case Kind::Neg:
    case Kind::Star: return lhs->equals(*other.lhs);
    default: return lhs->equals(*other.lhs) && rhs->equals(*other.rhs);
  }
}

std::vector<std::string> Identity::variables() const {
  std::set<std::string> s;
  collect_vars(*lhs, s);
  collect_vars(*rhs, s);
  return {s.begin(), s.end()};
}

std::string Identity::to_string() const {
  return lhs->to_string() + " ~ " + rhs->to_string();
}

namespace {

TermPtr c_of(TermPtr x) {
  TermPtr core = Term::meet(x, Term::neg(x));
  return Term::join(core, Term::star(core));
}

TermPtr t_of(TermPtr x) {
  TermPtr c = c_of(std::move(x));
  return Term::meet(c, Term::neg(c));
}

TermPtr plus_of(TermPtr a) { return Term::neg(Term::star(Term::neg(std::move(a)))); }

TermPtr imp_of(TermPtr a, TermPtr b) {
  TermPtr first = Term::star(Term::star(Term::join(Term::star(a), Term::star(Term::star(b)))));
  TermPtr second = Term::join(
      Term::join(plus_of(Term::join(a, Term::star(a))), Term::star(a)),
      Term::join(b, Term::star(b)));
  return Term::meet(std::move(first), std::move(second));
}

}  // namespace

TermPtr builtin(const std::string& name, const std::vector<TermPtr>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw DomainError("operator " + name + " takes " + std::to_string(n) +
                        " argument(s), got " + std::to_string(args.size()));
  };
  if (name == "C") {
    need(1);
    return c_of(args[0]);
  }
  if (name == "T") {
    need(1);
    return t_of(args[0]);
  }
  if (name == "gamma") {
    need(2);
    return Term::join(Term::star(t_of(args[0])), c_of(args[1]));
  }
  if (name == "F") {
    need(1);
    return Term::meet(Term::star(t_of(args[0])), Term::star(Term::star(args[0])));
  }
  if (name == "plus") {
    need(1);
    return plus_of(args[0]);
  }
  if (name == "imp") {
    need(2);
    return imp_of(args[0], args[1]);
  }
  if (name == "discriminator") {
    need(3);
    const TermPtr& x = args[0];
    const TermPtr& y = args[1];
    const TermPtr& z = args[2];
    TermPtr biconditional = Term::meet(imp_of(x, y), imp_of(y, x));
    TermPtr f = builtin("F", {biconditional});
    return Term::join(Term::meet(f, z), Term::meet(Term::star(f), x));
  }
  throw DomainError("unknown operator " + name);
}

TermPtr beta_term(const std::vector<TermPtr>& args) {
  if (args.empty()) throw DomainError("beta requires at least one argument");
  int n = static_cast<int>(args.size());
  auto conj_with_star_at = [&](int star_at) {
    TermPtr acc;
    for (int i = 0; i < n; ++i) {
      TermPtr piece = (i == star_at) ? Term::star(args[i]) : args[i];
      acc = acc ? Term::meet(acc, piece) : piece;
    }
    return Term::star(acc);
  };
  TermPtr result = conj_with_star_at(-1);
  for (int i = 0; i < n; ++i) result = Term::join(result, conj_with_star_at(i));
  return result;
}

Identity beta_identity(int n) {
  if (n < 1) throw DomainError("beta requires n >= 1");
  std::vector<TermPtr> vars;
  for (int i = 0; i < n; ++i) vars.push_back(Term::make_var("x" + std::to_string(i)));
  return Identity::eq(beta_term(vars), Term::one());
}

int eval(const Algebra& a, const Term& t, const std::map<std::string, int>& assignment) {
  switch (t.kind) {
    case Term::Kind::Var: {
      auto it = assignment.find(t.var);
      if (it == assignment.end())
        throw DomainError("variable " + t.var + " is unassigned");
      if (it->second < 0 || it->second >= a.size())
        throw DomainError("assignment for " + t.var + " is out of range");
      return it->second;
    }
    case Term::Kind::Zero: return a.bottom();
    case Term::Kind::One: return a.top();
    case Term::Kind::Meet: return a.meet(eval(a, *t.lhs, assignment), eval(a, *t.rhs, assignment));
    case Term::Kind::Join: return a.join(eval(a, *t.lhs, assignment), eval(a, *t.rhs, assignment));
    case Term::Kind::Neg: return a.neg(eval(a, *t.lhs, assignment));
    case Term::Kind::Star: return a.star(eval(a, *t.lhs, assignment));
  }
  throw DomainError("corrupt term");
}

}  // namespace pmalg
