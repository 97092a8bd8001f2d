#include "pmalg/parser.hpp"

#include <cctype>

namespace pmalg {

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat_str(const char* t) {
    skip_ws();
    std::size_t len = std::char_traits<char>::length(t);
    if (s.compare(pos, len, t) == 0) {
      pos += len;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

  TermPtr parse_expr() {
    TermPtr lhs = parse_or();
    skip_ws();
    if (eat_str("->")) {
      TermPtr rhs = parse_expr();  // right associative
      return builtin("imp", {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  TermPtr parse_or() {
    TermPtr t = parse_and();
    while (true) {
      skip_ws();
      if (pos < s.size() && s[pos] == '|') {
        ++pos;
        t = Term::join(std::move(t), parse_and());
      } else {
        return t;
      }
    }
  }

  TermPtr parse_and() {
    TermPtr t = parse_postfix();
    while (eat('&')) t = Term::meet(std::move(t), parse_postfix());
    return t;
  }

  TermPtr parse_postfix() {
    TermPtr t = parse_primary();
    while (true) {
      skip_ws();
      if (pos < s.size() && s[pos] == '\'') {
        ++pos;
        t = Term::neg(std::move(t));
      } else if (pos < s.size() && s[pos] == '*') {
        ++pos;
        t = Term::star(std::move(t));
      } else {
        return t;
      }
    }
  }

  TermPtr parse_primary() {
    skip_ws();
    if (pos >= s.size()) fail("expected a term");
    char c = s[pos];
    if (c == '0') {
      ++pos;
      return Term::zero();
    }
    if (c == '1') {
      ++pos;
      return Term::one();
    }
    if (c == '(') {
      ++pos;
      TermPtr t = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      ++pos;
      while (pos < s.size() &&
             (std::islower(static_cast<unsigned char>(s[pos])) ||
              std::isdigit(static_cast<unsigned char>(s[pos]))))
        ++pos;
      return Term::make_var(s.substr(start, pos - start));
    }
    if (std::isupper(static_cast<unsigned char>(c))) return parse_macro();
    fail("unexpected character");
  }

  TermPtr parse_macro() {
    std::size_t start = pos;
    char m = s[pos++];
    if (m == 'B') {
      std::size_t digits_start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == digits_start) fail("B must be followed by an arity, like B2(...)");
      int n = 0;
      for (std::size_t i = digits_start; i < pos; ++i) n = n * 10 + (s[i] - '0');
      if (n < 1) {
        pos = digits_start;
        fail("B0 is not a valid operator");
      }
      if (n > 16) {
        pos = digits_start;
        fail("B arity is limited to 16");
      }
      auto args = parse_args();
      if (static_cast<int>(args.size()) != n) {
        pos = start;
        fail("B" + std::to_string(n) + " takes exactly " + std::to_string(n) +
             " arguments, got " + std::to_string(args.size()));
      }
      return beta_term(args);
    }
    std::vector<TermPtr> args;
    switch (m) {
      case 'C':
      case 'T':
      case 'F': {
        args = parse_args();
        if (args.size() != 1) {
          pos = start;
          fail(std::string(1, m) + " takes exactly 1 argument");
        }
        return builtin(m == 'C' ? "C" : m == 'T' ? "T" : "F", args);
      }
      case 'G': {
        args = parse_args();
        if (args.size() != 2) {
          pos = start;
          fail("G takes exactly 2 arguments");
        }
        return builtin("gamma", args);
      }
      default:
        pos = start;
        fail("unknown operator; expected C, T, G, F or B<n>");
    }
  }

  std::vector<TermPtr> parse_args() {
    if (!eat('(')) fail("expected '('");
    std::vector<TermPtr> args;
    args.push_back(parse_expr());
    while (eat(',')) args.push_back(parse_expr());
    if (!eat(')')) fail("expected ')' or ','");
    return args;
  }
};

}  // namespace

std::variant<TermPtr, Identity> parse(const std::string& text) {
  Parser p(text);
  TermPtr lhs = p.parse_expr();
  p.skip_ws();
  if (p.at_end()) return lhs;
  bool leq = false;
  if (p.eat_str("<=")) {
    leq = true;
  } else if (!p.eat('~')) {
    p.fail("expected '~', '<=' or end of input");
  }
  TermPtr rhs = p.parse_expr();
  if (!p.at_end()) p.fail("unexpected trailing input");
  if (leq) return Identity::leq(std::move(lhs), std::move(rhs));
  return Identity::eq(std::move(lhs), std::move(rhs));
}

TermPtr parse_term(const std::string& text) {
  auto r = parse(text);
  if (auto* t = std::get_if<TermPtr>(&r)) return *t;
  throw ParseError("expected a term, found an identity", 0);
}

Identity parse_identity(const std::string& text) {
  auto r = parse(text);
  if (auto* i = std::get_if<Identity>(&r)) return *i;
  throw ParseError("expected an identity with '~' or '<='", text.size());
}

}  // namespace pmalg
