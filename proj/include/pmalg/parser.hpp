#pragma once

#include <variant>

#include "pmalg/term.hpp"

namespace pmalg {

// Parses the identity DSL.
//
//   input    := expr (('~' | '<=') expr)?
//   expr     := imp
//   imp      := or ('->' imp)?            right associative, Heyting arrow
//   or       := and ('|' and)*
//   and      := postfix ('&' postfix)*
//   postfix  := primary (''' | '*')*
//   primary  := var | '0' | '1' | '(' expr ')' | macro
//   macro    := 'C'|'T'|'F' '(' expr ')' | 'G' '(' expr ',' expr ')'
//             | 'B' digits '(' expr {',' expr} ')'
//   var      := [a-z][a-z0-9]*
//
// '~' builds an identity, '<=' an inequality (s <= t becomes s & t ~ s).
// Macros expand at parse time; B<n> takes exactly n arguments.
// Throws ParseError with a byte offset on malformed input.
std::variant<TermPtr, Identity> parse(const std::string& text);

// Conveniences that reject the other shape with a ParseError.
TermPtr parse_term(const std::string& text);
Identity parse_identity(const std::string& text);

}  // namespace pmalg
