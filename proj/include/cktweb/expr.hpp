#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cktweb/ratfunc.hpp"

namespace cktweb {

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom (('^' | '**') ['-'] integer)?
//   atom   := integer | name | '(' expr ')'
// Integer literals only (write 1/2, not 0.5). names[i] is variable i.
RationalFunction parse_expression(std::string_view text, const std::vector<std::string>& names = {"x", "y", "z"});

// Convenience for expressions that must evaluate to a constant (e.g. catalog entries with a, k substituted).
Rational parse_constant(std::string_view text, const std::vector<std::string>& names, const std::vector<Rational>& values);

}  // namespace cktweb
