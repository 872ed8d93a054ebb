#pragma once

#include <string_view>

#include "shellcalc/expr.hpp"

namespace shellcalc {

/// Parses the expression grammar:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ['^' signed-int | '^(1/2)']
///   atom   := number | 'i' | ident | func '(' expr ')' | '(' expr ')'
///   func   := sqrt | sinh | cosh | exp
///
/// Whitespace is insignificant; numbers are decimal with an optional
/// exponent; 'i' is the imaginary unit. px/py/pz are accepted as aliases
/// for p1/p2/p3. Throws ParseError (with byte offset) on malformed input
/// or unknown function names.
Expr parse(std::string_view text);

}  // namespace shellcalc
