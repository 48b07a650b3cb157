#pragma once

#include "lienorm/rational_function.hpp"

#include <span>
#include <string>
#include <string_view>

namespace lienorm {

/// Parses an expression in the grammar
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' integer)?
///   primary := integer | identifier | '(' expr ')'
///
/// Whitespace is insignificant. An identifier resolves to a declared variable
/// name, to the canonical name x1..xn, or (n <= 3) to the aliases x, y, z for
/// x1, x2, x3. Throws SyntaxError (with position) or InputError.
RationalFunction parse_expression(std::string_view text, std::span<const std::string> variables);

/// Index of an identifier under the rules above, or -1.
int resolve_variable(std::string_view ident, std::span<const std::string> variables);

}  // namespace lienorm
