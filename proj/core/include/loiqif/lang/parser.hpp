#pragma once

#include "loiqif/lang/ast.hpp"

#include <string>
#include <string_view>

namespace loiqif::lang {

/// Parses while-language source.
///
///   program   ::= stmt*
///   stmt      ::= 'skip' | ident '=' expr | ident ('++' | '--')
///               | ident ('+=' | '-=') expr
///               | 'if' '(' expr ')' ['then'] stmt ['else' stmt]
///               | 'while' '(' expr ')' stmt | '{' stmt* '}'
///
/// Semicolons terminate or separate statements and may be omitted before
/// 'else' and '}'. Expressions use C syntax and precedence; integer
/// literals are decimal, octal with a leading 0, or hex with 0x. `//` and
/// `/* */` comments are ignored. Throws ParseError with line, column and
/// the expected-token set.
Program parse(std::string_view source);

/// Parses a single expression (the whole input must be consumed).
ExprPtr parse_expression(std::string_view source);

} // namespace loiqif::lang
