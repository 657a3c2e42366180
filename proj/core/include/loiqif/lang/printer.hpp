#pragma once

#include "loiqif/lang/ast.hpp"

#include <string>

namespace loiqif::lang {

/// Formats a program as source text that parse() accepts and maps back to
/// an equivalent tree. Binary subexpressions are fully parenthesised.
std::string format(const Program& program);
std::string format(const Stmt& stmt, int indent = 0);
std::string format(const Expr& expr);

} // namespace loiqif::lang
