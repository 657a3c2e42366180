#pragma once

#include "loiqif/error.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace loiqif::lang::detail {

enum class TokenKind {
    Identifier,
    Number,
    // keywords
    KwSkip, KwIf, KwThen, KwElse, KwWhile, KwTrue, KwFalse,
    // punctuation
    LParen, RParen, LBrace, RBrace, Semicolon,
    Assign, PlusAssign, MinusAssign, PlusPlus, MinusMinus,
    Plus, Minus, Star, Slash, Percent,
    Amp, Pipe, Caret, Tilde, Bang, Shl, Shr,
    EqEq, NotEq, Less, LessEq, Greater, GreaterEq,
    AndAnd, OrOr,
    End,
};

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    std::uint64_t number = 0;
    SourcePos pos;
};

/// Spelling used in diagnostics, e.g. "';'" or "identifier".
std::string describe(TokenKind kind);

/// Splits source into tokens, ending with a single End token. Throws
/// ParseError on unknown characters and malformed or oversized literals.
std::vector<Token> tokenize(std::string_view source);

} // namespace loiqif::lang::detail
