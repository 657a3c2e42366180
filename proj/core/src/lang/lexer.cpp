#include "lexer.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <utility>

namespace loiqif::lang::detail {

namespace {

struct Keyword {
    std::string_view text;
    TokenKind kind;
};

constexpr std::array kKeywords{
    Keyword{"skip", TokenKind::KwSkip},   Keyword{"if", TokenKind::KwIf},
    Keyword{"then", TokenKind::KwThen},   Keyword{"else", TokenKind::KwElse},
    Keyword{"while", TokenKind::KwWhile}, Keyword{"true", TokenKind::KwTrue},
    Keyword{"tt", TokenKind::KwTrue},     Keyword{"false", TokenKind::KwFalse},
    Keyword{"ff", TokenKind::KwFalse},
};

// Longest match first.
struct Punct {
    std::string_view text;
    TokenKind kind;
};

constexpr std::array kPunct{
    Punct{"<<", TokenKind::Shl},       Punct{">>", TokenKind::Shr},
    Punct{"==", TokenKind::EqEq},      Punct{"!=", TokenKind::NotEq},
    Punct{"<=", TokenKind::LessEq},    Punct{">=", TokenKind::GreaterEq},
    Punct{"&&", TokenKind::AndAnd},    Punct{"||", TokenKind::OrOr},
    Punct{"++", TokenKind::PlusPlus},  Punct{"--", TokenKind::MinusMinus},
    Punct{"+=", TokenKind::PlusAssign}, Punct{"-=", TokenKind::MinusAssign},
    Punct{"(", TokenKind::LParen},     Punct{")", TokenKind::RParen},
    Punct{"{", TokenKind::LBrace},     Punct{"}", TokenKind::RBrace},
    Punct{";", TokenKind::Semicolon},  Punct{"=", TokenKind::Assign},
    Punct{"+", TokenKind::Plus},       Punct{"-", TokenKind::Minus},
    Punct{"*", TokenKind::Star},       Punct{"/", TokenKind::Slash},
    Punct{"%", TokenKind::Percent},    Punct{"&", TokenKind::Amp},
    Punct{"|", TokenKind::Pipe},       Punct{"^", TokenKind::Caret},
    Punct{"~", TokenKind::Tilde},      Punct{"!", TokenKind::Bang},
    Punct{"<", TokenKind::Less},       Punct{">", TokenKind::Greater},
};

class Scanner {
public:
    explicit Scanner(std::string_view src) : src_(src) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            if (at_end()) {
                out.push_back(Token{TokenKind::End, "", 0, pos_});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    bool at_end() const { return i_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const
    {
        return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
    }

    void advance()
    {
        if (src_[i_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        ++i_;
    }

    void skip_blank()
    {
        while (!at_end()) {
            const char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (!at_end() && peek() != '\n') {
                    advance();
                }
            } else if (c == '/' && peek(1) == '*') {
                const SourcePos start = pos_;
                advance();
                advance();
                while (!at_end() && !(peek() == '*' && peek(1) == '/')) {
                    advance();
                }
                if (at_end()) {
                    throw ParseError(start, "unterminated comment");
                }
                advance();
                advance();
            } else {
                return;
            }
        }
    }

    Token next()
    {
        const SourcePos start = pos_;
        const char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (!at_end() &&
                   (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                word += peek();
                advance();
            }
            for (const auto& kw : kKeywords) {
                if (kw.text == word) {
                    return Token{kw.kind, word, 0, start};
                }
            }
            return Token{TokenKind::Identifier, word, 0, start};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return number(start);
        }
        for (const auto& p : kPunct) {
            if (src_.substr(i_, p.text.size()) == p.text) {
                for (std::size_t k = 0; k < p.text.size(); ++k) {
                    advance();
                }
                return Token{p.kind, std::string(p.text), 0, start};
            }
        }
        throw ParseError(start, std::string("unknown character '") + c + "'");
    }

    Token number(SourcePos start)
    {
        std::string text;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
            text += peek();
            advance();
        }
        unsigned base = 10;
        std::string_view digits = text;
        if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
            base = 16;
            digits.remove_prefix(2);
        } else if (text.size() > 1 && text[0] == '0') {
            base = 8;
            digits.remove_prefix(1);
        }
        std::uint64_t value = 0;
        constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
        for (char d : digits) {
            unsigned v = 0;
            if (std::isdigit(static_cast<unsigned char>(d))) {
                v = static_cast<unsigned>(d - '0');
            } else if (std::isxdigit(static_cast<unsigned char>(d))) {
                v = static_cast<unsigned>(std::tolower(static_cast<unsigned char>(d)) - 'a' + 10);
            } else {
                v = base;
            }
            if (v >= base) {
                throw ParseError(start, "malformed integer literal '" + text + "'");
            }
            if (value > (kMax - v) / base) {
                throw ParseError(start, "integer literal '" + text + "' does not fit in 64 bits");
            }
            value = value * base + v;
        }
        return Token{TokenKind::Number, text, value, start};
    }

    std::string_view src_;
    std::size_t i_ = 0;
    SourcePos pos_;
};

} // namespace

std::string describe(TokenKind kind)
{
    switch (kind) {
    case TokenKind::Identifier:
        return "identifier";
    case TokenKind::Number:
        return "integer literal";
    case TokenKind::End:
        return "end of input";
    default:
        break;
    }
    for (const auto& kw : kKeywords) {
        if (kw.kind == kind) {
            return "'" + std::string(kw.text) + "'";
        }
    }
    for (const auto& p : kPunct) {
        if (p.kind == kind) {
            return "'" + std::string(p.text) + "'";
        }
    }
    return "token";
}

std::vector<Token> tokenize(std::string_view source)
{
    return Scanner(source).run();
}

} // namespace loiqif::lang::detail
