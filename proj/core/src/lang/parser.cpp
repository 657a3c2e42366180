#include "loiqif/lang/parser.hpp"

#include "lexer.hpp"

#include <optional>

namespace loiqif::lang {

namespace {

using detail::Token;
using detail::TokenKind;

struct BinaryLevel {
    std::vector<std::pair<TokenKind, BinaryOp>> ops;
};

// Lowest precedence first, as in C.
const std::vector<BinaryLevel>& binary_levels()
{
    static const std::vector<BinaryLevel> levels{
        {{{TokenKind::OrOr, BinaryOp::Or}}},
        {{{TokenKind::AndAnd, BinaryOp::And}}},
        {{{TokenKind::Pipe, BinaryOp::BitOr}}},
        {{{TokenKind::Caret, BinaryOp::BitXor}}},
        {{{TokenKind::Amp, BinaryOp::BitAnd}}},
        {{{TokenKind::EqEq, BinaryOp::Eq}, {TokenKind::NotEq, BinaryOp::Ne}}},
        {{{TokenKind::Less, BinaryOp::Lt},
          {TokenKind::LessEq, BinaryOp::Le},
          {TokenKind::Greater, BinaryOp::Gt},
          {TokenKind::GreaterEq, BinaryOp::Ge}}},
        {{{TokenKind::Shl, BinaryOp::Shl}, {TokenKind::Shr, BinaryOp::Shr}}},
        {{{TokenKind::Plus, BinaryOp::Add}, {TokenKind::Minus, BinaryOp::Sub}}},
        {{{TokenKind::Star, BinaryOp::Mul},
          {TokenKind::Slash, BinaryOp::Div},
          {TokenKind::Percent, BinaryOp::Mod}}},
    };
    return levels;
}

const std::vector<std::string> kStatementStart{"identifier", "'skip'", "'if'", "'while'", "'{'"};
const std::vector<std::string> kExpressionStart{"identifier", "integer literal", "'true'",
                                                "'false'",    "'('",             "'-'",
                                                "'!'",        "'~'"};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Program program()
    {
        auto body = statements(TokenKind::End);
        expect(TokenKind::End, {"end of input"});
        return Program(wrap(std::move(body), SourcePos{}));
    }

    ExprPtr standalone_expression()
    {
        auto e = expression();
        expect(TokenKind::End, {"end of input"});
        return e;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    bool at(TokenKind k) const { return peek().kind == k; }

    const Token& take()
    {
        const Token& t = toks_[i_];
        if (t.kind != TokenKind::End) {
            ++i_;
        }
        return t;
    }

    bool accept(TokenKind k)
    {
        if (at(k)) {
            take();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        const auto& t = peek();
        std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.pos, "unexpected " + found, std::move(expected));
    }

    const Token& expect(TokenKind k, std::vector<std::string> expected)
    {
        if (!at(k)) {
            fail(std::move(expected));
        }
        return take();
    }

    static StmtPtr wrap(std::vector<StmtPtr> body, SourcePos pos)
    {
        if (body.size() == 1) {
            return body.front();
        }
        return std::make_shared<const Stmt>(Stmt{Seq{std::move(body)}, pos});
    }

    void skip_semicolons()
    {
        while (accept(TokenKind::Semicolon)) {
        }
    }

    std::vector<StmtPtr> statements(TokenKind terminator)
    {
        std::vector<StmtPtr> body;
        skip_semicolons();
        while (!at(terminator) && !at(TokenKind::End)) {
            body.push_back(statement());
            skip_semicolons();
        }
        return body;
    }

    // A statement in branch or loop-body position, with its optional ';'.
    StmtPtr branch()
    {
        auto s = statement();
        accept(TokenKind::Semicolon);
        return s;
    }

    StmtPtr statement()
    {
        const SourcePos pos = peek().pos;
        switch (peek().kind) {
        case TokenKind::KwSkip:
            take();
            return std::make_shared<const Stmt>(Stmt{Skip{}, pos});
        case TokenKind::LBrace: {
            take();
            auto body = statements(TokenKind::RBrace);
            expect(TokenKind::RBrace, {"'}'"});
            if (body.empty()) {
                return std::make_shared<const Stmt>(Stmt{Skip{}, pos});
            }
            return std::make_shared<const Stmt>(Stmt{Seq{std::move(body)}, pos});
        }
        case TokenKind::KwIf: {
            take();
            expect(TokenKind::LParen, {"'('"});
            auto cond = expression();
            expect(TokenKind::RParen, {"')'"});
            accept(TokenKind::KwThen);
            auto then_branch = branch();
            StmtPtr else_branch;
            if (accept(TokenKind::KwElse)) {
                else_branch = statement();
            } else {
                else_branch = std::make_shared<const Stmt>(Stmt{Skip{}, pos});
            }
            return std::make_shared<const Stmt>(
                Stmt{If{std::move(cond), std::move(then_branch), std::move(else_branch)}, pos});
        }
        case TokenKind::KwWhile: {
            take();
            expect(TokenKind::LParen, {"'('"});
            auto cond = expression();
            expect(TokenKind::RParen, {"')'"});
            auto body = statement();
            return std::make_shared<const Stmt>(Stmt{While{std::move(cond), std::move(body)}, pos});
        }
        case TokenKind::Identifier:
            return assignment();
        default:
            fail(kStatementStart);
        }
    }

    StmtPtr assignment()
    {
        const Token& name = take();
        const SourcePos pos = name.pos;
        std::string target = name.text;
        auto var = [&] { return std::make_shared<const Expr>(Expr{VarRef{target}, pos}); };
        auto one = [&] { return std::make_shared<const Expr>(Expr{IntLit{1}, pos}); };
        auto bin = [&](BinaryOp op, ExprPtr rhs) {
            return std::make_shared<const Expr>(Expr{Binary{op, var(), std::move(rhs)}, pos});
        };
        ExprPtr value;
        switch (peek().kind) {
        case TokenKind::Assign:
            take();
            value = expression();
            break;
        case TokenKind::PlusPlus:
            take();
            value = bin(BinaryOp::Add, one());
            break;
        case TokenKind::MinusMinus:
            take();
            value = bin(BinaryOp::Sub, one());
            break;
        case TokenKind::PlusAssign:
            take();
            value = bin(BinaryOp::Add, expression());
            break;
        case TokenKind::MinusAssign:
            take();
            value = bin(BinaryOp::Sub, expression());
            break;
        default:
            fail({"'='", "'++'", "'--'", "'+='", "'-='"});
        }
        return std::make_shared<const Stmt>(Stmt{Assign{std::move(target), std::move(value)}, pos});
    }

    ExprPtr expression() { return binary(0); }

    ExprPtr binary(std::size_t level)
    {
        const auto& levels = binary_levels();
        if (level == levels.size()) {
            return unary();
        }
        auto lhs = binary(level + 1);
        for (;;) {
            std::optional<BinaryOp> op;
            for (const auto& [kind, bop] : levels[level].ops) {
                if (at(kind)) {
                    op = bop;
                    break;
                }
            }
            if (!op) {
                return lhs;
            }
            const SourcePos pos = take().pos;
            auto rhs = binary(level + 1);
            lhs = std::make_shared<const Expr>(Expr{Binary{*op, std::move(lhs), std::move(rhs)}, pos});
        }
    }

    ExprPtr unary()
    {
        const SourcePos pos = peek().pos;
        std::optional<UnaryOp> op;
        switch (peek().kind) {
        case TokenKind::Minus:
            op = UnaryOp::Neg;
            break;
        case TokenKind::Bang:
            op = UnaryOp::Not;
            break;
        case TokenKind::Tilde:
            op = UnaryOp::BitNot;
            break;
        default:
            return primary();
        }
        take();
        auto operand = unary();
        return std::make_shared<const Expr>(Expr{Unary{*op, std::move(operand)}, pos});
    }

    ExprPtr primary()
    {
        const Token& t = peek();
        const SourcePos pos = t.pos;
        switch (t.kind) {
        case TokenKind::Number: {
            const auto value = take().number;
            return std::make_shared<const Expr>(Expr{IntLit{value}, pos});
        }
        case TokenKind::KwTrue:
            take();
            return std::make_shared<const Expr>(Expr{BoolLit{true}, pos});
        case TokenKind::KwFalse:
            take();
            return std::make_shared<const Expr>(Expr{BoolLit{false}, pos});
        case TokenKind::Identifier: {
            std::string name = take().text;
            return std::make_shared<const Expr>(Expr{VarRef{std::move(name)}, pos});
        }
        case TokenKind::LParen: {
            take();
            auto e = expression();
            expect(TokenKind::RParen, {"')'"});
            return e;
        }
        default:
            fail(kExpressionStart);
        }
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

} // namespace

Program parse(std::string_view source)
{
    return Parser(detail::tokenize(source)).program();
}

ExprPtr parse_expression(std::string_view source)
{
    return Parser(detail::tokenize(source)).standalone_expression();
}

} // namespace loiqif::lang
