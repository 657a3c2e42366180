#include "loiqif/lang/ast.hpp"

namespace loiqif::lang {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void collect(const Expr& e, std::set<std::string>& out)
{
    std::visit(overloaded{
                   [](const IntLit&) {},
                   [](const BoolLit&) {},
                   [&](const VarRef& v) { out.insert(v.name); },
                   [&](const Unary& u) { collect(*u.operand, out); },
                   [&](const Binary& b) {
                       collect(*b.lhs, out);
                       collect(*b.rhs, out);
                   },
               },
               e.node);
}

void collect(const Stmt& s, std::set<std::string>& all, std::set<std::string>& assigned)
{
    std::visit(overloaded{
                   [](const Skip&) {},
                   [&](const Assign& a) {
                       all.insert(a.target);
                       assigned.insert(a.target);
                       collect(*a.value, all);
                   },
                   [&](const Seq& q) {
                       for (const auto& child : q.body) {
                           collect(*child, all, assigned);
                       }
                   },
                   [&](const If& i) {
                       collect(*i.cond, all);
                       collect(*i.then_branch, all, assigned);
                       collect(*i.else_branch, all, assigned);
                   },
                   [&](const While& w) {
                       collect(*w.cond, all);
                       collect(*w.body, all, assigned);
                   },
               },
               s.node);
}

} // namespace

ExprPtr make_int(std::uint64_t value) { return std::make_shared<const Expr>(Expr{IntLit{value}, {}}); }

ExprPtr make_bool(bool value) { return std::make_shared<const Expr>(Expr{BoolLit{value}, {}}); }

ExprPtr make_var(std::string name)
{
    return std::make_shared<const Expr>(Expr{VarRef{std::move(name)}, {}});
}

ExprPtr make_unary(UnaryOp op, ExprPtr operand)
{
    return std::make_shared<const Expr>(Expr{Unary{op, std::move(operand)}, {}});
}

ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs)
{
    return std::make_shared<const Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}, {}});
}

StmtPtr make_skip() { return std::make_shared<const Stmt>(Stmt{Skip{}, {}}); }

StmtPtr make_assign(std::string target, ExprPtr value)
{
    return std::make_shared<const Stmt>(Stmt{Assign{std::move(target), std::move(value)}, {}});
}

StmtPtr make_seq(std::vector<StmtPtr> body)
{
    return std::make_shared<const Stmt>(Stmt{Seq{std::move(body)}, {}});
}

StmtPtr make_if(ExprPtr cond, StmtPtr then_branch, StmtPtr else_branch)
{
    return std::make_shared<const Stmt>(
        Stmt{If{std::move(cond), std::move(then_branch), std::move(else_branch)}, {}});
}

StmtPtr make_while(ExprPtr cond, StmtPtr body)
{
    return std::make_shared<const Stmt>(Stmt{While{std::move(cond), std::move(body)}, {}});
}

Program::Program(StmtPtr root)
    : root_(root ? std::move(root) : make_skip())
{
}

std::set<std::string> Program::variables() const
{
    std::set<std::string> all;
    std::set<std::string> assigned;
    collect(*root_, all, assigned);
    return all;
}

std::set<std::string> Program::assigned_variables() const
{
    std::set<std::string> all;
    std::set<std::string> assigned;
    collect(*root_, all, assigned);
    return assigned;
}

const While* Program::first_top_level_loop() const noexcept
{
    if (const auto* w = std::get_if<While>(&root_->node)) {
        return w;
    }
    if (const auto* seq = std::get_if<Seq>(&root_->node)) {
        for (const auto& child : seq->body) {
            if (const auto* w = std::get_if<While>(&child->node)) {
                return w;
            }
        }
    }
    return nullptr;
}

std::string_view to_string(UnaryOp op) noexcept
{
    switch (op) {
    case UnaryOp::Neg:
        return "-";
    case UnaryOp::Not:
        return "!";
    case UnaryOp::BitNot:
        return "~";
    }
    return "?";
}

std::string_view to_string(BinaryOp op) noexcept
{
    switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::BitAnd: return "&";
    case BinaryOp::BitOr: return "|";
    case BinaryOp::BitXor: return "^";
    case BinaryOp::Shl: return "<<";
    case BinaryOp::Shr: return ">>";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
    }
    return "?";
}

} // namespace loiqif::lang
