#include "loiqif/lang/printer.hpp"

namespace loiqif::lang {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent) * 4, ' '); }

// Renders a statement as a braced block body when it is a sequence, so that
// nested branches never need dangling-else disambiguation.
std::string block(const Stmt& s, int indent)
{
    std::string out = "{\n";
    if (const auto* seq = std::get_if<Seq>(&s.node)) {
        for (const auto& child : seq->body) {
            out += format(*child, indent + 1);
        }
    } else {
        out += format(s, indent + 1);
    }
    out += pad(indent) + "}";
    return out;
}

} // namespace

std::string format(const Expr& expr)
{
    return std::visit(overloaded{
                          [](const IntLit& i) { return std::to_string(i.value); },
                          [](const BoolLit& b) { return std::string(b.value ? "true" : "false"); },
                          [](const VarRef& v) { return v.name; },
                          [](const Unary& u) {
                              return std::string(to_string(u.op)) + "(" + format(*u.operand) + ")";
                          },
                          [](const Binary& b) {
                              return "(" + format(*b.lhs) + " " + std::string(to_string(b.op)) +
                                     " " + format(*b.rhs) + ")";
                          },
                      },
                      expr.node);
}

std::string format(const Stmt& stmt, int indent)
{
    return std::visit(overloaded{
                          [&](const Skip&) { return pad(indent) + "skip;\n"; },
                          [&](const Assign& a) {
                              return pad(indent) + a.target + " = " + format(*a.value) + ";\n";
                          },
                          [&](const Seq& q) {
                              std::string out;
                              for (const auto& child : q.body) {
                                  out += format(*child, indent);
                              }
                              return out;
                          },
                          [&](const If& i) {
                              return pad(indent) + "if (" + format(*i.cond) + ") " +
                                     block(*i.then_branch, indent) + " else " +
                                     block(*i.else_branch, indent) + "\n";
                          },
                          [&](const While& w) {
                              return pad(indent) + "while (" + format(*w.cond) + ") " +
                                     block(*w.body, indent) + "\n";
                          },
                      },
                      stmt.node);
}

std::string format(const Program& program)
{
    auto out = format(program.root(), 0);
    if (out.empty()) {
        out = "skip;\n";
    }
    return out;
}

} // namespace loiqif::lang
