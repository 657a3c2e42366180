#pragma once

#include "loiqif/error.hpp"

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace loiqif::lang {

enum class UnaryOp { Neg, Not, BitNot };

enum class BinaryOp {
    Add, Sub, Mul, Div, Mod,
    BitAnd, BitOr, BitXor, Shl, Shr,
    Eq, Ne, Lt, Le, Gt, Ge,
    And, Or,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntLit {
    std::uint64_t value = 0;
};
struct BoolLit {
    bool value = false;
};
struct VarRef {
    std::string name;
};
struct Unary {
    UnaryOp op;
    ExprPtr operand;
};
struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Expr {
    std::variant<IntLit, BoolLit, VarRef, Unary, Binary> node;
    SourcePos pos;
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Skip {};
struct Assign {
    std::string target;
    ExprPtr value;
};
struct Seq {
    std::vector<StmtPtr> body;
};
struct If {
    ExprPtr cond;
    StmtPtr then_branch;
    StmtPtr else_branch;
};
struct While {
    ExprPtr cond;
    StmtPtr body;
};

struct Stmt {
    std::variant<Skip, Assign, Seq, If, While> node;
    SourcePos pos;
};

// Builders, mostly for generated programs and rewriting.
ExprPtr make_int(std::uint64_t value);
ExprPtr make_bool(bool value);
ExprPtr make_var(std::string name);
ExprPtr make_unary(UnaryOp op, ExprPtr operand);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
StmtPtr make_skip();
StmtPtr make_assign(std::string target, ExprPtr value);
StmtPtr make_seq(std::vector<StmtPtr> body);
StmtPtr make_if(ExprPtr cond, StmtPtr then_branch, StmtPtr else_branch);
StmtPtr make_while(ExprPtr cond, StmtPtr body);

/// A parsed while-language program. Immutable; copies share the tree.
class Program {
public:
    explicit Program(StmtPtr root);

    const Stmt& root() const noexcept { return *root_; }
    const StmtPtr& root_ptr() const noexcept { return root_; }

    /// Every variable that is read or assigned.
    std::set<std::string> variables() const;
    /// Variables that appear on the left of an assignment.
    std::set<std::string> assigned_variables() const;

    /// The first while statement of the top-level sequence, if any.
    const While* first_top_level_loop() const noexcept;

private:
    StmtPtr root_;
};

std::string_view to_string(UnaryOp op) noexcept;
std::string_view to_string(BinaryOp op) noexcept;

} // namespace loiqif::lang
