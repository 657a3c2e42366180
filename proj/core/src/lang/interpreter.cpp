#include "loiqif/lang/interpreter.hpp"

#include <limits>
#include <unordered_map>

namespace loiqif::lang {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct RuntimeFault {};
struct BudgetExhausted {};

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

enum class ExprKind : std::uint8_t { Const, Load, Unary, Binary };
enum class StmtKind : std::uint8_t { Skip, Assign, Seq, If, While };

struct CExpr {
    ExprKind kind;
    std::uint8_t op = 0;
    std::uint64_t value = 0;
    std::uint32_t slot = kNone;
    std::uint32_t lhs = kNone;
    std::uint32_t rhs = kNone;
};

struct CStmt {
    StmtKind kind;
    std::uint32_t slot = kNone;
    std::uint32_t expr = kNone;
    std::uint32_t a = kNone; // then / body / first child
    std::uint32_t b = kNone; // else / child count
    bool tracked = false;
};

std::uint64_t mask_for(unsigned bits)
{
    return bits >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << bits) - 1;
}

} // namespace

std::string to_string(const Observable& o)
{
    switch (o.kind) {
    case ObservableKind::NonTermination:
        return "nontermination";
    case ObservableKind::RuntimeError:
        return "runtime-error";
    case ObservableKind::Terminated:
        break;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < o.values.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(o.values[i]);
    }
    return out + ")";
}

struct Interpreter::Impl {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::uint32_t> slot_of;
    std::vector<std::uint64_t> masks;
    std::vector<CExpr> exprs;
    std::vector<CStmt> stmts;
    std::vector<std::uint32_t> children;
    std::uint32_t root = kNone;
    std::vector<std::uint32_t> observed_slots;
    std::vector<std::uint32_t> input_slots;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> fixed;
    const While* tracked_loop = nullptr;

    struct State {
        std::vector<std::uint64_t> values;
        std::vector<std::uint8_t> bound;
        std::uint64_t steps = 0;
        std::uint64_t budget = 0;
        std::uint64_t iterations = 0;
    };

    std::uint32_t slot(const std::string& name, const AttackerConfig& cfg)
    {
        auto [it, inserted] = slot_of.try_emplace(name, static_cast<std::uint32_t>(names.size()));
        if (inserted) {
            names.push_back(name);
            masks.push_back(mask_for(cfg.width_of(name)));
        }
        return it->second;
    }

    std::uint32_t compile(const Expr& e, const AttackerConfig& cfg)
    {
        CExpr c = std::visit(
            overloaded{
                [](const IntLit& i) { return CExpr{ExprKind::Const, 0, i.value}; },
                [](const BoolLit& b) {
                    return CExpr{ExprKind::Const, 0, b.value ? std::uint64_t{1} : std::uint64_t{0}};
                },
                [&](const VarRef& v) {
                    CExpr out{ExprKind::Load};
                    out.slot = slot(v.name, cfg);
                    return out;
                },
                [&](const Unary& u) {
                    CExpr out{ExprKind::Unary, static_cast<std::uint8_t>(u.op)};
                    out.lhs = compile(*u.operand, cfg);
                    return out;
                },
                [&](const Binary& b) {
                    CExpr out{ExprKind::Binary, static_cast<std::uint8_t>(b.op)};
                    out.lhs = compile(*b.lhs, cfg);
                    out.rhs = compile(*b.rhs, cfg);
                    return out;
                },
            },
            e.node);
        exprs.push_back(c);
        return static_cast<std::uint32_t>(exprs.size() - 1);
    }

    std::uint32_t compile(const Stmt& s, const AttackerConfig& cfg)
    {
        CStmt c = std::visit(
            overloaded{
                [](const Skip&) { return CStmt{StmtKind::Skip}; },
                [&](const Assign& a) {
                    CStmt out{StmtKind::Assign};
                    out.slot = slot(a.target, cfg);
                    out.expr = compile(*a.value, cfg);
                    return out;
                },
                [&](const Seq& q) {
                    std::vector<std::uint32_t> ids;
                    ids.reserve(q.body.size());
                    for (const auto& child : q.body) {
                        ids.push_back(compile(*child, cfg));
                    }
                    CStmt out{StmtKind::Seq};
                    out.a = static_cast<std::uint32_t>(children.size());
                    out.b = static_cast<std::uint32_t>(ids.size());
                    children.insert(children.end(), ids.begin(), ids.end());
                    return out;
                },
                [&](const If& i) {
                    CStmt out{StmtKind::If};
                    out.expr = compile(*i.cond, cfg);
                    out.a = compile(*i.then_branch, cfg);
                    out.b = compile(*i.else_branch, cfg);
                    return out;
                },
                [&](const While& w) {
                    CStmt out{StmtKind::While};
                    out.expr = compile(*w.cond, cfg);
                    out.a = compile(*w.body, cfg);
                    out.tracked = (&w == tracked_loop);
                    return out;
                },
            },
            s.node);
        stmts.push_back(c);
        return static_cast<std::uint32_t>(stmts.size() - 1);
    }

    std::uint64_t eval(std::uint32_t id, State& st) const
    {
        const CExpr& e = exprs[id];
        switch (e.kind) {
        case ExprKind::Const:
            return e.value;
        case ExprKind::Load:
            if (!st.bound[e.slot]) {
                throw ConfigError("variable '" + names[e.slot] + "' is read before it has a value");
            }
            return st.values[e.slot];
        case ExprKind::Unary: {
            const auto v = eval(e.lhs, st);
            switch (static_cast<UnaryOp>(e.op)) {
            case UnaryOp::Neg:
                return std::uint64_t{0} - v;
            case UnaryOp::Not:
                return v == 0 ? 1 : 0;
            case UnaryOp::BitNot:
                return ~v;
            }
            return 0;
        }
        case ExprKind::Binary: {
            // Both operands are always evaluated; there is no short-circuit.
            const auto l = eval(e.lhs, st);
            const auto r = eval(e.rhs, st);
            switch (static_cast<BinaryOp>(e.op)) {
            case BinaryOp::Add: return l + r;
            case BinaryOp::Sub: return l - r;
            case BinaryOp::Mul: return l * r;
            case BinaryOp::Div:
                if (r == 0) {
                    throw RuntimeFault{};
                }
                return l / r;
            case BinaryOp::Mod:
                if (r == 0) {
                    throw RuntimeFault{};
                }
                return l % r;
            case BinaryOp::BitAnd: return l & r;
            case BinaryOp::BitOr: return l | r;
            case BinaryOp::BitXor: return l ^ r;
            case BinaryOp::Shl: return r >= 64 ? 0 : l << r;
            case BinaryOp::Shr: return r >= 64 ? 0 : l >> r;
            case BinaryOp::Eq: return l == r;
            case BinaryOp::Ne: return l != r;
            case BinaryOp::Lt: return l < r;
            case BinaryOp::Le: return l <= r;
            case BinaryOp::Gt: return l > r;
            case BinaryOp::Ge: return l >= r;
            case BinaryOp::And: return (l != 0) && (r != 0);
            case BinaryOp::Or: return (l != 0) || (r != 0);
            }
            return 0;
        }
        }
        return 0;
    }

    static void tick(State& st)
    {
        if (++st.steps > st.budget) {
            throw BudgetExhausted{};
        }
    }

    void exec(std::uint32_t id, State& st) const
    {
        const CStmt& s = stmts[id];
        tick(st);
        switch (s.kind) {
        case StmtKind::Skip:
            return;
        case StmtKind::Assign:
            st.values[s.slot] = eval(s.expr, st) & masks[s.slot];
            st.bound[s.slot] = 1;
            return;
        case StmtKind::Seq:
            for (std::uint32_t k = 0; k < s.b; ++k) {
                exec(children[s.a + k], st);
            }
            return;
        case StmtKind::If:
            exec(eval(s.expr, st) != 0 ? s.a : s.b, st);
            return;
        case StmtKind::While:
            while (eval(s.expr, st) != 0) {
                if (s.tracked) {
                    ++st.iterations;
                }
                exec(s.a, st);
                tick(st);
            }
            return;
        }
    }

    Trace run(State st) const
    {
        Trace t;
        try {
            exec(root, st);
            t.observable.kind = ObservableKind::Terminated;
            t.observable.values.reserve(observed_slots.size());
            for (auto slot : observed_slots) {
                if (!st.bound[slot]) {
                    throw ConfigError("observed variable '" + names[slot] +
                                      "' has no value at termination");
                }
                t.observable.values.push_back(st.values[slot]);
            }
        } catch (const RuntimeFault&) {
            t.observable = Observable{ObservableKind::RuntimeError, {}};
        } catch (const BudgetExhausted&) {
            t.observable = Observable{ObservableKind::NonTermination, {}};
        }
        t.loop_iterations = st.iterations;
        t.steps = st.steps;
        return t;
    }

    State fresh(std::uint64_t budget) const
    {
        State st;
        st.values.assign(names.size(), 0);
        st.bound.assign(names.size(), 0);
        st.budget = budget;
        for (const auto& [slot, value] : fixed) {
            st.values[slot] = value;
            st.bound[slot] = 1;
        }
        return st;
    }
};

Interpreter::Interpreter(const Program& program, const AttackerConfig& cfg)
    : impl_(std::make_unique<Impl>())
{
    cfg.validate_for(program);
    auto& m = *impl_;
    for (const auto* group : {&cfg.high, &cfg.low, &cfg.locals}) {
        for (const auto& d : *group) {
            m.slot(d.name, cfg);
        }
    }
    m.tracked_loop = program.first_top_level_loop();
    m.root = m.compile(program.root(), cfg);
    for (const auto& name : cfg.observed()) {
        m.observed_slots.push_back(m.slot(name, cfg));
    }
    for (const auto& d : cfg.enumerated()) {
        m.input_slots.push_back(m.slot_of.at(d.name));
    }
    for (const auto& d : cfg.low) {
        if (d.value) {
            m.fixed.emplace_back(m.slot_of.at(d.name), *d.value);
        }
    }
}

Interpreter::~Interpreter() = default;
Interpreter::Interpreter(Interpreter&&) noexcept = default;
Interpreter& Interpreter::operator=(Interpreter&&) noexcept = default;

Trace Interpreter::run(const Store& initial, std::uint64_t budget) const
{
    auto st = impl_->fresh(budget);
    for (const auto& [name, value] : initial) {
        auto it = impl_->slot_of.find(name);
        if (it == impl_->slot_of.end()) {
            // Unused by the program and undeclared: nothing to initialise.
            continue;
        }
        if (value & ~impl_->masks[it->second]) {
            throw ConfigError("initial value " + std::to_string(value) + " of '" + name +
                              "' does not fit its width");
        }
        st.values[it->second] = value;
        st.bound[it->second] = 1;
    }
    return impl_->run(std::move(st));
}

Trace Interpreter::run_inputs(std::span<const std::uint64_t> inputs, std::uint64_t budget) const
{
    if (inputs.size() != impl_->input_slots.size()) {
        throw ConfigError("expected " + std::to_string(impl_->input_slots.size()) +
                          " input values, got " + std::to_string(inputs.size()));
    }
    auto st = impl_->fresh(budget);
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        const auto slot = impl_->input_slots[k];
        st.values[slot] = inputs[k] & impl_->masks[slot];
        st.bound[slot] = 1;
    }
    return impl_->run(std::move(st));
}

Observable eval(const Program& program, const AttackerConfig& cfg, const Store& initial)
{
    return eval(program, cfg, initial, cfg.budget);
}

Observable eval(const Program& program, const AttackerConfig& cfg, const Store& initial,
                std::uint64_t budget)
{
    return Interpreter(program, cfg).run(initial, budget).observable;
}

} // namespace loiqif::lang
