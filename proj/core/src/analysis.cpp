#include "loiqif/analysis.hpp"

#include "loiqif/measures.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

namespace loiqif {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using lang::AttackerConfig;
using lang::Program;
using lang::VarDecl;

class Renamer {
public:
    explicit Renamer(std::string suffix) : suffix_(std::move(suffix)) {}

    std::string name(const std::string& v) const { return v + suffix_; }

    lang::ExprPtr expr(const lang::Expr& e) const
    {
        return std::visit(
            overloaded{
                [](const lang::IntLit& i) { return lang::make_int(i.value); },
                [](const lang::BoolLit& b) { return lang::make_bool(b.value); },
                [&](const lang::VarRef& v) { return lang::make_var(name(v.name)); },
                [&](const lang::Unary& u) { return lang::make_unary(u.op, expr(*u.operand)); },
                [&](const lang::Binary& b) {
                    return lang::make_binary(b.op, expr(*b.lhs), expr(*b.rhs));
                },
            },
            e.node);
    }

    lang::StmtPtr stmt(const lang::Stmt& s) const
    {
        return std::visit(
            overloaded{
                [](const lang::Skip&) { return lang::make_skip(); },
                [&](const lang::Assign& a) {
                    return lang::make_assign(name(a.target), expr(*a.value));
                },
                [&](const lang::Seq& q) {
                    std::vector<lang::StmtPtr> body;
                    for (const auto& child : q.body) {
                        body.push_back(stmt(*child));
                    }
                    return lang::make_seq(std::move(body));
                },
                [&](const lang::If& i) {
                    return lang::make_if(expr(*i.cond), stmt(*i.then_branch),
                                         stmt(*i.else_branch));
                },
                [&](const lang::While& w) {
                    return lang::make_while(expr(*w.cond), stmt(*w.body));
                },
            },
            s.node);
    }

private:
    std::string suffix_;
};

std::set<std::string> names_of(const Program& p, const AttackerConfig& cfg)
{
    auto out = p.variables();
    for (const auto* group : {&cfg.high, &cfg.low, &cfg.locals}) {
        for (const auto& d : *group) {
            out.insert(d.name);
        }
    }
    for (const auto& o : cfg.observed()) {
        out.insert(o);
    }
    return out;
}

using OutcomeKey = std::pair<std::vector<std::uint64_t>, lang::Observable>;

} // namespace

Partition multi_run(std::span<const Partition> runs)
{
    if (runs.empty()) {
        throw InvalidArgument("multi_run needs at least one partition");
    }
    Partition out = runs.front();
    for (const auto& p : runs.subspan(1)) {
        out = join(out, p);
    }
    return out;
}

SameInformation leaks_same_information(std::span<const Partition> runs)
{
    for (std::size_t i = 0; i < runs.size(); ++i) {
        for (std::size_t j = i + 1; j < runs.size(); ++j) {
            if (!leq(runs[i], runs[j]) && !leq(runs[j], runs[i])) {
                return {false, std::pair{i, j}};
            }
        }
    }
    return {};
}

ComposedProgram self_compose(const Program& p1, const AttackerConfig& cfg1, const Program& p2,
                             const AttackerConfig& cfg2)
{
    cfg1.validate_for(p1);
    cfg2.validate_for(p2);
    if (cfg1.mode != cfg2.mode) {
        throw ConfigError("self-composition needs both runs in the same attacker mode");
    }
    const auto inputs = cfg1.enumerated();
    const auto inputs2 = cfg2.enumerated();
    const bool same_inputs = std::equal(
        inputs.begin(), inputs.end(), inputs2.begin(), inputs2.end(),
        [](const VarDecl& a, const VarDecl& b) { return a.name == b.name && a.bits == b.bits; });
    if (!same_inputs) {
        throw ConfigError("self-composition needs identical enumerated inputs in both runs");
    }

    const std::array<const Program*, 2> programs{&p1, &p2};
    const std::array<const AttackerConfig*, 2> configs{&cfg1, &cfg2};
    std::set<std::string> all = names_of(p1, cfg1);
    all.merge(names_of(p2, cfg2));

    std::string tag = "_";
    auto collides = [&] {
        return std::any_of(all.begin(), all.end(), [&](const std::string& v) {
            return all.contains(v + tag + "1") || all.contains(v + tag + "2");
        });
    };
    while (collides()) {
        tag += "_";
    }
    const std::array<Renamer, 2> copy{Renamer(tag + "1"), Renamer(tag + "2")};

    std::vector<lang::StmtPtr> body;
    for (const auto& r : copy) {
        for (const auto& d : inputs) {
            body.push_back(lang::make_assign(r.name(d.name), lang::make_var(d.name)));
        }
    }

    AttackerConfig out;
    out.high = cfg1.high;
    out.low = cfg1.enumerated_lows();
    out.mode = cfg1.mode;
    out.local_bits = cfg1.local_bits;
    out.cap = std::max(cfg1.cap, cfg2.cap);
    out.observe.emplace();
    out.budget = 1 + 2 * inputs.size();

    for (std::size_t i = 0; i < 2; ++i) {
        const auto& cfg = *configs[i];
        const auto& r = copy[i];
        body.push_back(r.stmt(programs[i]->root()));
        std::set<std::string> fixed;
        for (const auto& d : cfg.low) {
            if (d.value) {
                out.low.push_back({r.name(d.name), d.bits, d.value});
                fixed.insert(d.name);
            }
        }
        for (const auto& v : names_of(*programs[i], cfg)) {
            if (!fixed.contains(v)) {
                out.locals.push_back({r.name(v), cfg.width_of(v), std::nullopt});
            }
        }
        for (const auto& o : cfg.observed()) {
            out.observe->push_back(r.name(o));
        }
        const auto limit = std::numeric_limits<std::uint64_t>::max();
        out.budget = cfg.budget > limit - out.budget ? limit : out.budget + cfg.budget;
    }

    Program composed(lang::make_seq(std::move(body)));
    for (const auto& v : composed.variables()) {
        if (all.contains(v) && !std::any_of(inputs.begin(), inputs.end(),
                                            [&](const VarDecl& d) { return d.name == v; })) {
            throw CompositionError("variable '" + v + "' survived renaming");
        }
    }
    out.validate_for(composed);
    return {std::move(composed), std::move(out)};
}

ComposedProgram self_compose(const Program& p1, const Program& p2, const AttackerConfig& cfg)
{
    return self_compose(p1, cfg, p2, cfg);
}

AttackerConfig with_low_values(const AttackerConfig& cfg,
                               const std::map<std::string, std::uint64_t>& values)
{
    AttackerConfig out = cfg;
    for (const auto& [name, value] : values) {
        auto it = std::find_if(out.low.begin(), out.low.end(),
                               [&](const VarDecl& d) { return d.name == name; });
        if (it == out.low.end()) {
            throw ConfigError("'" + name + "' is not a low variable");
        }
        it->value = value;
    }
    return out;
}

std::uint64_t default_max_iterations(const AttackerConfig& cfg)
{
    unsigned widest = 0;
    for (const auto& d : cfg.high) {
        widest = std::max(widest, d.bits);
    }
    if (widest >= 63) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return (std::uint64_t{1} << widest) + 1;
}

LoopAnalysis loop_analyze(const Program& program, const AttackerConfig& cfg,
                          std::optional<std::uint64_t> max_iterations)
{
    if (!program.first_top_level_loop()) {
        throw InvalidArgument("program has no top-level while loop");
    }
    const auto cap = max_iterations.value_or(default_max_iterations(cfg));
    const auto traced = lang::loi(program, cfg);
    const auto& domain = traced.partition.domain();
    const auto low_count = cfg.enumerated_lows().size();

    std::vector<std::optional<OutcomeKey>> keys(domain.size());
    std::map<std::uint64_t, std::vector<AtomIndex>> by_count;
    std::uint64_t max_count = 0;
    for (AtomIndex a = 0; a < domain.size(); ++a) {
        const auto& t = traced.traces[a];
        if (t.observable.kind == lang::ObservableKind::NonTermination) {
            continue;
        }
        auto values = lang::atom_values(cfg, a);
        values.resize(low_count);
        keys[a] = OutcomeKey{std::move(values), t.observable};
        by_count[t.loop_iterations].push_back(a);
        max_count = std::max(max_count, t.loop_iterations);
    }

    const auto bottom = Partition::bottom(domain);
    auto w = [&](std::uint64_t i) {
        auto it = by_count.find(i);
        if (it == by_count.end()) {
            return bottom;
        }
        std::map<OutcomeKey, std::uint64_t> ids;
        std::vector<std::uint64_t> labels(domain.size(), 0);
        for (auto a : it->second) {
            labels[a] = ids.try_emplace(*keys[a], ids.size() + 1).first->second;
        }
        return Partition::from_labels(domain, labels);
    };

    LoopAnalysis out{{}, {}, bottom, bottom, traced.partition};
    for (std::uint64_t n = 0;; ++n) {
        out.iterations.push_back(w(n));
        out.w_chain.push_back(n == 0 ? out.iterations.back()
                                     : join(out.w_chain.back(), out.iterations.back()));
        out.iterations_analyzed = n;
        const auto len = out.w_chain.size();
        if (n >= 1 && out.w_chain[len - 1] == out.w_chain[len - 2] && max_count <= n) {
            out.stabilized = true;
            break;
        }
        if (n >= cap) {
            break;
        }
    }

    std::map<OutcomeKey, std::set<std::uint64_t>> counts;
    for (AtomIndex a = 0; a < domain.size(); ++a) {
        if (keys[a]) {
            counts[*keys[a]].insert(traced.traces[a].loop_iterations);
        }
    }
    std::map<OutcomeKey, std::uint64_t> merged;
    std::vector<std::uint64_t> labels(domain.size());
    const std::uint64_t nonterm = 0;
    std::uint64_t next = 1;
    for (AtomIndex a = 0; a < domain.size(); ++a) {
        if (!keys[a]) {
            labels[a] = nonterm;
        } else if (counts[*keys[a]].size() >= 2) {
            labels[a] = merged.try_emplace(*keys[a], next).first->second;
            if (labels[a] == next) {
                ++next;
            }
        } else {
            labels[a] = next++;
        }
    }
    out.collision = Partition::from_labels(domain, labels);
    out.result = meet(out.w_chain.back(), out.collision);
    return out;
}

double program_capacity(const Program& program, const AttackerConfig& cfg)
{
    return channel_capacity(lang::loi(program, cfg).partition);
}

} // namespace loiqif
