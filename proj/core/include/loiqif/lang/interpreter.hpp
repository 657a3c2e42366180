#pragma once

#include "loiqif/lang/ast.hpp"
#include "loiqif/lang/config.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace loiqif::lang {

using Store = std::map<std::string, std::uint64_t>;

enum class ObservableKind { Terminated, NonTermination, RuntimeError };

/// What the attacker sees at the end of one run. Terminated carries one
/// value per observed variable, in AttackerConfig::observed() order.
struct Observable {
    ObservableKind kind = ObservableKind::Terminated;
    std::vector<std::uint64_t> values;

    friend auto operator<=>(const Observable&, const Observable&) = default;
};

std::string to_string(const Observable& o);

/// Result of a run that also counts iterations of the first top-level loop.
struct Trace {
    Observable observable;
    /// Body executions of the tracked loop; 0 if it was never reached.
    std::uint64_t loop_iterations = 0;
    std::uint64_t steps = 0;
};

/// Big-step evaluator over unsigned integers of declared width.
///
/// Expressions are computed in 64-bit unsigned arithmetic; assignment
/// truncates to the target's width. Comparisons and connectives yield 0 or
/// 1, and any non-zero condition is true. Each executed statement (and each
/// loop test) consumes one step; exceeding the budget yields
/// NonTermination. Division or modulo by zero yields RuntimeError. Reading
/// a variable that has no value is a precondition violation (ConfigError).
class Interpreter {
public:
    /// Resolves variables against cfg and validates cfg for the program.
    Interpreter(const Program& program, const AttackerConfig& cfg);
    ~Interpreter();
    Interpreter(Interpreter&&) noexcept;
    Interpreter& operator=(Interpreter&&) noexcept;

    /// Runs from `initial`. Declared lows with a fixed value start at that
    /// value unless `initial` overrides them. Values must fit their widths.
    Trace run(const Store& initial, std::uint64_t budget) const;

    /// Fast path: values for cfg.enumerated(), in that order.
    Trace run_inputs(std::span<const std::uint64_t> inputs, std::uint64_t budget) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One evaluation with the configuration's budget.
Observable eval(const Program& program, const AttackerConfig& cfg, const Store& initial);

Observable eval(const Program& program, const AttackerConfig& cfg, const Store& initial,
                std::uint64_t budget);

} // namespace loiqif::lang
