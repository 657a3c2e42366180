#pragma once

#include "loiqif/lang/loi.hpp"
#include "loiqif/partition.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace loiqif {

/// Join of every run's partition. Throws InvalidArgument on an empty list.
Partition multi_run(std::span<const Partition> runs);

struct SameInformation {
    bool same = true;
    /// First pair (i < j) whose join lies strictly above both runs.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// True iff the runs form a chain, i.e. every pair is order related.
SameInformation leaks_same_information(std::span<const Partition> runs);

struct ComposedProgram {
    lang::Program program;
    lang::AttackerConfig config;
};

/// P1'; P2' over copies renamed apart. The prelude copies every enumerated
/// input into a per-copy alias, so both copies see the same secret. For
/// programs that terminate on every input, loi(result) equals
/// join(loi(p1), loi(p2)). Both configurations must agree on the
/// enumerated inputs; throws ConfigError otherwise.
ComposedProgram self_compose(const lang::Program& p1, const lang::AttackerConfig& cfg1,
                             const lang::Program& p2, const lang::AttackerConfig& cfg2);

ComposedProgram self_compose(const lang::Program& p1, const lang::Program& p2,
                             const lang::AttackerConfig& cfg);

/// Copy of cfg with the given lows fixed. Throws ConfigError for names that
/// are not low variables.
lang::AttackerConfig with_low_values(const lang::AttackerConfig& cfg,
                                     const std::map<std::string, std::uint64_t>& values);

struct LoopAnalysis {
    /// W_i: atoms finishing after exactly i iterations, split by output.
    std::vector<Partition> iterations;
    /// W_{<=n} for n = 0..iterations_analyzed.
    std::vector<Partition> w_chain;
    Partition collision;
    /// meet(w_chain.back(), collision).
    Partition result;
    /// Direct LoI(P) for the cross-check.
    Partition direct;
    std::size_t iterations_analyzed = 0;
    bool stabilized = false;
    bool matches_loi() const { return result == direct; }
};

/// Default iteration cap: 2^(widest high) + 1.
std::uint64_t default_max_iterations(const lang::AttackerConfig& cfg);

/// Observation chain and collision partition of the first top-level loop.
/// Throws InvalidArgument when the program has no such loop.
LoopAnalysis loop_analyze(const lang::Program& program, const lang::AttackerConfig& cfg,
                          std::optional<std::uint64_t> max_iterations = std::nullopt);

/// log2 |LoI(P)|.
double program_capacity(const lang::Program& program, const lang::AttackerConfig& cfg);

} // namespace loiqif
