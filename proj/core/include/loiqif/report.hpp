#pragma once

#include "loiqif/distribution.hpp"
#include "loiqif/lang/loi.hpp"
#include "loiqif/measures.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loiqif {

struct AnalysisReport {
    std::string program_id;
    Partition partition;
    MeasureReport measures;
    std::string distribution_id;
    lang::AttackerMode mode = lang::AttackerMode::Active;
    /// H(LoI) for an active attacker, H(LoI | L) for a passive one.
    double leakage_bits = 0.0;
    std::vector<std::string> warnings;
};

/// Report over an already computed LoI. `mu` defaults to uniform.
AnalysisReport make_report(std::string program_id, const lang::LoiResult& loi,
                           lang::AttackerMode mode, const std::optional<Distribution>& mu,
                           std::string distribution_id, std::size_t max_guesses = 4);

AnalysisReport analyze(std::string program_id, const lang::Program& program,
                       const lang::AttackerConfig& cfg, const std::optional<Distribution>& mu,
                       std::string distribution_id, std::size_t max_guesses = 4);

/// Nine significant digits, the precision used for every reported real.
double round_real(double value);
std::string format_real(double value);

/// Human-readable rendering.
std::string format_report(const AnalysisReport& report);
std::string format_measures(const MeasureReport& m);

} // namespace loiqif
