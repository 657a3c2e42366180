#include "loiqif/report.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace loiqif {

double round_real(double value)
{
    return std::stod(format_real(value));
}

std::string format_real(double value)
{
    if (value == 0.0) {
        return "0";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

AnalysisReport make_report(std::string program_id, const lang::LoiResult& loi,
                           lang::AttackerMode mode, const std::optional<Distribution>& mu,
                           std::string distribution_id, std::size_t max_guesses)
{
    const auto& x = loi.partition;
    const Distribution dist = mu ? *mu : Distribution::uniform(x.domain());
    require_same_domain(x.domain(), dist.domain(), "distribution");

    AnalysisReport r{std::move(program_id), x, measure_all(x, dist, max_guesses),
                     std::move(distribution_id), mode, lang::leakage(loi, mode, dist), {}};
    if (mode == lang::AttackerMode::Passive) {
        const double h = entropy(x, dist);
        const double hl = entropy(loi.low_view, dist);
        r.warnings.push_back("passive attacker: leakage is H(LoI|L) = H(LoI) - H(L) = " +
                             format_real(h) + " - " + format_real(hl) +
                             " bits; the measures above are of LoI itself and include what "
                             "the observed low inputs reveal");
    }
    std::size_t diverging = 0;
    std::size_t faulting = 0;
    for (const auto& t : loi.traces) {
        diverging += t.observable.kind == lang::ObservableKind::NonTermination;
        faulting += t.observable.kind == lang::ObservableKind::RuntimeError;
    }
    if (diverging > 0) {
        r.warnings.push_back(std::to_string(diverging) +
                             " input(s) exhausted the step budget and form one "
                             "non-termination block");
    }
    if (faulting > 0) {
        r.warnings.push_back(std::to_string(faulting) +
                             " input(s) divided by zero and form one runtime-error block");
    }
    return r;
}

AnalysisReport analyze(std::string program_id, const lang::Program& program,
                       const lang::AttackerConfig& cfg, const std::optional<Distribution>& mu,
                       std::string distribution_id, std::size_t max_guesses)
{
    return make_report(std::move(program_id), lang::loi(program, cfg), cfg.mode, mu,
                       std::move(distribution_id), max_guesses);
}

std::string format_measures(const MeasureReport& m)
{
    std::string out;
    auto line = [&](const std::string& key, const std::string& value) {
        out += "  " + key + std::string(key.size() < 10 ? 10 - key.size() : 1, ' ') + value + "\n";
    };
    line("H", format_real(m.entropy_bits));
    for (const auto& [n, g] : m.guess_prob) {
        line("G" + std::to_string(n), to_string(g));
    }
    line("NG", to_string(m.expected_guesses));
    line("ME", format_real(m.me_leakage_bits));
    line("GE", to_string(m.ge_leakage));
    line("ME'", format_real(m.me_prime_bits));
    line("GE'", to_string(m.ge_prime));
    line("capacity", format_real(m.channel_capacity_bits));
    return out;
}

std::string format_report(const AnalysisReport& r)
{
    std::string out = "program       " + r.program_id + "\n";
    out += "mode          " + std::string(lang::to_string(r.mode)) + "\n";
    out += "distribution  " + r.distribution_id + "\n";
    out += "blocks        " + std::to_string(r.partition.block_count()) + "\n";
    out += "partition     " + to_string(r.partition) + "\n";
    out += "leakage       " + format_real(r.leakage_bits) + " bits\n";
    out += "measures\n" + format_measures(r.measures);
    for (const auto& w : r.warnings) {
        out += "warning: " + w + "\n";
    }
    return out;
}

} // namespace loiqif
