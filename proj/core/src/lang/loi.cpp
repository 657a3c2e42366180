#include "loiqif/lang/loi.hpp"

#include "loiqif/measures.hpp"

#include <map>
#include <utility>

namespace loiqif::lang {

namespace {

std::vector<std::uint64_t> radices(const AttackerConfig& cfg)
{
    std::vector<std::uint64_t> out;
    for (const auto& d : cfg.enumerated()) {
        out.push_back(std::uint64_t{1} << d.bits);
    }
    return out;
}

void decode(std::span<const std::uint64_t> radix, std::uint64_t index,
            std::vector<std::uint64_t>& values)
{
    values.resize(radix.size());
    for (std::size_t k = radix.size(); k-- > 0;) {
        values[k] = index % radix[k];
        index /= radix[k];
    }
}

} // namespace

Domain input_domain(const AttackerConfig& cfg)
{
    cfg.validate();
    const auto radix = radices(cfg);
    const auto n = cfg.enumeration_size();
    std::vector<std::string> atoms;
    atoms.reserve(n);
    std::vector<std::uint64_t> values;
    for (std::uint64_t i = 0; i < n; ++i) {
        decode(radix, i, values);
        if (values.size() == 1) {
            atoms.push_back(std::to_string(values[0]));
            continue;
        }
        std::string label = "(";
        for (std::size_t k = 0; k < values.size(); ++k) {
            label += (k ? "," : "") + std::to_string(values[k]);
        }
        atoms.push_back(label + ")");
    }
    return Domain(std::move(atoms));
}

std::vector<std::uint64_t> atom_values(const AttackerConfig& cfg, AtomIndex atom)
{
    const auto radix = radices(cfg);
    std::vector<std::uint64_t> values;
    decode(radix, atom, values);
    return values;
}

LoiResult loi(const Program& program, const AttackerConfig& cfg)
{
    const Interpreter interp(program, cfg);
    const auto domain = input_domain(cfg);
    const auto radix = radices(cfg);
    const auto low_count = cfg.enumerated_lows().size();

    std::vector<Trace> traces;
    traces.reserve(domain.size());
    std::map<std::pair<std::vector<std::uint64_t>, Observable>, std::uint64_t> ids;
    std::map<std::vector<std::uint64_t>, std::uint64_t> low_ids;
    std::vector<std::uint64_t> labels(domain.size());
    std::vector<std::uint64_t> low_labels(domain.size());
    std::vector<std::uint64_t> values;
    for (AtomIndex a = 0; a < domain.size(); ++a) {
        decode(radix, a, values);
        traces.push_back(interp.run_inputs(values, cfg.budget));
        std::vector<std::uint64_t> lows(values.begin(),
                                        values.begin() + static_cast<std::ptrdiff_t>(low_count));
        labels[a] = ids.try_emplace({lows, traces.back().observable}, ids.size()).first->second;
        low_labels[a] = low_ids.try_emplace(std::move(lows), low_ids.size()).first->second;
    }
    return LoiResult{Partition::from_labels(domain, labels),
                     Partition::from_labels(domain, low_labels), std::move(traces)};
}

double leakage(const LoiResult& result, AttackerMode mode, const Distribution& mu)
{
    if (mode == AttackerMode::Active) {
        return entropy(result.partition, mu);
    }
    return conditional_entropy(result.partition, result.low_view, mu);
}

double leakage(const Program& program, const AttackerConfig& cfg, const Distribution& mu)
{
    return leakage(loi(program, cfg), cfg.mode, mu);
}

} // namespace loiqif::lang
