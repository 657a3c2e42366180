#include "loiqif/lang/config.hpp"

#include <limits>
#include <set>

namespace loiqif::lang {

namespace {

std::uint64_t mask_for(unsigned bits)
{
    return bits >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << bits) - 1;
}

} // namespace

std::string_view to_string(AttackerMode mode) noexcept
{
    return mode == AttackerMode::Active ? "active" : "passive";
}

void AttackerConfig::validate() const
{
    std::set<std::string> names;
    auto check = [&](const VarDecl& d, std::string_view role) {
        if (d.name.empty()) {
            throw ConfigError(std::string(role) + " variable with an empty name");
        }
        if (!names.insert(d.name).second) {
            throw ConfigError("variable '" + d.name + "' declared more than once");
        }
        if (d.bits < 1 || d.bits > 64) {
            throw ConfigError("variable '" + d.name + "' has width " + std::to_string(d.bits) +
                              "; widths must be in [1, 64]");
        }
        if (d.value && *d.value > mask_for(d.bits)) {
            throw ConfigError("value " + std::to_string(*d.value) + " of '" + d.name +
                              "' does not fit in " + std::to_string(d.bits) + " bits");
        }
    };
    for (const auto& d : high) {
        check(d, "high");
        if (d.value) {
            throw ConfigError("high variable '" + d.name + "' must not carry a fixed value");
        }
    }
    for (const auto& d : low) {
        check(d, "low");
        if (mode == AttackerMode::Active && !d.value) {
            throw ConfigError("active attacker: low variable '" + d.name +
                              "' needs a fixed value");
        }
    }
    for (const auto& d : locals) {
        check(d, "local");
    }
    if (local_bits < 1 || local_bits > 64) {
        throw ConfigError("local_bits must be in [1, 64]");
    }
    if (budget == 0) {
        throw ConfigError("step budget must be positive");
    }
    if (enumeration_size() > cap) {
        throw CapExceeded("input space of " + std::to_string(enumeration_size()) +
                          " atoms exceeds the enumeration cap of " + std::to_string(cap));
    }
}

void AttackerConfig::validate_for(const Program& program) const
{
    validate();
    const auto assigned = program.assigned_variables();
    for (const auto& name : observed()) {
        if (!find(name) && !assigned.contains(name)) {
            throw ConfigError("observed variable '" + name +
                              "' is neither declared nor assigned by the program");
        }
    }
}

std::vector<std::string> AttackerConfig::observed() const
{
    if (observe) {
        return *observe;
    }
    std::vector<std::string> out;
    for (const auto& d : low) {
        out.push_back(d.name);
    }
    return out;
}

const VarDecl* AttackerConfig::find(const std::string& name) const
{
    for (const auto* group : {&high, &low, &locals}) {
        for (const auto& d : *group) {
            if (d.name == name) {
                return &d;
            }
        }
    }
    return nullptr;
}

unsigned AttackerConfig::width_of(const std::string& name) const
{
    const auto* d = find(name);
    return d ? d->bits : local_bits;
}

std::vector<VarDecl> AttackerConfig::enumerated_lows() const
{
    std::vector<VarDecl> out;
    if (mode == AttackerMode::Passive) {
        for (const auto& d : low) {
            if (!d.value) {
                out.push_back(d);
            }
        }
    }
    return out;
}

std::vector<VarDecl> AttackerConfig::enumerated() const
{
    auto out = enumerated_lows();
    out.insert(out.end(), high.begin(), high.end());
    return out;
}

std::uint64_t AttackerConfig::enumeration_size() const
{
    unsigned total_bits = 0;
    for (const auto& d : enumerated()) {
        total_bits += d.bits;
        if (total_bits >= 64) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return std::uint64_t{1} << total_bits;
}

} // namespace loiqif::lang
