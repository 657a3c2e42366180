#pragma once

#include "loiqif/lang/ast.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace loiqif::lang {

enum class AttackerMode { Active, Passive };

std::string_view to_string(AttackerMode mode) noexcept;

struct VarDecl {
    std::string name;
    unsigned bits = 1;
    /// Fixed initial value. Required for lows in active mode; a low with a
    /// value is held constant in passive mode too.
    std::optional<std::uint64_t> value;
};

/// Who the attacker is and what it sees.
///
/// Active attackers choose the lows, so every low carries a fixed value and
/// atoms are the high inputs. Passive attackers only eavesdrop: lows without
/// a fixed value are enumerated alongside the highs and atoms are
/// (low..., high...) tuples; the enumerated low inputs are part of what the
/// attacker observes.
struct AttackerConfig {
    std::vector<VarDecl> high;
    std::vector<VarDecl> low;
    /// Explicit widths for program-local variables; others get local_bits.
    std::vector<VarDecl> locals;
    /// Variables observed at termination. Unset means every low variable.
    std::optional<std::vector<std::string>> observe;
    AttackerMode mode = AttackerMode::Active;
    std::uint64_t budget = 1'000'000;
    unsigned local_bits = 32;
    /// Largest number of atoms loi() may enumerate.
    std::uint64_t cap = std::uint64_t{1} << 20;

    /// Throws ConfigError on duplicate names, widths outside [1, 64], values
    /// that do not fit their width, active lows without a value, a zero
    /// budget, or an enumeration larger than cap (CapExceeded).
    void validate() const;

    /// validate() plus: every observed variable is declared or assigned by
    /// the program.
    void validate_for(const Program& program) const;

    std::vector<std::string> observed() const;

    /// Declared width, or local_bits for undeclared names.
    unsigned width_of(const std::string& name) const;

    const VarDecl* find(const std::string& name) const;

    /// Variables whose values form an atom, in atom-tuple order: enumerated
    /// lows (passive mode only) then highs.
    std::vector<VarDecl> enumerated() const;

    /// Enumerated lows (empty in active mode).
    std::vector<VarDecl> enumerated_lows() const;

    /// Product of 2^bits over enumerated variables, saturating at 2^64 - 1.
    std::uint64_t enumeration_size() const;
};

} // namespace loiqif::lang
