#pragma once

#include "loiqif/distribution.hpp"
#include "loiqif/lang/interpreter.hpp"
#include "loiqif/partition.hpp"

#include <cstdint>
#include <vector>

namespace loiqif::lang {

/// Atoms are the joint values of cfg.enumerated(). A single variable gives
/// atoms "0", "1", ...; several give tuples "(l,h)". Index order is mixed
/// radix with the last variable least significant.
Domain input_domain(const AttackerConfig& cfg);

/// Values of cfg.enumerated() encoded by `atom`.
std::vector<std::uint64_t> atom_values(const AttackerConfig& cfg, AtomIndex atom);

struct LoiResult {
    Partition partition;
    /// Kernel of the projection onto enumerated lows; bottom when active.
    Partition low_view;
    /// One trace per atom, in domain order.
    std::vector<Trace> traces;
};

/// LoI(P): atoms share a block iff they produce the same observable. In
/// passive mode the enumerated low inputs are part of the observable.
LoiResult loi(const Program& program, const AttackerConfig& cfg);

/// Active: H(LoI(P)). Passive: H(LoI(P) | L).
double leakage(const Program& program, const AttackerConfig& cfg, const Distribution& mu);
double leakage(const LoiResult& result, AttackerMode mode, const Distribution& mu);

} // namespace loiqif::lang
