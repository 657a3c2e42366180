#pragma once

#include "loiqif/distribution.hpp"
#include "loiqif/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace loiqif {

enum class Relation {
    Equal,
    CoarserThan, ///< x strictly below y
    FinerThan,   ///< x strictly above y
    Incomparable,
};

std::string_view to_string(Relation r) noexcept;

/// A distribution and a guess count under which the left partition beats
/// the right one on every measure, refuting "left is below right".
///
/// The distribution is uniform over `violated_block` (a block of the right
/// partition split by the left one) and zero elsewhere; n = |block| - 1.
struct OrderWitness {
    Distribution distribution;
    std::size_t n = 1;
    Block violated_block;
};

struct OrderResult {
    Relation relation = Relation::Equal;
    /// Present iff leq(x, y) fails.
    std::optional<OrderWitness> witness_xy;
    /// Present iff leq(y, x) fails.
    std::optional<OrderWitness> witness_yx;
};

/// First block of y (canonical order) that meets two or more blocks of x,
/// or nullopt when leq(x, y).
std::optional<Block> find_split_block(const Partition& x, const Partition& y);

/// Uniform-on-split-block witness refuting leq(x, y); nullopt when leq holds.
std::optional<OrderWitness> make_witness(const Partition& x, const Partition& y);

/// Recomputes the measures under w.distribution and checks
/// G_n(x) > G_n(y), G_1(x) > G_1(y), H(x) > H(y) and NG(x) < NG(y).
/// Never throws; inconsistent inputs yield false.
bool verify_witness(const OrderWitness& w, const Partition& x, const Partition& y);

/// Decides the relation and synthesises every applicable witness. Throws
/// Error if a synthesised witness fails verification.
OrderResult compare(const Partition& x, const Partition& y);

/// A random rational distribution: integer weights in [1, 1000], each atom
/// zeroed with probability 1/4 (at least one atom stays positive).
Distribution random_distribution(const Domain& domain, std::uint64_t seed);

enum class Measure { Entropy, GuessProb, ExpectedGuesses, MinEntropyLeakage, GuessingLeakage };

std::string_view to_string(Measure m) noexcept;

struct AuditViolation {
    std::size_t sample = 0;
    Measure measure = Measure::Entropy;
    std::size_t n = 0;
    std::string detail;
};

/// Per-direction outcome of an audit. `x_ahead[m]` counts samples on which
/// x strictly beat y under measure m (higher leakage, or fewer guesses).
struct AuditReport {
    std::size_t samples = 0;
    bool x_leq_y = false;
    bool y_leq_x = false;
    std::size_t x_ahead = 0; ///< samples where x strictly beat y on some measure
    std::size_t y_ahead = 0;
    std::vector<AuditViolation> violations;

    bool consistent() const noexcept { return violations.empty(); }
};

/// Samples `trials` seeded random distributions, plus the witness
/// distributions from compare(x, y), and checks that "no sample shows x
/// ahead of y on any measure" holds exactly when leq(x, y), and likewise for
/// (y, x). Results depend only on (x, y, trials, seed).
AuditReport equivalence_audit(const Partition& x, const Partition& y, std::size_t trials,
                              std::uint64_t seed);

} // namespace loiqif
