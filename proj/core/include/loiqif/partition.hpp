#pragma once

#include "loiqif/domain.hpp"
#include "loiqif/error.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace loiqif {

using Block = std::vector<AtomIndex>;

/// A point of the lattice of information over a fixed domain.
///
/// Always held in canonical form: atoms inside a block ascend in domain
/// order and blocks are ordered by their least atom. Structural equality
/// is therefore partition equality.
class Partition {
public:
    /// Builds a partition from any set of blocks. Blocks may be given in
    /// any order; the result is canonical. Throws InvalidPartition naming
    /// the offending atom if blocks overlap, leave an atom uncovered,
    /// are empty, or reference atoms outside the domain.
    static Partition from_blocks(Domain domain, const std::vector<Block>& blocks);

    /// Blocks given by atom names, as in the JSON form.
    static Partition from_named_blocks(Domain domain,
                                       const std::vector<std::vector<std::string>>& blocks);

    /// Groups atoms sharing a label. labels.size() must equal domain.size().
    static Partition from_labels(Domain domain, std::span<const std::uint64_t> labels);

    /// All singletons.
    static Partition top(Domain domain);
    /// One block holding every atom.
    static Partition bottom(Domain domain);

    const Domain& domain() const noexcept { return domain_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    std::span<const Block> blocks() const noexcept { return blocks_; }
    const Block& block(std::size_t i) const { return blocks_.at(i); }

    /// Canonical index of the block containing `atom`.
    std::uint32_t block_of(AtomIndex atom) const { return block_of_.at(atom); }

    /// Restricted-growth labelling: block_of for every atom in domain order.
    std::span<const std::uint32_t> labels() const noexcept { return block_of_; }

    bool is_top() const noexcept { return blocks_.size() == domain_.size(); }
    bool is_bottom() const noexcept { return blocks_.size() == 1; }

    friend bool operator==(const Partition& a, const Partition& b) noexcept;

private:
    Partition(Domain domain, std::vector<std::uint32_t> canonical_labels);

    Domain domain_;
    std::vector<std::uint32_t> block_of_;
    std::vector<Block> blocks_;
};

/// True iff every block of `y` is contained in a block of `x` (x is below y).
bool leq(const Partition& x, const Partition& y);

/// Least upper bound: all non-empty intersections of an x-block and a y-block.
Partition join(const Partition& x, const Partition& y);

/// Greatest lower bound: connected components of "shares a block in x or in y".
Partition meet(const Partition& x, const Partition& y);

inline std::size_t block_count(const Partition& x) noexcept { return x.block_count(); }

/// Kernel of a total map over atom indices: atoms share a block iff the
/// map sends them to equal values. Value must be totally ordered.
template <typename F>
Partition kernel(const Domain& domain, F&& f)
{
    using Value = std::decay_t<decltype(f(AtomIndex{}))>;
    std::map<Value, std::uint64_t> ids;
    std::vector<std::uint64_t> labels(domain.size());
    for (AtomIndex i = 0; i < domain.size(); ++i) {
        auto [it, inserted] = ids.try_emplace(f(i), ids.size());
        labels[i] = it->second;
    }
    return Partition::from_labels(domain, labels);
}

/// Kernel of a map given by atom name. Throws MissingMapping naming the
/// first atom (in domain order) that has no entry.
template <typename Value>
Partition kernel(const Domain& domain, const std::map<std::string, Value>& f)
{
    for (const auto& name : domain.atoms()) {
        if (!f.contains(name)) {
            throw MissingMapping("kernel: no observable value for atom '" + name + "'");
        }
    }
    return kernel(domain, [&](AtomIndex i) -> const Value& { return f.at(domain.atom(i)); });
}

/// Human-readable "{{a},{b,c}}" rendering using atom names.
std::string to_string(const Partition& x);

} // namespace loiqif
