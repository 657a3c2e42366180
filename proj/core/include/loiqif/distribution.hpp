#pragma once

#include "loiqif/domain.hpp"
#include "loiqif/partition.hpp"
#include "loiqif/rational.hpp"

#include <span>
#include <vector>

namespace loiqif {

/// Exact probability mass over the atoms of a domain. Every atom carries a
/// non-negative rational in lowest terms and the masses sum to exactly one.
class Distribution {
public:
    /// Throws InvalidDistribution on a size mismatch, a negative mass, or a
    /// total different from one (the message states the exact deficit).
    Distribution(Domain domain, std::vector<Rational> mass);

    static Distribution uniform(Domain domain);

    /// Uniform over `support`, zero elsewhere. `support` must be non-empty
    /// and free of duplicates.
    static Distribution uniform_over(Domain domain, std::span<const AtomIndex> support);

    /// Normalises non-negative integer weights. At least one must be positive.
    static Distribution from_weights(Domain domain, std::span<const std::uint64_t> weights);

    const Domain& domain() const noexcept { return domain_; }
    const Rational& mass(AtomIndex atom) const { return mass_.at(atom); }
    std::span<const Rational> masses() const noexcept { return mass_; }

    /// Sum of member masses.
    Rational mass_of(std::span<const AtomIndex> atoms) const;
    const Rational& max_mass() const noexcept { return max_; }

    friend bool operator==(const Distribution& a, const Distribution& b)
    {
        return a.domain_ == b.domain_ && a.mass_ == b.mass_;
    }

private:
    Domain domain_;
    std::vector<Rational> mass_;
    Rational max_;
};

} // namespace loiqif
