#include "loiqif/distribution.hpp"

#include "loiqif/error.hpp"

#include <algorithm>

namespace loiqif {

Distribution::Distribution(Domain domain, std::vector<Rational> mass)
    : domain_(std::move(domain))
    , mass_(std::move(mass))
{
    if (mass_.size() != domain_.size()) {
        throw InvalidDistribution("distribution has " + std::to_string(mass_.size()) +
                                  " masses for a domain of " + std::to_string(domain_.size()) +
                                  " atoms");
    }
    Rational total = 0;
    for (AtomIndex a = 0; a < mass_.size(); ++a) {
        mass_[a].canonicalize();
        if (mass_[a] < 0) {
            throw InvalidDistribution("negative mass " + to_string(mass_[a]) + " on atom '" +
                                      domain_.atom(a) + "'");
        }
        total += mass_[a];
        if (mass_[a] > max_) {
            max_ = mass_[a];
        }
    }
    if (total != 1) {
        Rational deficit = 1 - total;
        throw InvalidDistribution("masses sum to " + to_string(total) + ", deficit " +
                                  to_string(deficit));
    }
}

Distribution Distribution::uniform(Domain domain)
{
    const auto n = domain.size();
    std::vector<Rational> mass(n, make_rational(1, static_cast<unsigned long>(n)));
    return Distribution(std::move(domain), std::move(mass));
}

Distribution Distribution::uniform_over(Domain domain, std::span<const AtomIndex> support)
{
    if (support.empty()) {
        throw InvalidDistribution("uniform distribution over an empty support");
    }
    std::vector<Rational> mass(domain.size(), Rational(0));
    const Rational share = make_rational(1, static_cast<unsigned long>(support.size()));
    for (AtomIndex a : support) {
        if (a >= domain.size()) {
            throw InvalidDistribution("support atom index out of range");
        }
        if (mass[a] != 0) {
            throw InvalidDistribution("duplicate atom '" + domain.atom(a) + "' in support");
        }
        mass[a] = share;
    }
    return Distribution(std::move(domain), std::move(mass));
}

Distribution Distribution::from_weights(Domain domain, std::span<const std::uint64_t> weights)
{
    if (weights.size() != domain.size()) {
        throw InvalidDistribution("weight count does not match domain size");
    }
    mpz_class total = 0;
    for (auto w : weights) {
        total += mpz_class(static_cast<unsigned long>(w));
    }
    if (total == 0) {
        throw InvalidDistribution("all weights are zero");
    }
    std::vector<Rational> mass;
    mass.reserve(weights.size());
    for (auto w : weights) {
        mass.push_back(make_rational(static_cast<unsigned long>(w), total));
    }
    return Distribution(std::move(domain), std::move(mass));
}

Rational Distribution::mass_of(std::span<const AtomIndex> atoms) const
{
    Rational sum = 0;
    for (AtomIndex a : atoms) {
        sum += mass_.at(a);
    }
    return sum;
}

} // namespace loiqif
