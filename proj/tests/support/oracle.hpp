#pragma once

// Brute-force reference implementations over plain std containers. They
// share nothing with the library beyond Rational, so agreement between the
// two is evidence rather than tautology.

#include <loiqif/distribution.hpp>
#include <loiqif/partition.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using loiqif::AtomIndex;
using loiqif::Rational;
using Sets = std::set<std::set<AtomIndex>>;

/// Every partition of {0..n-1}, built by inserting atoms one at a time.
std::vector<Sets> all_partitions(std::size_t n);

Sets random_partition(std::mt19937_64& rng, std::size_t n);

Sets to_sets(const loiqif::Partition& p);
loiqif::Partition to_partition(const loiqif::Domain& d, const Sets& s);

bool leq(const Sets& x, const Sets& y);
Sets join(const Sets& x, const Sets& y);
Sets meet(const Sets& x, const Sets& y);

std::vector<Rational> random_masses(std::mt19937_64& rng, std::size_t n, bool allow_zero);
std::vector<Rational> masses_of(const loiqif::Distribution& mu);

double entropy(const Sets& x, const std::vector<Rational>& mu);
Rational guess_prob(const Sets& x, const std::vector<Rational>& mu, std::size_t n);
Rational expected_guesses(const Sets& x, const std::vector<Rational>& mu);
/// Rank-weighted block masses, blocks sorted by mass.
Rational ge_prime(const Sets& x, const std::vector<Rational>& mu);

} // namespace oracle
