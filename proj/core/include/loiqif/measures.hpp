#pragma once

#include "loiqif/distribution.hpp"
#include "loiqif/partition.hpp"
#include "loiqif/rational.hpp"

#include <cstddef>
#include <map>

// Quantitative valuations of partitions. Probabilities and guessing measures
// are exact rationals; anything that takes a logarithm is a double in bits.
// Every binary operation throws DomainMismatch when its operands disagree.

namespace loiqif {

/// Masses of the blocks of `x`, in canonical block order.
std::vector<Rational> block_masses(const Partition& x, const Distribution& mu);

/// Shannon entropy of the block distribution, 0 log 0 = 0.
double entropy(const Partition& x, const Distribution& mu);

double joint_entropy(const Partition& x, const Partition& y, const Distribution& mu);

/// H(X|Y) = H(X join Y) - H(Y).
double conditional_entropy(const Partition& x, const Partition& y, const Distribution& mu);

/// I(X;Y) = H(X) - H(X|Y).
double mutual_information(const Partition& x, const Partition& y, const Distribution& mu);

/// I(X;Y|Z) = H(X|Z) - H(X|Y join Z).
double conditional_mutual_information(const Partition& x, const Partition& y,
                                      const Partition& z, const Distribution& mu);

/// Probability of hitting the secret within n guesses after learning the
/// x-block: each block contributes its n heaviest atoms. Throws
/// InvalidArgument when n == 0.
Rational guess_prob(const Partition& x, const Distribution& mu, std::size_t n);

/// Expected number of guesses when each block is searched heaviest atom
/// first (ties in domain order).
Rational expected_guesses(const Partition& x, const Distribution& mu);

/// G1(x) / G1(bottom): the factor by which observing x multiplies the
/// one-try guessing probability.
Rational vulnerability_gain(const Partition& x, const Distribution& mu);

/// log2 of vulnerability_gain. Exactly 0 when the gain is 1.
double me_leakage(const Partition& x, const Distribution& mu);

/// NG(bottom) - NG(x).
Rational ge_leakage(const Partition& x, const Distribution& mu);

/// Min-entropy of the block distribution: -log2 of the heaviest block.
double me_prime(const Partition& x, const Distribution& mu);

/// Guessing entropy of the block distribution: blocks ranked by mass.
Rational ge_prime(const Partition& x, const Distribution& mu);

/// Conditional vulnerability sum over y-blocks of the heaviest
/// x-block-within-y mass, i.e. sum_y mu(y) max_x mu(x | y).
Rational conditional_vulnerability(const Partition& x, const Partition& y,
                                   const Distribution& mu);

/// Conditional guessing entropy sum_y mu(y) sum_i i mu(x_i | y), x-blocks
/// ranked inside every y-block by their intersected mass.
Rational conditional_guessing_entropy(const Partition& x, const Partition& y,
                                      const Distribution& mu);

/// d(X,Y) = H(X|Y) + H(Y|X).
double shannon_distance(const Partition& x, const Partition& y, const Distribution& mu);

/// log2 of the block count.
double channel_capacity(const Partition& x);

struct MeasureReport {
    double entropy_bits = 0.0;
    std::map<std::size_t, Rational> guess_prob;
    Rational expected_guesses;
    double me_leakage_bits = 0.0;
    Rational ge_leakage;
    double me_prime_bits = 0.0;
    Rational ge_prime;
    double channel_capacity_bits = 0.0;
};

/// All measures at once; guess_prob covers n = 1..max_guesses.
MeasureReport measure_all(const Partition& x, const Distribution& mu, std::size_t max_guesses = 4);

} // namespace loiqif
