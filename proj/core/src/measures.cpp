#include "loiqif/measures.hpp"

#include "loiqif/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace loiqif {

namespace {

// log2 of a positive integer without overflowing a double.
double log2_integer(const mpz_class& z)
{
    long exponent = 0;
    double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
    return std::log2(mantissa) + static_cast<double>(exponent);
}

double log2_rational(const Rational& q)
{
    return log2_integer(q.get_num()) - log2_integer(q.get_den());
}

double entropy_of(const std::vector<Rational>& masses)
{
    double h = 0.0;
    for (const auto& p : masses) {
        if (p > 0) {
            h -= p.get_d() * log2_rational(p);
        }
    }
    return h;
}

// Atoms of a block ordered heaviest first; stable so ties keep domain order.
Block ranked(const Block& block, const Distribution& mu)
{
    Block out = block;
    std::stable_sort(out.begin(), out.end(),
                     [&](AtomIndex a, AtomIndex b) { return mu.mass(a) > mu.mass(b); });
    return out;
}

// sum_i i * m_i over masses sorted heaviest first; ties are irrelevant.
Rational rank_weighted_sum(std::vector<Rational> masses)
{
    std::stable_sort(masses.begin(), masses.end(), std::greater<>());
    Rational sum = 0;
    for (std::size_t i = 0; i < masses.size(); ++i) {
        sum += masses[i] * static_cast<unsigned long>(i + 1);
    }
    return sum;
}

void check_domain(const Partition& x, const Distribution& mu, std::string_view what)
{
    require_same_domain(x.domain(), mu.domain(), what);
}

// Masses of the non-empty intersections of every x-block with every y-block,
// grouped by y-block.
std::vector<std::vector<Rational>> intersections_by_y(const Partition& x, const Partition& y,
                                                      const Distribution& mu)
{
    const auto j = join(x, y);
    std::vector<std::vector<Rational>> out(y.block_count());
    for (const auto& cell : j.blocks()) {
        out[y.block_of(cell.front())].push_back(mu.mass_of(cell));
    }
    return out;
}

} // namespace

std::vector<Rational> block_masses(const Partition& x, const Distribution& mu)
{
    check_domain(x, mu, "block_masses");
    std::vector<Rational> out;
    out.reserve(x.block_count());
    for (const auto& block : x.blocks()) {
        out.push_back(mu.mass_of(block));
    }
    return out;
}

double entropy(const Partition& x, const Distribution& mu)
{
    return entropy_of(block_masses(x, mu));
}

double joint_entropy(const Partition& x, const Partition& y, const Distribution& mu)
{
    return entropy(join(x, y), mu);
}

double conditional_entropy(const Partition& x, const Partition& y, const Distribution& mu)
{
    return joint_entropy(x, y, mu) - entropy(y, mu);
}

double mutual_information(const Partition& x, const Partition& y, const Distribution& mu)
{
    return entropy(x, mu) - conditional_entropy(x, y, mu);
}

double conditional_mutual_information(const Partition& x, const Partition& y,
                                      const Partition& z, const Distribution& mu)
{
    return conditional_entropy(x, z, mu) - conditional_entropy(x, join(y, z), mu);
}

Rational guess_prob(const Partition& x, const Distribution& mu, std::size_t n)
{
    check_domain(x, mu, "guess_prob");
    if (n == 0) {
        throw InvalidArgument("guess_prob: number of guesses must be at least 1");
    }
    Rational total = 0;
    for (const auto& block : x.blocks()) {
        const auto order = ranked(block, mu);
        const auto take = std::min(n, order.size());
        for (std::size_t i = 0; i < take; ++i) {
            total += mu.mass(order[i]);
        }
    }
    return total;
}

Rational expected_guesses(const Partition& x, const Distribution& mu)
{
    check_domain(x, mu, "expected_guesses");
    Rational total = 0;
    for (const auto& block : x.blocks()) {
        const auto order = ranked(block, mu);
        for (std::size_t i = 0; i < order.size(); ++i) {
            total += mu.mass(order[i]) * static_cast<unsigned long>(i + 1);
        }
    }
    return total;
}

Rational vulnerability_gain(const Partition& x, const Distribution& mu)
{
    // Distribution guarantees a positive maximum.
    return guess_prob(x, mu, 1) / mu.max_mass();
}

double me_leakage(const Partition& x, const Distribution& mu)
{
    const auto gain = vulnerability_gain(x, mu);
    if (gain == 1) {
        return 0.0;
    }
    return log2_rational(gain);
}

Rational ge_leakage(const Partition& x, const Distribution& mu)
{
    return expected_guesses(Partition::bottom(x.domain()), mu) - expected_guesses(x, mu);
}

double me_prime(const Partition& x, const Distribution& mu)
{
    const auto masses = block_masses(x, mu);
    const auto& heaviest = *std::max_element(masses.begin(), masses.end());
    if (heaviest == 1) {
        return 0.0;
    }
    return -log2_rational(heaviest);
}

Rational ge_prime(const Partition& x, const Distribution& mu)
{
    return rank_weighted_sum(block_masses(x, mu));
}

Rational conditional_vulnerability(const Partition& x, const Partition& y,
                                   const Distribution& mu)
{
    check_domain(x, mu, "conditional_vulnerability");
    Rational total = 0;
    for (const auto& cells : intersections_by_y(x, y, mu)) {
        total += *std::max_element(cells.begin(), cells.end());
    }
    return total;
}

Rational conditional_guessing_entropy(const Partition& x, const Partition& y,
                                      const Distribution& mu)
{
    check_domain(x, mu, "conditional_guessing_entropy");
    Rational total = 0;
    for (auto& cells : intersections_by_y(x, y, mu)) {
        total += rank_weighted_sum(std::move(cells));
    }
    return total;
}

double shannon_distance(const Partition& x, const Partition& y, const Distribution& mu)
{
    // Both conditionals share H(X join Y); clamp the rounding residue at 0.
    const double hxy = joint_entropy(x, y, mu);
    const double d = (hxy - entropy(y, mu)) + (hxy - entropy(x, mu));
    return d < 0.0 ? 0.0 : d;
}

double channel_capacity(const Partition& x)
{
    return std::log2(static_cast<double>(x.block_count()));
}

MeasureReport measure_all(const Partition& x, const Distribution& mu, std::size_t max_guesses)
{
    MeasureReport r;
    r.entropy_bits = entropy(x, mu);
    for (std::size_t n = 1; n <= max_guesses; ++n) {
        r.guess_prob.emplace(n, guess_prob(x, mu, n));
    }
    r.expected_guesses = expected_guesses(x, mu);
    r.me_leakage_bits = me_leakage(x, mu);
    r.ge_leakage = ge_leakage(x, mu);
    r.me_prime_bits = me_prime(x, mu);
    r.ge_prime = ge_prime(x, mu);
    r.channel_capacity_bits = channel_capacity(x);
    return r;
}

} // namespace loiqif
