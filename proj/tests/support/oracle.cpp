#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace oracle {

namespace {

Rational block_mass(const std::set<AtomIndex>& b, const std::vector<Rational>& mu)
{
    Rational m = 0;
    for (auto a : b) {
        m += mu[a];
    }
    return m;
}

std::vector<Rational> sorted_desc(const std::set<AtomIndex>& b, const std::vector<Rational>& mu)
{
    std::vector<Rational> v;
    for (auto a : b) {
        v.push_back(mu[a]);
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

} // namespace

std::vector<Sets> all_partitions(std::size_t n)
{
    std::vector<std::vector<std::set<AtomIndex>>> acc{{}};
    for (AtomIndex a = 0; a < n; ++a) {
        std::vector<std::vector<std::set<AtomIndex>>> next;
        for (const auto& p : acc) {
            for (std::size_t k = 0; k < p.size(); ++k) {
                auto q = p;
                q[k].insert(a);
                next.push_back(std::move(q));
            }
            auto q = p;
            q.push_back({a});
            next.push_back(std::move(q));
        }
        acc = std::move(next);
    }
    std::vector<Sets> out;
    for (const auto& p : acc) {
        out.emplace_back(p.begin(), p.end());
    }
    return out;
}

Sets random_partition(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<std::size_t> k(1, n);
    const auto blocks = k(rng);
    std::uniform_int_distribution<std::size_t> pick(0, blocks - 1);
    std::map<std::size_t, std::set<AtomIndex>> by_label;
    for (AtomIndex a = 0; a < n; ++a) {
        by_label[pick(rng)].insert(a);
    }
    Sets out;
    for (auto& [_, b] : by_label) {
        out.insert(b);
    }
    return out;
}

Sets to_sets(const loiqif::Partition& p)
{
    Sets out;
    for (const auto& b : p.blocks()) {
        out.emplace(b.begin(), b.end());
    }
    return out;
}

loiqif::Partition to_partition(const loiqif::Domain& d, const Sets& s)
{
    std::vector<loiqif::Block> blocks;
    for (const auto& b : s) {
        blocks.emplace_back(b.begin(), b.end());
    }
    return loiqif::Partition::from_blocks(d, blocks);
}

bool leq(const Sets& x, const Sets& y)
{
    return std::all_of(y.begin(), y.end(), [&](const auto& yb) {
        return std::any_of(x.begin(), x.end(), [&](const auto& xb) {
            return std::includes(xb.begin(), xb.end(), yb.begin(), yb.end());
        });
    });
}

Sets join(const Sets& x, const Sets& y)
{
    Sets out;
    for (const auto& xb : x) {
        for (const auto& yb : y) {
            std::set<AtomIndex> i;
            std::set_intersection(xb.begin(), xb.end(), yb.begin(), yb.end(),
                                  std::inserter(i, i.end()));
            if (!i.empty()) {
                out.insert(i);
            }
        }
    }
    return out;
}

Sets meet(const Sets& x, const Sets& y)
{
    std::vector<std::set<AtomIndex>> blocks(x.begin(), x.end());
    blocks.insert(blocks.end(), y.begin(), y.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < blocks.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < blocks.size() && !changed; ++j) {
                std::vector<AtomIndex> common;
                std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(),
                                      blocks[j].end(), std::back_inserter(common));
                if (!common.empty()) {
                    blocks[i].insert(blocks[j].begin(), blocks[j].end());
                    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                }
            }
        }
    }
    return Sets(blocks.begin(), blocks.end());
}

std::vector<Rational> random_masses(std::mt19937_64& rng, std::size_t n, bool allow_zero)
{
    std::uniform_int_distribution<unsigned long> w(1, 97);
    std::bernoulli_distribution zero(0.3);
    std::vector<unsigned long> weights(n);
    unsigned long total = 0;
    for (auto& x : weights) {
        x = allow_zero && zero(rng) ? 0 : w(rng);
        total += x;
    }
    if (total == 0) {
        weights[0] = 1;
        total = 1;
    }
    std::vector<Rational> out;
    for (auto x : weights) {
        Rational r(x, total);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

std::vector<Rational> masses_of(const loiqif::Distribution& mu)
{
    return {mu.masses().begin(), mu.masses().end()};
}

double entropy(const Sets& x, const std::vector<Rational>& mu)
{
    double h = 0;
    for (const auto& b : x) {
        const double p = block_mass(b, mu).get_d();
        if (p > 0) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

Rational guess_prob(const Sets& x, const std::vector<Rational>& mu, std::size_t n)
{
    Rational g = 0;
    for (const auto& b : x) {
        const auto v = sorted_desc(b, mu);
        for (std::size_t i = 0; i < std::min(n, v.size()); ++i) {
            g += v[i];
        }
    }
    return g;
}

Rational expected_guesses(const Sets& x, const std::vector<Rational>& mu)
{
    Rational ng = 0;
    for (const auto& b : x) {
        const auto v = sorted_desc(b, mu);
        for (std::size_t i = 0; i < v.size(); ++i) {
            ng += v[i] * static_cast<unsigned long>(i + 1);
        }
    }
    return ng;
}

Rational ge_prime(const Sets& x, const std::vector<Rational>& mu)
{
    std::vector<Rational> masses;
    for (const auto& b : x) {
        masses.push_back(block_mass(b, mu));
    }
    std::sort(masses.begin(), masses.end(), std::greater<>());
    Rational out = 0;
    for (std::size_t i = 0; i < masses.size(); ++i) {
        out += masses[i] * static_cast<unsigned long>(i + 1);
    }
    return out;
}

} // namespace oracle
