#include "loiqif/ordering.hpp"

#include "loiqif/error.hpp"
#include "loiqif/measures.hpp"

#include <algorithm>
#include <random>

namespace loiqif {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Which side is strictly better for the attacker on one measure, if either.
enum class Lead { None, X, Y };

Lead lead_higher(const Rational& x, const Rational& y)
{
    if (x > y) {
        return Lead::X;
    }
    if (y > x) {
        return Lead::Y;
    }
    return Lead::None;
}

Lead lead_higher(double x, double y)
{
    constexpr double kTolerance = 1e-9;
    if (x > y + kTolerance) {
        return Lead::X;
    }
    if (y > x + kTolerance) {
        return Lead::Y;
    }
    return Lead::None;
}

struct Sample {
    Distribution mu;
    std::vector<std::size_t> guesses;
};

} // namespace

std::string_view to_string(Relation r) noexcept
{
    switch (r) {
    case Relation::Equal:
        return "Equal";
    case Relation::CoarserThan:
        return "CoarserThan";
    case Relation::FinerThan:
        return "FinerThan";
    case Relation::Incomparable:
        return "Incomparable";
    }
    return "?";
}

std::string_view to_string(Measure m) noexcept
{
    switch (m) {
    case Measure::Entropy:
        return "H";
    case Measure::GuessProb:
        return "G";
    case Measure::ExpectedGuesses:
        return "NG";
    case Measure::MinEntropyLeakage:
        return "ME";
    case Measure::GuessingLeakage:
        return "GE";
    }
    return "?";
}

std::optional<Block> find_split_block(const Partition& x, const Partition& y)
{
    require_same_domain(x.domain(), y.domain(), "find_split_block");
    for (const auto& block : y.blocks()) {
        const auto first = x.block_of(block.front());
        for (AtomIndex a : block) {
            if (x.block_of(a) != first) {
                return block;
            }
        }
    }
    return std::nullopt;
}

std::optional<OrderWitness> make_witness(const Partition& x, const Partition& y)
{
    auto block = find_split_block(x, y);
    if (!block) {
        return std::nullopt;
    }
    auto mu = Distribution::uniform_over(x.domain(), *block);
    const std::size_t n = block->size() - 1;
    return OrderWitness{std::move(mu), n, std::move(*block)};
}

bool verify_witness(const OrderWitness& w, const Partition& x, const Partition& y)
{
    try {
        const auto& mu = w.distribution;
        if (!(x.domain() == y.domain()) || !(x.domain() == mu.domain()) || w.n == 0) {
            return false;
        }
        return guess_prob(x, mu, w.n) > guess_prob(y, mu, w.n) &&
               guess_prob(x, mu, 1) > guess_prob(y, mu, 1) && entropy(x, mu) > entropy(y, mu) &&
               expected_guesses(x, mu) < expected_guesses(y, mu);
    } catch (const std::exception&) {
        return false;
    }
}

OrderResult compare(const Partition& x, const Partition& y)
{
    require_same_domain(x.domain(), y.domain(), "compare");
    OrderResult result;
    result.witness_xy = make_witness(x, y);
    result.witness_yx = make_witness(y, x);
    const bool xy = !result.witness_xy;
    const bool yx = !result.witness_yx;
    if (xy && yx) {
        result.relation = Relation::Equal;
    } else if (xy) {
        result.relation = Relation::CoarserThan;
    } else if (yx) {
        result.relation = Relation::FinerThan;
    } else {
        result.relation = Relation::Incomparable;
    }
    if (result.witness_xy && !verify_witness(*result.witness_xy, x, y)) {
        throw InternalError("compare: synthesised witness against x <= y failed verification");
    }
    if (result.witness_yx && !verify_witness(*result.witness_yx, y, x)) {
        throw InternalError("compare: synthesised witness against y <= x failed verification");
    }
    return result;
}

Distribution random_distribution(const Domain& domain, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> weight(1, 1000);
    std::bernoulli_distribution zero(0.25);
    std::vector<std::uint64_t> weights(domain.size());
    bool any_positive = false;
    for (auto& w : weights) {
        w = zero(rng) ? 0 : weight(rng);
        any_positive = any_positive || w > 0;
    }
    if (!any_positive) {
        std::uniform_int_distribution<std::size_t> pick(0, weights.size() - 1);
        weights[pick(rng)] = weight(rng);
    }
    return Distribution::from_weights(domain, weights);
}

AuditReport equivalence_audit(const Partition& x, const Partition& y, std::size_t trials,
                              std::uint64_t seed)
{
    require_same_domain(x.domain(), y.domain(), "equivalence_audit");
    if (trials == 0) {
        throw InvalidArgument("equivalence_audit: trials must be at least 1");
    }
    const auto& domain = x.domain();
    const std::size_t size = domain.size();

    std::vector<Sample> samples;
    samples.reserve(trials + 2);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto trial_seed = splitmix64(seed ^ splitmix64(t));
        Sample s{random_distribution(domain, trial_seed), {}};
        if (size <= 16) {
            for (std::size_t n = 1; n <= size; ++n) {
                s.guesses.push_back(n);
            }
        } else {
            std::mt19937_64 rng(splitmix64(trial_seed));
            std::uniform_int_distribution<std::size_t> pick(1, size);
            s.guesses = {1, pick(rng)};
        }
        samples.push_back(std::move(s));
    }
    const auto order = compare(x, y);
    for (const auto* w : {&order.witness_xy, &order.witness_yx}) {
        if (*w) {
            samples.push_back(Sample{(*w)->distribution, {1, (*w)->n}});
        }
    }

    AuditReport report;
    report.samples = samples.size();
    report.x_leq_y = !order.witness_xy;
    report.y_leq_x = !order.witness_yx;

    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& [mu, guesses] = samples[i];
        struct Outcome {
            Measure measure;
            std::size_t n;
            Lead lead;
        };
        std::vector<Outcome> outcomes;
        outcomes.push_back({Measure::Entropy, 0, lead_higher(entropy(x, mu), entropy(y, mu))});
        for (auto n : guesses) {
            outcomes.push_back(
                {Measure::GuessProb, n, lead_higher(guess_prob(x, mu, n), guess_prob(y, mu, n))});
        }
        // Fewer expected guesses is the attacker's advantage.
        outcomes.push_back({Measure::ExpectedGuesses, 0,
                            lead_higher(expected_guesses(y, mu), expected_guesses(x, mu))});
        outcomes.push_back({Measure::MinEntropyLeakage, 0,
                            lead_higher(vulnerability_gain(x, mu), vulnerability_gain(y, mu))});
        outcomes.push_back({Measure::GuessingLeakage, 0,
                            lead_higher(ge_leakage(x, mu), ge_leakage(y, mu))});

        bool x_ahead = false;
        bool y_ahead = false;
        for (const auto& o : outcomes) {
            if (o.lead == Lead::X) {
                x_ahead = true;
                if (report.x_leq_y) {
                    report.violations.push_back(
                        {i, o.measure, o.n, "x ahead of y although x <= y"});
                }
            } else if (o.lead == Lead::Y) {
                y_ahead = true;
                if (report.y_leq_x) {
                    report.violations.push_back(
                        {i, o.measure, o.n, "y ahead of x although y <= x"});
                }
            }
        }
        report.x_ahead += x_ahead ? 1 : 0;
        report.y_ahead += y_ahead ? 1 : 0;
    }
    if (!report.x_leq_y && report.x_ahead == 0) {
        report.violations.push_back({samples.size(), Measure::GuessProb, 0,
                                     "x is not below y but no sample shows x ahead"});
    }
    if (!report.y_leq_x && report.y_ahead == 0) {
        report.violations.push_back({samples.size(), Measure::GuessProb, 0,
                                     "y is not below x but no sample shows y ahead"});
    }
    return report;
}

} // namespace loiqif
