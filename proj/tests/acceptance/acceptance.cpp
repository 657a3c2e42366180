// One line per acceptance criterion; exit status is non-zero if any fails.

#include "oracle.hpp"
#include "programs.hpp"

#include <loiqif/analysis.hpp>
#include <loiqif/lang/parser.hpp>
#include <loiqif/measures.hpp>
#include <loiqif/ordering.hpp>
#include <loiqif/report.hpp>

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace lang = loiqif::lang;
using loiqif::AtomIndex;
using loiqif::Distribution;
using loiqif::Domain;
using loiqif::Partition;
using loiqif::Rational;

namespace {

class Checker {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok && failures_.size() < 5) {
            failures_.push_back(what);
        }
        failed_ += !ok;
    }

    bool ok() const { return failed_ == 0; }

    std::string summary() const
    {
        std::string s = std::to_string(checks_) + " checks";
        if (failed_) {
            s += ", " + std::to_string(failed_) + " failed";
            for (const auto& f : failures_) {
                s += "\n      " + f;
            }
        }
        return s;
    }

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
};

Rational q(long p, long r) { return loiqif::make_rational(p, r); }

std::string read_sample(const std::string& name)
{
    std::ifstream in(std::string(LOIQIF_SAMPLES_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

lang::AttackerConfig high_only(unsigned bits)
{
    lang::AttackerConfig cfg;
    cfg.high = {{"h", bits, std::nullopt}};
    cfg.observe = std::vector<std::string>{"o"};
    return cfg;
}

Distribution from_masses(const Domain& d, const std::vector<Rational>& m) { return Distribution(d, m); }

// Uniform over the first y-block that x splits, built from plain sets.
std::optional<std::pair<std::vector<Rational>, std::size_t>> oracle_witness(const oracle::Sets& x,
                                                                           const oracle::Sets& y,
                                                                           std::size_t n)
{
    for (const auto& b : y) {
        std::set<const std::set<AtomIndex>*> hit;
        for (auto a : b) {
            for (const auto& xb : x) {
                if (xb.contains(a)) {
                    hit.insert(&xb);
                }
            }
        }
        if (hit.size() >= 2) {
            std::vector<Rational> m(n, 0);
            for (auto a : b) {
                m[a] = q(1, static_cast<long>(b.size()));
            }
            return std::make_pair(m, b.size() - 1);
        }
    }
    return std::nullopt;
}

// x is "ahead" of y under mu when it leaks strictly more on some measure.
bool ahead(const Partition& x, const Partition& y, const Distribution& mu, std::size_t max_n)
{
    if (entropy(x, mu) > entropy(y, mu) + 1e-9 || me_leakage(x, mu) > me_leakage(y, mu) + 1e-9) {
        return true;
    }
    if (expected_guesses(x, mu) < expected_guesses(y, mu) || ge_leakage(x, mu) > ge_leakage(y, mu)) {
        return true;
    }
    for (std::size_t n = 1; n <= max_n; ++n) {
        if (guess_prob(x, mu, n) > guess_prob(y, mu, n)) {
            return true;
        }
    }
    return false;
}

void criterion_table(Checker& c)
{
    const auto cfg = high_only(2);
    const auto mu = Distribution::uniform(lang::input_domain(cfg));
    struct Row {
        const char* file;
        double h, me, me_prime;
        Rational g, ng, ge, ge_prime;
    };
    const Row rows[] = {{"m1.while", 0.8112, 1, 0.415, q(1, 2), q(7, 4), q(3, 4), q(5, 4)},
                        {"m2.while", 2, 2, 2, q(1, 1), q(1, 1), q(3, 2), q(5, 2)}};
    for (const auto& r : rows) {
        const auto report =
            loiqif::analyze(r.file, lang::parse(read_sample(r.file)), cfg, mu, "uniform");
        const auto& m = report.measures;
        const std::string f = r.file;
        c.expect(std::abs(m.entropy_bits - r.h) < 1e-3, f + " H");
        c.expect(std::abs(m.me_leakage_bits - r.me) < 1e-3, f + " ME");
        c.expect(std::abs(m.me_prime_bits - r.me_prime) < 1e-3, f + " ME'");
        c.expect(m.guess_prob.at(1) == r.g, f + " G");
        c.expect(m.expected_guesses == r.ng, f + " NG");
        c.expect(m.ge_leakage == r.ge, f + " GE");
        c.expect(m.ge_prime == r.ge_prime, f + " GE'");
    }
}

void criterion_golden(Checker& c)
{
    const auto d6 = Domain::range(6);
    const auto x = Partition::from_blocks(d6, {{0, 1, 2, 3}, {4, 5}});
    const auto mu6 = from_masses(d6, {q(1, 16), q(1, 16), q(1, 16), q(1, 16), q(3, 8), q(3, 8)});
    c.expect(guess_prob(x, mu6, 2) == q(7, 8), "G_2 = 7/8");

    const Domain abcd({"a", "b", "c", "d"});
    const auto mu4 = from_masses(abcd, {q(1, 2), q(1, 4), q(1, 8), q(1, 8)});
    c.expect(expected_guesses(Partition::bottom(abcd), mu4) == q(15, 8), "NG = 15/8");
    c.expect(expected_guesses(Partition::from_named_blocks(abcd, {{"a", "d"}, {"b", "c"}}), mu4) ==
                 q(10, 8),
             "NG = 10/8");

    const Domain d4({"1", "2", "3", "4"});
    const auto a = Partition::from_named_blocks(d4, {{"1", "2"}, {"3", "4"}});
    const auto b = Partition::from_named_blocks(d4, {{"1", "3"}, {"2", "4"}});
    c.expect(join(a, b).is_top(), "A join B is top");
    c.expect(meet(a, b).is_bottom(), "A meet B is bottom");
    c.expect(join(a, b).block_count() == 4, "|A join B| = 4");
    c.expect(a.block_count() + b.block_count() - meet(a, b).block_count() == 3,
             "|A| + |B| - |A meet B| = 3");

    auto cfg = high_only(3);
    cfg.low = {{"l", 3, std::nullopt}};
    const auto password = lang::parse(read_sample("password.while"));
    std::vector<Partition> runs;
    for (std::uint64_t l : {5u, 7u}) {
        runs.push_back(lang::loi(password, loiqif::with_low_values(cfg, {{"l", l}})).partition);
    }
    const auto d8 = Domain::range(8);
    c.expect(loiqif::multi_run(runs) == Partition::from_blocks(d8, {{5}, {7}, {0, 1, 2, 3, 4, 6}}),
             "password join");

    lang::AttackerConfig lc;
    lc.high = {{"h", 2, std::nullopt}};
    lc.low = {{"l", 2, 0}};
    const auto loop = loiqif::loop_analyze(lang::parse(read_sample("loop.while")), lc);
    const auto d = Domain::range(4);
    const auto expected = Partition::from_blocks(d, {{0}, {1}, {2, 3}});
    c.expect(loop.iterations.size() >= 4, "loop iterations");
    if (loop.iterations.size() >= 4) {
        c.expect(loop.iterations[0] == Partition::from_blocks(d, {{0}, {1, 2, 3}}), "W_0");
        c.expect(loop.iterations[1] == Partition::from_blocks(d, {{0, 3}, {1}, {2}}), "W_1");
        c.expect(loop.iterations[2].is_bottom(), "W_2");
        c.expect(loop.iterations[3] == Partition::from_blocks(d, {{0, 1, 2}, {3}}), "W_3");
    }
    c.expect(loop.w_chain.back().is_top(), "chain reaches top");
    c.expect(loop.collision == expected, "C");
    c.expect(loop.result == expected, "loop result");
    c.expect(loop.direct == expected && loop.matches_loi(), "direct loi cross-check");
}

void equivalence_on(Checker& c, std::size_t size, std::size_t distributions, std::uint64_t seed)
{
    const auto d = Domain::range(size);
    const auto all = oracle::all_partitions(size);
    std::vector<Partition> parts;
    for (const auto& s : all) {
        parts.push_back(oracle::to_partition(d, s));
    }
    std::mt19937_64 rng(seed);
    std::vector<Distribution> mus;
    for (std::size_t k = 0; k < distributions; ++k) {
        mus.push_back(from_masses(d, oracle::random_masses(rng, size, k % 2 == 1)));
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
            const bool refined = oracle::leq(all[i], all[j]);
            bool x_ahead = false;
            for (const auto& mu : mus) {
                x_ahead = x_ahead || ahead(parts[i], parts[j], mu, 4);
            }
            if (auto w = oracle_witness(all[i], all[j], size)) {
                x_ahead = x_ahead || ahead(parts[i], parts[j], from_masses(d, w->first), 4);
            }
            c.expect(refined != x_ahead, "size " + std::to_string(size) + " pair " + to_string(parts[i]) +
                                             " vs " + to_string(parts[j]));
        }
    }
}

void criterion_equivalence(Checker& c)
{
    equivalence_on(c, 4, 100, 4);
    equivalence_on(c, 5, 100, 5);
}

void criterion_witnesses(Checker& c)
{
    for (std::size_t size = 1; size <= 5; ++size) {
        const auto d = Domain::range(size);
        const auto all = oracle::all_partitions(size);
        for (const auto& xs : all) {
            for (const auto& ys : all) {
                if (oracle::leq(xs, ys) || oracle::leq(ys, xs)) {
                    continue;
                }
                const auto x = oracle::to_partition(d, xs);
                const auto y = oracle::to_partition(d, ys);
                const auto r = loiqif::compare(x, y);
                c.expect(r.relation == loiqif::Relation::Incomparable && r.witness_xy && r.witness_yx,
                         "witnesses for " + to_string(x) + " vs " + to_string(y));
                if (!r.witness_xy || !r.witness_yx) {
                    continue;
                }
                for (const auto& [w, a, b] : {std::tuple{*r.witness_xy, &xs, &ys},
                                              std::tuple{*r.witness_yx, &ys, &xs}}) {
                    const auto pa = oracle::to_partition(d, *a);
                    const auto pb = oracle::to_partition(d, *b);
                    c.expect(loiqif::verify_witness(w, pa, pb), "verify " + to_string(pa));
                    const auto m = oracle::masses_of(w.distribution);
                    c.expect(oracle::guess_prob(*a, m, w.n) > oracle::guess_prob(*b, m, w.n) &&
                                 oracle::guess_prob(*a, m, 1) > oracle::guess_prob(*b, m, 1) &&
                                 oracle::entropy(*a, m) > oracle::entropy(*b, m) &&
                                 oracle::expected_guesses(*a, m) < oracle::expected_guesses(*b, m),
                             "oracle inequalities for " + to_string(pa));
                }
            }
        }
    }

    const auto cfg = high_only(8);
    const auto p1 = lang::loi(lang::parse(read_sample("smith_p1.while")), cfg).partition;
    const auto p2 = lang::loi(lang::parse(read_sample("smith_p2.while")), cfg).partition;
    const auto r = loiqif::compare(p1, p2);
    c.expect(r.relation == loiqif::Relation::Incomparable, "Smith pair incomparable");
    for (const bool xy : {true, false}) {
        const auto& w = xy ? r.witness_xy : r.witness_yx;
        c.expect(w.has_value(), "Smith witness present");
        if (!w) {
            continue;
        }
        const auto& finer = xy ? p1 : p2;
        const auto& coarser = xy ? p2 : p1;
        const auto& mu = w->distribution;
        const auto n = static_cast<long>(w->n);
        c.expect(guess_prob(coarser, mu, w->n) == q(n, n + 1), "Smith G_n = n/(n+1)");
        c.expect(guess_prob(finer, mu, w->n) == 1, "Smith G_n = 1");
        c.expect(loiqif::verify_witness(*w, finer, coarser), "Smith witness verifies");
    }
}

void criterion_identities(Checker& c)
{
    std::mt19937_64 rng(500);
    for (int k = 0; k < 500; ++k) {
        const std::size_t size = 1 + rng() % 7;
        const auto d = Domain::range(size);
        const auto x = oracle::to_partition(d, oracle::random_partition(rng, size));
        const auto mu = from_masses(d, oracle::random_masses(rng, size, k % 3 == 0));
        const auto top = Partition::top(d);
        const auto bottom = Partition::bottom(d);
        const auto gain = vulnerability_gain(x, mu);
        // 2^ME * G(h) = G(LoI)
        c.expect(gain * mu.max_mass() == guess_prob(x, mu, 1), "gain * G(h) = G(LoI)");
        c.expect(guess_prob(x, mu, 1) == conditional_vulnerability(top, x, mu), "G = V(h|X)");
        c.expect(gain == conditional_vulnerability(top, x, mu) / conditional_vulnerability(top, bottom, mu),
                 "gain = V(h|X) / V(h)");
        c.expect(std::abs(me_leakage(x, mu) - std::log2(gain.get_d())) < 1e-9, "ME = log2 gain");
        c.expect(ge_leakage(x, mu) == conditional_guessing_entropy(top, bottom, mu) -
                                          conditional_guessing_entropy(top, x, mu),
                 "GE = G(h) - G(h|X)");
        c.expect(ge_leakage(x, mu) == expected_guesses(bottom, mu) - expected_guesses(x, mu),
                 "GE = NG(bottom) - NG(X)");
    }
}

void criterion_semivaluation(Checker& c)
{
    std::mt19937_64 rng(6);
    for (std::size_t size = 1; size <= 4; ++size) {
        const auto d = Domain::range(size);
        const auto all = oracle::all_partitions(size);
        std::vector<Distribution> mus;
        for (int k = 0; k < 100; ++k) {
            mus.push_back(from_masses(d, oracle::random_masses(rng, size, k % 2 == 0)));
        }
        for (const auto& xs : all) {
            for (const auto& ys : all) {
                const auto x = oracle::to_partition(d, xs);
                const auto y = oracle::to_partition(d, ys);
                const auto j = join(x, y);
                const auto m = meet(x, y);
                c.expect(oracle::to_sets(j) == oracle::join(xs, ys), "join");
                c.expect(oracle::to_sets(m) == oracle::meet(xs, ys), "meet");
                const bool refined = oracle::leq(xs, ys);
                for (const auto& mu : mus) {
                    c.expect(entropy(j, mu) <= entropy(x, mu) + entropy(y, mu) - entropy(m, mu) + 1e-9,
                             "H(X join Y) <= H(X) + H(Y) - H(X meet Y)");
                    if (refined) {
                        c.expect(entropy(x, mu) <= entropy(y, mu) + 1e-9, "order preserved");
                    }
                }
            }
        }
    }
}

void criterion_self_composition(Checker& c)
{
    const auto pair_cfg = [] {
        auto k = high_only(2);
        k.observe = std::vector<std::string>{"x"};
        return k;
    }();
    auto law = [&](const lang::Program& p1, const lang::Program& p2, const lang::AttackerConfig& k) {
        const auto composed = loiqif::self_compose(p1, p2, k);
        return lang::loi(composed.program, composed.config).partition ==
               join(lang::loi(p1, k).partition, lang::loi(p2, k).partition);
    };
    const auto w1 = lang::parse(read_sample("p1.while"));
    const auto w2 = lang::parse(read_sample("p2.while"));
    c.expect(law(w1, w2, pair_cfg), "worked pair");
    const auto composed = loiqif::self_compose(w1, w2, pair_cfg);
    c.expect(lang::loi(composed.program, composed.config).partition ==
                 Partition::from_blocks(Domain::range(4), {{0}, {1}, {2, 3}}),
             "worked pair partition");

    std::mt19937_64 rng(7);
    for (int k = 0; k < 30; ++k) {
        auto kc = high_only(2 + k % 3);
        const auto src1 = gen::random_program(rng);
        const auto src2 = gen::random_program(rng);
        c.expect(law(lang::parse(src1), lang::parse(src2), kc), src1 + " | " + src2);
    }
}

void criterion_capacity(Checker& c)
{
    for (std::size_t size = 1; size <= 5; ++size) {
        const auto d = Domain::range(size);
        const auto all = oracle::all_partitions(size);
        for (const auto& xs : all) {
            const auto x = oracle::to_partition(d, xs);
            const auto cc = channel_capacity(x);
            const auto k = xs.size();
            if ((k & (k - 1)) == 0) {
                c.expect(cc == static_cast<double>(std::countr_zero(k)), "exact log2 " + to_string(x));
            }
            c.expect(std::abs(cc - std::log2(static_cast<double>(k))) < 1e-12, "log2 count");
            std::vector<AtomIndex> reps;
            for (const auto& b : xs) {
                reps.push_back(*b.begin());
            }
            const auto mu = Distribution::uniform_over(d, reps);
            c.expect(std::abs(entropy(x, mu) - cc) < 1e-9, "one atom per block achieves capacity");
            for (const auto& ys : all) {
                if (oracle::leq(xs, ys)) {
                    c.expect(cc <= channel_capacity(oracle::to_partition(d, ys)), "monotone");
                }
            }
        }
    }
    const Domain abcd({"a", "b", "c", "d"});
    const auto x = Partition::from_named_blocks(abcd, {{"a", "b", "c"}, {"d"}});
    const auto y = Partition::from_named_blocks(abcd, {{"a", "b"}, {"c", "d"}});
    c.expect(channel_capacity(x) == 1.0 && channel_capacity(y) == 1.0, "regression pair capacity 1");
    c.expect(!leq(x, y) && !leq(y, x), "regression pair incomparable");
    c.expect(loiqif::program_capacity(lang::parse(read_sample("smith_p2.while")), high_only(8)) == 5.0,
             "program capacity");
}

void criterion_passive(Checker& c)
{
    lang::AttackerConfig cfg;
    cfg.high = {{"h", 2, std::nullopt}};
    cfg.low = {{"l", 2, std::nullopt}};
    cfg.observe = std::vector<std::string>{"o"};
    cfg.mode = lang::AttackerMode::Passive;
    const auto report = loiqif::analyze("password.while", lang::parse(read_sample("password.while")),
                                        cfg, std::nullopt, "uniform");

    // Outcome classes (l, h == l) over the 16 uniform (l, h) pairs.
    std::map<std::pair<int, bool>, int> loi;
    std::map<int, int> low;
    for (int l = 0; l < 4; ++l) {
        for (int h = 0; h < 4; ++h) {
            ++loi[{l, h == l}];
            ++low[l];
        }
    }
    auto h_of = [](const auto& counts) {
        double s = 0;
        for (const auto& [_, n] : counts) {
            const double p = n / 16.0;
            s -= p * std::log2(p);
        }
        return s;
    };
    const double expected = h_of(loi) - h_of(low);
    c.expect(std::abs(report.leakage_bits - expected) < 1e-9,
             "leakage " + std::to_string(report.leakage_bits) + " vs " + std::to_string(expected));
    c.expect(std::abs(expected - 0.811278124) < 1e-9, "oracle value");
    c.expect(report.partition.block_count() == 8, "eight blocks");
    bool warned = false;
    for (const auto& w : report.warnings) {
        warned = warned || w.find("H(LoI|L)") != std::string::npos;
    }
    c.expect(warned, "passive warning present");
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Checker&)> run;
    };
    const Criterion criteria[] = {
        {1, "measure table for M1 and M2", criterion_table},
        {2, "worked-example golden values", criterion_golden},
        {3, "refinement iff every measure order holds", criterion_equivalence},
        {4, "constructive witness soundness", criterion_witnesses},
        {5, "vulnerability and guessing identities", criterion_identities},
        {6, "entropy semivaluation and order preservation", criterion_semivaluation},
        {7, "self-composition equals join", criterion_self_composition},
        {8, "channel capacity", criterion_capacity},
        {9, "passive attacker leakage", criterion_passive},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Checker c;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        std::printf("[%s] criterion %d: %s (%s, %.3f s)\n", c.ok() ? "PASS" : "FAIL", cr.id, cr.name,
                    c.summary().c_str(), took.count());
        failed += !c.ok();
    }
    return failed == 0 ? 0 : 1;
}
