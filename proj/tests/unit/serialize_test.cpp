#include "oracle.hpp"

#include <loiqif/lang/parser.hpp>
#include <loiqif/serialize.hpp>

#include <gtest/gtest.h>

#include <random>

using loiqif::Distribution;
using loiqif::Domain;
using loiqif::Json;
using loiqif::Partition;

TEST(Serialize, PartitionRoundTrip)
{
    const Domain d({"a", "b", "c", "d"});
    const auto x = Partition::from_named_blocks(d, {{"d", "a"}, {"b"}, {"c"}});
    const auto j = loiqif::to_json(x);
    EXPECT_EQ(j.dump(), R"({"domain":["a","b","c","d"],"blocks":[["a","d"],["b"],["c"]]})");
    EXPECT_EQ(loiqif::partition_from_json(j), x);
    EXPECT_EQ(loiqif::partition_from_json(Json::parse(j.dump())), x);
}

TEST(Serialize, PartitionErrors)
{
    auto parse = [](const char* text) { return loiqif::partition_from_json(Json::parse(text)); };
    EXPECT_THROW(parse(R"({"domain":["a","b"],"blocks":[["a"]]})"), loiqif::InvalidPartition);
    EXPECT_THROW(parse(R"({"domain":["a","b"],"blocks":[["a","b"],["b"]]})"),
                 loiqif::InvalidPartition);
    EXPECT_THROW(parse(R"({"domain":["a","b"],"blocks":[["a","z"],["b"]]})"),
                 loiqif::InvalidPartition);
    EXPECT_THROW(parse(R"({"domain":["a","a"],"blocks":[["a"]]})"), loiqif::InvalidPartition);
    EXPECT_THROW(parse(R"({"blocks":[]})"), loiqif::InvalidPartition);
    EXPECT_THROW(parse(R"({"domain":["a"],"blocks":"a"})"), loiqif::InvalidPartition);
    EXPECT_THROW(parse(R"([1,2])"), loiqif::InvalidPartition);
}

TEST(Serialize, DistributionRoundTrip)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = 1 + rng() % 7;
        const auto d = Domain::range(n);
        const auto mu = loiqif::random_distribution(d, rng());
        const auto back = loiqif::distribution_from_json(Json::parse(loiqif::to_json(mu).dump()));
        for (loiqif::AtomIndex a = 0; a < n; ++a) {
            EXPECT_EQ(back.mass(a), mu.mass(a));
        }
    }
}

TEST(Serialize, DistributionErrors)
{
    auto parse = [](const char* text) { return loiqif::distribution_from_json(Json::parse(text)); };
    EXPECT_THROW(parse(R"({"domain":["a","b"],"mass":{"a":"1/2"}})"), loiqif::InvalidDistribution);
    EXPECT_THROW(parse(R"({"domain":["a","b"],"mass":{"a":"1/2","b":"1/4"}})"),
                 loiqif::InvalidDistribution);
    EXPECT_THROW(parse(R"({"domain":["a","b"],"mass":{"a":"1/2","b":"1/2","c":"0"}})"),
                 loiqif::InvalidDistribution);
    EXPECT_THROW(parse(R"({"domain":["a","b"],"mass":{"a":"-1/2","b":"3/2"}})"),
                 loiqif::InvalidDistribution);
    EXPECT_THROW(parse(R"({"domain":["a"],"mass":{"a":0.5}})"), loiqif::InvalidDistribution);
    const auto ok = parse(R"({"domain":["a","b"],"mass":{"a":1,"b":"0"}})");
    EXPECT_EQ(ok.mass(0), 1);
}

TEST(Serialize, ConfigRoundTrip)
{
    const auto cfg = loiqif::config_from_json(Json::parse(R"({
        "high": [{"name": "h", "bits": 3}],
        "low": [{"name": "l", "bits": 2, "value": 1}, {"name": "m", "bits": 4}],
        "locals": [{"name": "o", "bits": 5}],
        "observe": ["o", "l"],
        "mode": "passive",
        "budget": 77,
        "local_bits": 16,
        "cap": 4096})"));
    EXPECT_EQ(cfg.mode, loiqif::lang::AttackerMode::Passive);
    EXPECT_EQ(cfg.budget, 77u);
    EXPECT_EQ(cfg.local_bits, 16u);
    EXPECT_EQ(cfg.cap, 4096u);
    ASSERT_EQ(cfg.low.size(), 2u);
    EXPECT_EQ(cfg.low[0].value, 1u);
    EXPECT_FALSE(cfg.low[1].value);
    EXPECT_EQ(cfg.width_of("o"), 5u);
    EXPECT_EQ(cfg.enumeration_size(), 128u);
    const auto again = loiqif::config_from_json(loiqif::to_json(cfg));
    EXPECT_EQ(loiqif::to_json(again), loiqif::to_json(cfg));
}

TEST(Serialize, ConfigErrors)
{
    auto parse = [](const char* text) { return loiqif::config_from_json(Json::parse(text)); };
    EXPECT_THROW(parse(R"({"high":[{"name":"h","bits":2}],"extra":1})"), loiqif::ConfigError);
    EXPECT_THROW(parse(R"({"high":[{"name":"h"}]})"), loiqif::ConfigError);
    EXPECT_THROW(parse(R"({"high":[{"name":"h","bits":-1}]})"), loiqif::ConfigError);
    EXPECT_THROW(parse(R"({"high":[{"name":"h","bits":2,"colour":1}]})"), loiqif::ConfigError);
    EXPECT_THROW(parse(R"({"mode":"sleepy"})"), loiqif::ConfigError);
    EXPECT_THROW(parse(R"({"observe":"o"})"), loiqif::ConfigError);
    EXPECT_THROW(parse(R"([])"), loiqif::ConfigError);
    // Semantic problems surface on validation, not while reading.
    const auto active_low = parse(R"({"low":[{"name":"l","bits":2}]})");
    EXPECT_THROW(active_low.validate(), loiqif::ConfigError);
    const auto wide = parse(R"({"high":[{"name":"h","bits":30}],"cap":1024})");
    EXPECT_THROW(wide.validate(), loiqif::CapExceeded);
}

TEST(Serialize, WitnessRoundTrip)
{
    const auto d = Domain::range(4);
    const auto x = Partition::top(d);
    const auto y = Partition::from_named_blocks(d, {{"0", "1", "2"}, {"3"}});
    const auto w = loiqif::make_witness(x, y);
    ASSERT_TRUE(w);
    const auto j = loiqif::to_json(*w);
    EXPECT_EQ(j.at("n"), 2);
    EXPECT_EQ(j.at("violated_block"), Json::parse(R"(["0","1","2"])"));
    const auto back = loiqif::witness_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.n, w->n);
    EXPECT_EQ(back.violated_block, w->violated_block);
    EXPECT_TRUE(loiqif::verify_witness(back, x, y));
    EXPECT_THROW((void)loiqif::witness_from_json(Json::parse(R"({"n":1})")),
                 loiqif::InvalidArgument);
}

TEST(Serialize, MeasuresUseExactRationals)
{
    const auto d = Domain::range(4);
    const auto x = loiqif::kernel(d, [](loiqif::AtomIndex a) { return a == 1; });
    const auto j = loiqif::to_json(loiqif::measure_all(x, Distribution::uniform(d), 2));
    EXPECT_EQ(j.at("entropy_bits"), 0.811278124);
    EXPECT_EQ(j.at("guess_prob").dump(), R"({"1":"1/2","2":"3/4"})");
    EXPECT_EQ(j.at("expected_guesses"), "7/4");
    EXPECT_EQ(j.at("ge_leakage"), "3/4");
    EXPECT_EQ(j.at("ge_prime"), "5/4");
    EXPECT_EQ(j.at("channel_capacity_bits"), 1.0);
}

TEST(Serialize, RealsRounded)
{
    EXPECT_EQ(loiqif::format_real(0.0), "0");
    EXPECT_EQ(loiqif::format_real(2.0), "2");
    EXPECT_EQ(loiqif::format_real(0.8112781244591328), "0.811278124");
    EXPECT_EQ(loiqif::round_real(0.8112781244591328), 0.811278124);
    EXPECT_EQ(loiqif::format_real(-0.0), "0");
}
