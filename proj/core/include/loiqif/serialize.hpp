#pragma once

#include "loiqif/analysis.hpp"
#include "loiqif/distribution.hpp"
#include "loiqif/lang/config.hpp"
#include "loiqif/measures.hpp"
#include "loiqif/ordering.hpp"
#include "loiqif/report.hpp"

#include <nlohmann/json.hpp>

namespace loiqif {

using Json = nlohmann::ordered_json;

// Rationals are written as "p/q" strings, reals rounded to nine
// significant digits. Readers throw InvalidPartition, InvalidDistribution
// or ConfigError on malformed input.

Json to_json(const Domain& domain);
Json blocks_json(const Partition& x);
Json to_json(const Partition& x);
Partition partition_from_json(const Json& j);

Json to_json(const Distribution& mu);
Distribution distribution_from_json(const Json& j);

Json to_json(const lang::AttackerConfig& cfg);
/// Structural checks only; AttackerConfig::validate() runs when the
/// configuration is used.
lang::AttackerConfig config_from_json(const Json& j);

Json to_json(const MeasureReport& m);
Json to_json(const OrderWitness& w);
OrderWitness witness_from_json(const Json& j);
Json to_json(const OrderResult& r);
Json to_json(const AuditReport& a);
Json to_json(const LoopAnalysis& loop);
Json to_json(const AnalysisReport& r);

} // namespace loiqif
