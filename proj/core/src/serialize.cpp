#include "loiqif/serialize.hpp"

#include <set>

namespace loiqif {

namespace {

template <class E>
const Json& field(const Json& j, const char* key, const char* what)
{
    if (!j.is_object()) {
        throw E(std::string(what) + " must be a JSON object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw E(std::string(what) + " is missing \"" + key + "\"");
    }
    return *it;
}

template <class E>
std::vector<std::string> string_list(const Json& j, const char* what)
{
    if (!j.is_array()) {
        throw E(std::string(what) + " must be an array of strings");
    }
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) {
            throw E(std::string(what) + " must be an array of strings");
        }
        out.push_back(v.get<std::string>());
    }
    return out;
}

template <class E>
Domain domain_from_json(const Json& j)
{
    try {
        return Domain(string_list<E>(j, "domain"));
    } catch (const InvalidArgument& e) {
        throw E(std::string("bad domain: ") + e.what());
    }
}

Json names(const Domain& d, const Block& b)
{
    Json out = Json::array();
    for (auto a : b) {
        out.push_back(d.atom(a));
    }
    return out;
}

template <class E>
std::uint64_t unsigned_field(const Json& j, const char* key, const char* what)
{
    const Json& v = field<E>(j, key, what);
    if (!v.is_number_unsigned()) {
        throw E(std::string(what) + ": \"" + key + "\" must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

lang::VarDecl decl_from_json(const Json& j, const char* what)
{
    static const std::set<std::string> known{"name", "bits", "value"};
    for (const auto& [key, _] : j.items()) {
        if (!known.contains(key)) {
            throw ConfigError(std::string(what) + ": unknown key \"" + key + "\"");
        }
    }
    const auto& name = field<ConfigError>(j, "name", what);
    if (!name.is_string()) {
        throw ConfigError(std::string(what) + ": \"name\" must be a string");
    }
    lang::VarDecl d;
    d.name = name.get<std::string>();
    const auto bits = unsigned_field<ConfigError>(j, "bits", what);
    if (bits > 64) {
        throw ConfigError("variable '" + d.name + "' has width " + std::to_string(bits) +
                          "; widths must be in [1, 64]");
    }
    d.bits = static_cast<unsigned>(bits);
    if (j.contains("value")) {
        d.value = unsigned_field<ConfigError>(j, "value", what);
    }
    return d;
}

std::vector<lang::VarDecl> decls_from_json(const Json& j, const char* key)
{
    std::vector<lang::VarDecl> out;
    if (!j.contains(key)) {
        return out;
    }
    const auto& list = j.at(key);
    if (!list.is_array()) {
        throw ConfigError(std::string("\"") + key + "\" must be an array");
    }
    for (const auto& d : list) {
        out.push_back(decl_from_json(d, key));
    }
    return out;
}

Json decl_json(const lang::VarDecl& d)
{
    Json out{{"name", d.name}, {"bits", d.bits}};
    if (d.value) {
        out["value"] = *d.value;
    }
    return out;
}

Json real(double v) { return round_real(v); }

} // namespace

Json to_json(const Domain& domain)
{
    Json out = Json::array();
    for (const auto& a : domain.atoms()) {
        out.push_back(a);
    }
    return out;
}

Json blocks_json(const Partition& x)
{
    Json out = Json::array();
    for (const auto& b : x.blocks()) {
        out.push_back(names(x.domain(), b));
    }
    return out;
}

Json to_json(const Partition& x)
{
    return Json{{"domain", to_json(x.domain())}, {"blocks", blocks_json(x)}};
}

Partition partition_from_json(const Json& j)
{
    const auto domain = domain_from_json<InvalidPartition>(field<InvalidPartition>(j, "domain", "partition"));
    const auto& blocks = field<InvalidPartition>(j, "blocks", "partition");
    if (!blocks.is_array()) {
        throw InvalidPartition("partition \"blocks\" must be an array of arrays");
    }
    std::vector<std::vector<std::string>> named;
    for (const auto& b : blocks) {
        named.push_back(string_list<InvalidPartition>(b, "partition block"));
    }
    return Partition::from_named_blocks(domain, named);
}

Json to_json(const Distribution& mu)
{
    Json mass = Json::object();
    const auto& d = mu.domain();
    for (AtomIndex a = 0; a < d.size(); ++a) {
        mass[d.atom(a)] = to_string(mu.mass(a));
    }
    return Json{{"domain", to_json(d)}, {"mass", mass}};
}

Distribution distribution_from_json(const Json& j)
{
    const auto domain =
        domain_from_json<InvalidDistribution>(field<InvalidDistribution>(j, "domain", "distribution"));
    const auto& mass = field<InvalidDistribution>(j, "mass", "distribution");
    if (!mass.is_object()) {
        throw InvalidDistribution("distribution \"mass\" must be an object");
    }
    std::vector<Rational> masses(domain.size());
    std::vector<bool> seen(domain.size(), false);
    for (const auto& [atom, value] : mass.items()) {
        const auto index = domain.index_of(atom);
        if (!index) {
            throw InvalidDistribution("mass given for '" + atom + "', which is not in the domain");
        }
        if (value.is_string()) {
            masses[*index] = parse_rational(value.get<std::string>());
        } else if (value.is_number_unsigned()) {
            masses[*index] = Rational(static_cast<unsigned long>(value.get<std::uint64_t>()));
        } else {
            throw InvalidDistribution("mass of '" + atom + "' must be a rational string");
        }
        seen[*index] = true;
    }
    for (AtomIndex a = 0; a < domain.size(); ++a) {
        if (!seen[a]) {
            throw InvalidDistribution("atom '" + domain.atom(a) + "' has no mass entry");
        }
    }
    return Distribution(domain, std::move(masses));
}

Json to_json(const lang::AttackerConfig& cfg)
{
    Json out;
    auto list = [](const std::vector<lang::VarDecl>& ds) {
        Json a = Json::array();
        for (const auto& d : ds) {
            a.push_back(decl_json(d));
        }
        return a;
    };
    out["high"] = list(cfg.high);
    out["low"] = list(cfg.low);
    if (!cfg.locals.empty()) {
        out["locals"] = list(cfg.locals);
    }
    out["observe"] = cfg.observed();
    out["mode"] = std::string(lang::to_string(cfg.mode));
    out["budget"] = cfg.budget;
    out["local_bits"] = cfg.local_bits;
    out["cap"] = cfg.cap;
    return out;
}

lang::AttackerConfig config_from_json(const Json& j)
{
    if (!j.is_object()) {
        throw ConfigError("configuration must be a JSON object");
    }
    static const std::set<std::string> known{"high",   "low",        "locals", "observe",
                                             "mode",   "budget",     "local_bits", "cap"};
    for (const auto& [key, _] : j.items()) {
        if (!known.contains(key)) {
            throw ConfigError("configuration: unknown key \"" + key + "\"");
        }
    }
    lang::AttackerConfig cfg;
    cfg.high = decls_from_json(j, "high");
    cfg.low = decls_from_json(j, "low");
    cfg.locals = decls_from_json(j, "locals");
    if (j.contains("observe")) {
        cfg.observe = string_list<ConfigError>(j.at("observe"), "\"observe\"");
    }
    if (j.contains("mode")) {
        const auto& m = j.at("mode");
        if (m == "active") {
            cfg.mode = lang::AttackerMode::Active;
        } else if (m == "passive") {
            cfg.mode = lang::AttackerMode::Passive;
        } else {
            throw ConfigError("\"mode\" must be \"active\" or \"passive\"");
        }
    }
    if (j.contains("budget")) {
        cfg.budget = unsigned_field<ConfigError>(j, "budget", "configuration");
    }
    if (j.contains("local_bits")) {
        const auto bits = unsigned_field<ConfigError>(j, "local_bits", "configuration");
        cfg.local_bits = bits > 64 ? 0 : static_cast<unsigned>(bits);
    }
    if (j.contains("cap")) {
        cfg.cap = unsigned_field<ConfigError>(j, "cap", "configuration");
    }
    return cfg;
}

Json to_json(const MeasureReport& m)
{
    Json g = Json::object();
    for (const auto& [n, v] : m.guess_prob) {
        g[std::to_string(n)] = to_string(v);
    }
    return Json{{"entropy_bits", real(m.entropy_bits)},
                {"guess_prob", g},
                {"expected_guesses", to_string(m.expected_guesses)},
                {"me_leakage_bits", real(m.me_leakage_bits)},
                {"ge_leakage", to_string(m.ge_leakage)},
                {"me_prime_bits", real(m.me_prime_bits)},
                {"ge_prime", to_string(m.ge_prime)},
                {"channel_capacity_bits", real(m.channel_capacity_bits)}};
}

Json to_json(const OrderWitness& w)
{
    return Json{{"n", w.n},
                {"violated_block", names(w.distribution.domain(), w.violated_block)},
                {"distribution", to_json(w.distribution)}};
}

OrderWitness witness_from_json(const Json& j)
{
    auto distribution = distribution_from_json(field<InvalidArgument>(j, "distribution", "witness"));
    const auto n = unsigned_field<InvalidArgument>(j, "n", "witness");
    Block block;
    for (const auto& name :
         string_list<InvalidArgument>(field<InvalidArgument>(j, "violated_block", "witness"),
                                      "witness \"violated_block\"")) {
        const auto index = distribution.domain().index_of(name);
        if (!index) {
            throw InvalidArgument("witness block names unknown atom '" + name + "'");
        }
        block.push_back(*index);
    }
    return OrderWitness{std::move(distribution), static_cast<std::size_t>(n), std::move(block)};
}

Json to_json(const OrderResult& r)
{
    auto opt = [](const std::optional<OrderWitness>& w) { return w ? to_json(*w) : Json(nullptr); };
    return Json{{"relation", std::string(to_string(r.relation))},
                {"witness_xy", opt(r.witness_xy)},
                {"witness_yx", opt(r.witness_yx)}};
}

Json to_json(const AuditReport& a)
{
    Json violations = Json::array();
    for (const auto& v : a.violations) {
        violations.push_back(Json{{"sample", v.sample},
                                  {"measure", std::string(to_string(v.measure))},
                                  {"n", v.n},
                                  {"detail", v.detail}});
    }
    return Json{{"samples", a.samples},     {"x_leq_y", a.x_leq_y},
                {"y_leq_x", a.y_leq_x},     {"x_ahead", a.x_ahead},
                {"y_ahead", a.y_ahead},     {"consistent", a.consistent()},
                {"violations", violations}};
}

Json to_json(const LoopAnalysis& loop)
{
    Json iterations = Json::array();
    for (const auto& w : loop.iterations) {
        iterations.push_back(blocks_json(w));
    }
    Json chain = Json::array();
    for (const auto& w : loop.w_chain) {
        chain.push_back(blocks_json(w));
    }
    return Json{{"domain", to_json(loop.result.domain())},
                {"iterations", iterations},
                {"w_chain", chain},
                {"collision", blocks_json(loop.collision)},
                {"result", blocks_json(loop.result)},
                {"direct", blocks_json(loop.direct)},
                {"iterations_analyzed", loop.iterations_analyzed},
                {"stabilized", loop.stabilized},
                {"matches_loi", loop.matches_loi()}};
}

Json to_json(const AnalysisReport& r)
{
    return Json{{"program", r.program_id},
                {"mode", std::string(lang::to_string(r.mode))},
                {"distribution", r.distribution_id},
                {"block_count", r.partition.block_count()},
                {"partition", to_json(r.partition)},
                {"leakage_bits", real(r.leakage_bits)},
                {"measures", to_json(r.measures)},
                {"warnings", r.warnings}};
}

} // namespace loiqif
