#include "loiqif/cli.hpp"

#include <loiqif/analysis.hpp>
#include <loiqif/lang/parser.hpp>
#include <loiqif/measures.hpp>
#include <loiqif/ordering.hpp>
#include <loiqif/report.hpp>
#include <loiqif/serialize.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace loiqif::cli {

namespace {

struct Options {
    std::vector<std::string> files;
    std::string config;
    std::string dist;
    std::string witness;
    bool uniform = false;
    bool json = false;
    std::uint64_t seed = 0;
    std::size_t guesses = 4;
    std::uint64_t max_iter = 0;
    std::uint64_t budget = 0;
    std::size_t trials = 200;
    std::vector<std::string> runs;
    bool budget_given = false;
    bool max_iter_given = false;
};

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidArgument("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path)
{
    try {
        return Json::parse(read_text(path));
    } catch (const Json::parse_error& e) {
        throw InvalidArgument(path + ": invalid JSON: " + e.what());
    }
}

lang::Program read_program(const std::string& path)
{
    try {
        return lang::parse(read_text(path));
    } catch (const ParseError& e) {
        throw ParseError(e.position(), path + ":" + e.what(), e.expected());
    }
}

lang::AttackerConfig read_config(const Options& o)
{
    if (o.config.empty()) {
        throw ConfigError("--config is required");
    }
    auto cfg = config_from_json(read_json(o.config));
    if (o.budget_given) {
        cfg.budget = o.budget;
    }
    return cfg;
}

std::optional<Distribution> read_distribution(const Options& o, const Domain& domain)
{
    if (o.dist.empty()) {
        return std::nullopt;
    }
    auto mu = distribution_from_json(read_json(o.dist));
    require_same_domain(domain, mu.domain(), "distribution '" + o.dist + "'");
    return mu;
}

std::string distribution_id(const Options& o) { return o.dist.empty() ? "uniform" : o.dist; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string describe(const OrderWitness& w)
{
    const auto& d = w.distribution.domain();
    std::string out = "n=" + std::to_string(w.n) + " block {";
    for (std::size_t k = 0; k < w.violated_block.size(); ++k) {
        out += (k ? "," : "") + d.atom(w.violated_block[k]);
    }
    out += "}\n    mass";
    for (AtomIndex a = 0; a < d.size(); ++a) {
        if (w.distribution.mass(a) != 0) {
            out += " " + d.atom(a) + ":" + to_string(w.distribution.mass(a));
        }
    }
    return out + "\n";
}

int cmd_analyze(const Options& o, std::ostream& out)
{
    const auto cfg = read_config(o);
    const auto program = read_program(o.files.at(0));
    const auto result = lang::loi(program, cfg);
    const auto mu = read_distribution(o, result.partition.domain());
    const auto report =
        make_report(o.files[0], result, cfg.mode, mu, distribution_id(o), o.guesses);
    if (o.json) {
        emit(out, to_json(report));
    } else {
        out << format_report(report);
    }
    return kOk;
}

int cmd_compare(const Options& o, std::ostream& out)
{
    const auto cfg = read_config(o);
    const auto x = lang::loi(read_program(o.files.at(0)), cfg).partition;
    const auto y = lang::loi(read_program(o.files.at(1)), cfg).partition;
    const auto result = compare(x, y);
    const auto audit = equivalence_audit(x, y, o.trials, o.seed);
    if (o.json) {
        emit(out, Json{{"left", o.files[0]},
                       {"right", o.files[1]},
                       {"left_partition", to_json(x)},
                       {"right_partition", to_json(y)},
                       {"result", to_json(result)},
                       {"audit", to_json(audit)}});
    } else {
        out << "relation      " << to_string(result.relation) << "\n";
        out << "left          " << to_string(x) << "\n";
        out << "right         " << to_string(y) << "\n";
        if (result.witness_xy) {
            out << "witness against left <= right: " << describe(*result.witness_xy);
        }
        if (result.witness_yx) {
            out << "witness against right <= left: " << describe(*result.witness_yx);
        }
        out << "audit         " << audit.samples << " samples, left ahead on " << audit.x_ahead
            << ", right ahead on " << audit.y_ahead << ", "
            << (audit.consistent() ? "consistent" : "INCONSISTENT") << "\n";
        for (const auto& v : audit.violations) {
            out << "  violation sample " << v.sample << " " << to_string(v.measure) << " n="
                << v.n << ": " << v.detail << "\n";
        }
    }
    return audit.consistent() ? kOk : kInternal;
}

std::map<std::string, std::uint64_t> parse_assignment(const std::string& text)
{
    std::map<std::string, std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            throw ConfigError("run assignment '" + item + "' must look like name=value");
        }
        const auto name = item.substr(0, eq);
        const auto value = item.substr(eq + 1);
        std::size_t used = 0;
        std::uint64_t v = 0;
        try {
            v = std::stoull(value, &used, 0);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != value.size() || value.front() == '-') {
            throw ConfigError("run assignment '" + item + "' has a malformed value");
        }
        out[name] = v;
    }
    return out;
}

int cmd_multirun(const Options& o, std::ostream& out)
{
    const auto cfg = read_config(o);
    if (cfg.mode != lang::AttackerMode::Active) {
        throw ConfigError("multirun needs an active attacker");
    }
    const auto program = read_program(o.files.at(0));
    std::vector<std::map<std::string, std::uint64_t>> assignments;
    for (const auto& r : o.runs) {
        assignments.push_back(parse_assignment(r));
    }
    if (assignments.empty()) {
        assignments.emplace_back();
    }
    std::vector<Partition> runs;
    for (const auto& a : assignments) {
        auto run_cfg = with_low_values(cfg, a);
        run_cfg.validate();
        runs.push_back(lang::loi(program, run_cfg).partition);
    }
    const auto joined = multi_run(runs);
    const auto same = leaks_same_information(runs);
    const lang::LoiResult view{joined, Partition::bottom(joined.domain()), {}};
    const auto report = make_report(o.files[0], view, cfg.mode,
                                    read_distribution(o, joined.domain()), distribution_id(o),
                                    o.guesses);
    if (o.json) {
        Json list = Json::array();
        for (std::size_t k = 0; k < runs.size(); ++k) {
            list.push_back(Json{{"lows", assignments[k]}, {"blocks", blocks_json(runs[k])}});
        }
        Json witness = nullptr;
        if (same.witness) {
            witness = Json::array({same.witness->first, same.witness->second});
        }
        emit(out, Json{{"runs", list},
                       {"join", to_json(joined)},
                       {"same_information", same.same},
                       {"witness", witness},
                       {"report", to_json(report)}});
    } else {
        for (std::size_t k = 0; k < runs.size(); ++k) {
            out << "run " << k;
            for (const auto& [name, value] : assignments[k]) {
                out << " " << name << "=" << value;
            }
            out << "  " << to_string(runs[k]) << "\n";
        }
        out << "join          " << to_string(joined) << "\n";
        out << "same info     " << (same.same ? "yes" : "no");
        if (same.witness) {
            out << " (runs " << same.witness->first << " and " << same.witness->second << ")";
        }
        out << "\n" << format_report(report);
    }
    return kOk;
}

int cmd_loop(const Options& o, std::ostream& out)
{
    const auto cfg = read_config(o);
    const auto program = read_program(o.files.at(0));
    std::optional<std::uint64_t> cap;
    if (o.max_iter_given) {
        cap = o.max_iter;
    }
    const auto loop = loop_analyze(program, cfg, cap);
    if (o.json) {
        emit(out, to_json(loop));
    } else {
        for (std::size_t n = 0; n < loop.w_chain.size(); ++n) {
            out << "W_" << n << "    " << to_string(loop.iterations[n]) << "\n";
            out << "W<=" << n << "  " << to_string(loop.w_chain[n]) << "\n";
        }
        out << "C       " << to_string(loop.collision) << "\n";
        out << "result  " << to_string(loop.result) << "\n";
        out << "direct  " << to_string(loop.direct) << "\n";
        out << "iterations analyzed " << loop.iterations_analyzed << ", "
            << (loop.stabilized ? "stabilized" : "NOT stabilized") << ", cross-check "
            << (loop.matches_loi() ? "passed" : "FAILED") << "\n";
    }
    return loop.stabilized && !loop.matches_loi() ? kInternal : kOk;
}

int cmd_capacity(const Options& o, std::ostream& out)
{
    const auto cfg = read_config(o);
    const auto x = lang::loi(read_program(o.files.at(0)), cfg).partition;
    const double cc = channel_capacity(x);
    if (o.json) {
        emit(out, Json{{"program", o.files[0]},
                       {"block_count", x.block_count()},
                       {"channel_capacity_bits", round_real(cc)}});
    } else {
        out << "blocks    " << x.block_count() << "\n";
        out << "capacity  " << format_real(cc) << " bits\n";
    }
    return kOk;
}

int cmd_witness_check(const Options& o, std::ostream& out)
{
    std::optional<Partition> x;
    std::optional<Partition> y;
    if (o.config.empty()) {
        x = partition_from_json(read_json(o.files.at(0)));
        y = partition_from_json(read_json(o.files.at(1)));
    } else {
        const auto cfg = read_config(o);
        x = lang::loi(read_program(o.files.at(0)), cfg).partition;
        y = lang::loi(read_program(o.files.at(1)), cfg).partition;
    }
    if (o.witness.empty()) {
        throw InvalidArgument("--witness is required");
    }
    const auto w = witness_from_json(read_json(o.witness));
    const bool ok = verify_witness(w, *x, *y);
    if (o.json) {
        Json j{{"verified", ok}, {"n", w.n}};
        if (x->domain() == w.distribution.domain() && y->domain() == w.distribution.domain()) {
            const auto& mu = w.distribution;
            j["left"] = Json{{"G_n", to_string(guess_prob(*x, mu, w.n))},
                             {"G_1", to_string(guess_prob(*x, mu, 1))},
                             {"H", round_real(entropy(*x, mu))},
                             {"NG", to_string(expected_guesses(*x, mu))}};
            j["right"] = Json{{"G_n", to_string(guess_prob(*y, mu, w.n))},
                              {"G_1", to_string(guess_prob(*y, mu, 1))},
                              {"H", round_real(entropy(*y, mu))},
                              {"NG", to_string(expected_guesses(*y, mu))}};
        }
        emit(out, j);
    } else {
        out << "witness " << (ok ? "verified" : "rejected") << "\n";
        if (x->domain() == w.distribution.domain() && y->domain() == w.distribution.domain() &&
            w.n >= 1) {
            const auto& mu = w.distribution;
            out << "  G_" << w.n << "  " << to_string(guess_prob(*x, mu, w.n)) << " vs "
                << to_string(guess_prob(*y, mu, w.n)) << "\n";
            out << "  G_1  " << to_string(guess_prob(*x, mu, 1)) << " vs "
                << to_string(guess_prob(*y, mu, 1)) << "\n";
            out << "  H    " << format_real(entropy(*x, mu)) << " vs "
                << format_real(entropy(*y, mu)) << "\n";
            out << "  NG   " << to_string(expected_guesses(*x, mu)) << " vs "
                << to_string(expected_guesses(*y, mu)) << "\n";
        }
    }
    return ok ? kOk : kWitnessRejected;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quantitative information flow over the lattice of information", "loiqif"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, std::size_t programs, const std::string& what) {
        sub->add_option("files", o.files, what)->required()->expected(static_cast<int>(programs));
        sub->add_option("--config", o.config, "attacker configuration (JSON)");
        sub->add_flag("--json", o.json, "emit JSON");
        sub->add_option("--budget", o.budget, "step budget per run");
    };
    auto distribution = [&](CLI::App* sub) {
        auto* d = sub->add_option("--dist", o.dist, "distribution (JSON)");
        auto* u = sub->add_flag("--uniform", o.uniform, "uniform distribution (default)");
        d->excludes(u);
        sub->add_option("--guesses", o.guesses, "report G_n for n = 1..N")
            ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
    };

    auto* analyze = app.add_subcommand("analyze", "measures of a program's partition");
    common(analyze, 1, "program file");
    distribution(analyze);

    auto* cmp = app.add_subcommand("compare", "order two programs and synthesise witnesses");
    cmp->add_option("files", o.files, "two program files")->required()->expected(2);
    cmp->add_option("--config", o.config, "shared attacker configuration")->required();
    cmp->add_flag("--json", o.json, "emit JSON");
    cmp->add_option("--seed", o.seed, "audit seed");
    cmp->add_option("--trials", o.trials, "random audit distributions")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 24));
    cmp->add_option("--budget", o.budget, "step budget per run");

    auto* multirun = app.add_subcommand("multirun", "join of runs with different low inputs");
    common(multirun, 1, "program file");
    distribution(multirun);
    multirun->add_option("--run", o.runs, "low assignment such as l=5,m=2 (repeatable)");

    auto* loop = app.add_subcommand("loop", "observation chain and collisions of a loop");
    common(loop, 1, "program file");
    loop->add_option("--max-iter", o.max_iter, "iteration cap");

    auto* capacity = app.add_subcommand("capacity", "channel capacity of a program");
    common(capacity, 1, "program file");

    auto* wc = app.add_subcommand("witness-check", "verify an order witness");
    wc->add_option("files", o.files, "two partition files, or programs with --config")
        ->required()
        ->expected(2);
    wc->add_option("--config", o.config, "attacker configuration (JSON)");
    wc->add_option("--witness", o.witness, "witness (JSON)")->required();
    wc->add_flag("--json", o.json, "emit JSON");
    wc->add_option("--budget", o.budget, "step budget per run");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kInputError;
    }

    const auto* chosen = app.get_subcommands().front();
    o.budget_given = chosen->count("--budget") > 0;
    o.max_iter_given = chosen == loop && loop->count("--max-iter") > 0;

    try {
        if (chosen == analyze) {
            return cmd_analyze(o, out);
        }
        if (chosen == cmp) {
            return cmd_compare(o, out);
        }
        if (chosen == multirun) {
            return cmd_multirun(o, out);
        }
        if (chosen == loop) {
            return cmd_loop(o, out);
        }
        if (chosen == capacity) {
            return cmd_capacity(o, out);
        }
        return cmd_witness_check(o, out);
    } catch (const CapExceeded& e) {
        err << "loiqif: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const InternalError& e) {
        err << "loiqif: internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const Error& e) {
        err << "loiqif: " << e.what() << "\n";
        return kInputError;
    } catch (const Json::exception& e) {
        err << "loiqif: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "loiqif: internal error: " << e.what() << "\n";
        return kInternal;
    }
}

} // namespace loiqif::cli
