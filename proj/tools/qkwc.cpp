// qkwc: batch front-end for the I-function, mirror map, potential transforms
// and the verification suites.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qkwc/config.hpp"
#include "qkwc/verify.hpp"

namespace {

using namespace qkwc;

constexpr int kExitOk = 0;
constexpr int kExitIdentity = 1;
constexpr int kExitConfig = 2;

struct Flags {
    std::string config;
    std::string preset;
    std::string max_degree;
    std::string epsilon;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::string out;
    std::string potential;
    bool telescope = false;
    std::string suite = "all";
    std::string inject_fault;
};

RunConfig build_config(const Flags &f)
{
    RunConfig cfg;
    if (!f.config.empty()) {
        apply_config(cfg, load_config_file(f.config));
    }
    if (!f.preset.empty()) {
        cfg.preset = f.preset;
        cfg.spec.reset();
    }
    if (!f.max_degree.empty()) {
        cfg.max_degree = parse_rational(f.max_degree);
        if (cfg.max_degree < 0) {
            throw invalid_input("--max-degree must be nonnegative");
        }
    }
    if (!f.epsilon.empty()) {
        cfg.epsilon = parse_rational(f.epsilon);
        if (*cfg.epsilon <= 0) {
            throw invalid_input("--epsilon must be positive");
        }
    }
    if (f.seed) {
        cfg.seed = *f.seed;
    }
    if (f.trials) {
        if (*f.trials <= 0) {
            throw invalid_input("--trials must be positive");
        }
        cfg.trials = *f.trials;
    }
    if (!f.out.empty()) {
        cfg.out = f.out;
    }
    if (!f.potential.empty()) {
        cfg.potential = f.potential;
    }
    if (f.telescope) {
        cfg.telescope = true;
    }
    return cfg;
}

// Without --epsilon every wall up to the truncation degree is crossed.
Rational effective_epsilon(const RunConfig &cfg)
{
    if (cfg.epsilon) {
        return *cfg.epsilon;
    }
    return cfg.max_degree > 0 ? Rational(1 / cfg.max_degree) : Rational(1);
}

void emit(const RunConfig &cfg, const json &doc)
{
    const std::string text = doc.dump(2) + "\n";
    if (cfg.out) {
        std::ofstream out(*cfg.out, std::ios::binary);
        if (!out) {
            throw invalid_input("cannot write '" + *cfg.out + "'");
        }
        out << text;
    } else {
        std::cout << text;
    }
}

json epsilon_json(const RunConfig &cfg)
{
    return to_json(effective_epsilon(cfg));
}

int cmd_ifun(const RunConfig &cfg)
{
    const auto spec = resolve_spec(cfg);
    json doc = {{"max_degree", to_json(cfg.max_degree)}};
    doc["series"] = to_json(evaluate(spec, cfg.max_degree));
    emit(cfg, doc);
    return kExitOk;
}

int cmd_mu(const RunConfig &cfg)
{
    const auto spec = resolve_spec(cfg);
    const auto I = evaluate(spec, cfg.max_degree);
    const auto mu = mu_geq_epsilon(I, effective_epsilon(cfg));
    json doc = {{"max_degree", to_json(cfg.max_degree)}, {"epsilon", epsilon_json(cfg)}};
    doc["mu"] = to_json(*I.cone(), mu);
    emit(cfg, doc);
    return kExitOk;
}

int cmd_transform(const RunConfig &cfg)
{
    if (!cfg.potential) {
        throw invalid_input("transform needs a potential (--potential PATH or 'potential' in the config)");
    }
    const auto spec = resolve_spec(cfg);
    const json raw = cfg.potential->is_string() ? load_config_file(cfg.potential->get<std::string>()) : *cfg.potential;
    const auto F = correlator_series_from_json(spec.ring, raw);
    if (!(*F.cone() == *spec.cone)) {
        throw invalid_input("the potential's cone differs from the I-function's cone");
    }
    const Rational eps = effective_epsilon(cfg);
    const auto I = evaluate(spec, cfg.max_degree);
    const auto mu = mu_geq_epsilon(I, eps);
    const auto substituted = potential_transform(F, mu);
    json doc = {{"max_degree", to_json(cfg.max_degree)}, {"epsilon", to_json(eps)}};
    doc["mu"] = to_json(*I.cone(), mu);
    doc["transformed"] = to_json(substituted);
    if (cfg.telescope) {
        const auto telescoped = telescoped_transform(F, mu, eps);
        const bool equal = telescoped == substituted;
        doc["telescoping"] = {{"equal", equal}, {"telescoped", to_json(telescoped)}};
        emit(cfg, doc);
        if (!equal) {
            std::cerr << "telescoping check failed: composed wall transforms differ from the substitution\n";
            return kExitIdentity;
        }
        return kExitOk;
    }
    emit(cfg, doc);
    return kExitOk;
}

void dump_failures(const SuiteReport &rep)
{
    for (const auto &c : rep.checks) {
        if (!c.ok()) {
            std::cerr << "FAILED " << rep.suite << "/" << c.name << ": " << c.passed << "/" << c.trials
                      << " passed; first failure at trial " << c.first_failure << "\n";
            if (c.counterexample) {
                std::cerr << c.counterexample->dump(2) << "\n";
            }
        }
    }
}

int cmd_verify(const RunConfig &cfg, const Flags &f)
{
    VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.trials = cfg.trials;
    opts.q_window = cfg.q_window;
    opts.newton_max = cfg.newton_max;
    opts.weight_cutoff = cfg.weight_cutoff;
    if (!f.inject_fault.empty()) {
        if (f.inject_fault != "split") {
            throw invalid_input("unknown fault '" + f.inject_fault + "' (known: split)");
        }
        opts.inject_split_fault = true;
    }
    std::vector<std::string> suites;
    if (f.suite == "all") {
        suites = suite_names();
    } else {
        check_names(f.suite);
        suites.push_back(f.suite);
    }
    bool ok = true;
    json reports = json::array();
    for (const auto &name : suites) {
        const auto rep = run_suite(name, opts);
        ok = ok && rep.ok();
        dump_failures(rep);
        reports.push_back(to_json(rep));
    }
    json doc;
    if (suites.size() == 1) {
        doc = {{"suite", suites.front()}, {"seed", opts.seed}, {"ok", ok}, {"checks", reports.front()["checks"]}};
    } else {
        doc = {{"seed", opts.seed}, {"ok", ok}, {"suites", reports}};
    }
    emit(cfg, doc);
    return ok ? kExitOk : kExitIdentity;
}

void add_common(CLI::App *sub, Flags &f)
{
    sub->add_option("--config", f.config, "TOML or JSON run configuration");
    sub->add_option("--preset", f.preset, "Named I-function: P<n> or P<n>-qtwist");
    sub->add_option("--max-degree", f.max_degree, "Novikov truncation degree D (integer or p/q)");
    sub->add_option("--epsilon", f.epsilon, "Stability parameter as p/q");
    sub->add_option("--seed", f.seed, "Master seed");
    sub->add_option("--trials", f.trials, "Trials per randomized check");
    sub->add_option("--out", f.out, "Write JSON here instead of stdout");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact quantum K-theoretic wall-crossing toolkit"};
    app.require_subcommand(1);
    Flags f;

    auto *ifun = app.add_subcommand("ifun", "Evaluate I(Q, q) to Novikov degree D");
    auto *mu = app.add_subcommand("mu", "Mirror map mu^{>=epsilon}");
    auto *transform = app.add_subcommand("transform", "Apply t -> t + mu^{>=epsilon} to a potential");
    auto *verify = app.add_subcommand("verify", "Run verification suites");
    for (auto *sub : {ifun, mu, transform, verify}) {
        add_common(sub, f);
    }
    transform->add_option("--potential", f.potential, "Correlator series JSON file");
    transform->add_flag("--telescope", f.telescope, "Also compose single-wall transforms and compare");
    verify->add_option("suite", f.suite, "residues|split|lambda|loccor|inflated|wall|all");
    verify->add_option("--inject-fault", f.inject_fault, "Negative control: split");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        const RunConfig cfg = build_config(f);
        if (*ifun) {
            return cmd_ifun(cfg);
        }
        if (*mu) {
            return cmd_mu(cfg);
        }
        if (*transform) {
            return cmd_transform(cfg);
        }
        return cmd_verify(cfg, f);
    } catch (const qkwc_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const json::exception &e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return kExitConfig;
    }
}
