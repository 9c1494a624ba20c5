#include "qkwc/config.hpp"

#include <fstream>
#include <sstream>

#include <toml.hpp>

namespace qkwc {

namespace {

json from_toml(const toml::node &node, const std::string &where)
{
    if (const auto *t = node.as_table()) {
        json j = json::object();
        for (const auto &[k, v] : *t) {
            j[std::string(k.str())] = from_toml(v, where + "." + std::string(k.str()));
        }
        return j;
    }
    if (const auto *a = node.as_array()) {
        json j = json::array();
        for (const auto &v : *a) {
            j.push_back(from_toml(v, where));
        }
        return j;
    }
    if (const auto *s = node.as_string()) {
        return s->get();
    }
    if (const auto *i = node.as_integer()) {
        return i->get();
    }
    if (const auto *b = node.as_boolean()) {
        return b->get();
    }
    if (node.is_floating_point()) {
        throw invalid_input("'" + where + "' is a float; write exact numbers as integers or \"p/q\" strings");
    }
    throw invalid_input("'" + where + "' has an unsupported TOML type");
}

bool ends_with(const std::string &s, const std::string &suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void reject_floats(const json &j, const std::string &where)
{
    if (j.is_number_float()) {
        throw invalid_input("'" + where + "' is a float; write exact numbers as integers or \"p/q\" strings");
    }
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            reject_floats(v, where + "." + k);
        }
    } else if (j.is_array()) {
        for (const auto &v : j) {
            reject_floats(v, where);
        }
    }
}

int positive_int(const json &j, const char *key)
{
    if (!j.is_number_integer() || j.get<long>() <= 0 || j.get<long>() > 1000000000) {
        throw invalid_input(std::string("'") + key + "' must be a positive integer");
    }
    return j.get<int>();
}

} // namespace

json load_config_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw invalid_input("cannot open config file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (ends_with(path, ".toml")) {
        try {
            return from_toml(toml::parse(buf.str(), path), "config");
        } catch (const toml::parse_error &e) {
            throw invalid_input("TOML parse error in '" + path + "': " + std::string(e.description()));
        }
    }
    if (ends_with(path, ".json")) {
        json j;
        try {
            j = json::parse(buf.str());
        } catch (const json::parse_error &e) {
            throw invalid_input("JSON parse error in '" + path + "': " + e.what());
        }
        reject_floats(j, "config");
        return j;
    }
    throw invalid_input("config file must end in .toml or .json: '" + path + "'");
}

void apply_config(RunConfig &cfg, const json &doc)
{
    if (!doc.is_object()) {
        throw invalid_input("config must be a table / object");
    }
    for (const auto &[key, v] : doc.items()) {
        if (key == "preset") {
            if (!v.is_string()) {
                throw invalid_input("'preset' must be a string");
            }
            cfg.preset = v.get<std::string>();
        } else if (key == "spec") {
            cfg.spec = v;
        } else if (key == "max_degree") {
            cfg.max_degree = rational_from_json(v);
        } else if (key == "epsilon") {
            cfg.epsilon = rational_from_json(v);
        } else if (key == "seed") {
            if (!v.is_number_integer() || v.get<long long>() < 0) {
                throw invalid_input("'seed' must be a nonnegative integer");
            }
            cfg.seed = v.get<std::uint64_t>();
        } else if (key == "trials") {
            cfg.trials = positive_int(v, "trials");
        } else if (key == "out") {
            if (!v.is_string()) {
                throw invalid_input("'out' must be a path string");
            }
            cfg.out = v.get<std::string>();
        } else if (key == "potential") {
            cfg.potential = v;
        } else if (key == "telescope") {
            if (!v.is_boolean()) {
                throw invalid_input("'telescope' must be a boolean");
            }
            cfg.telescope = v.get<bool>();
        } else if (key == "verify") {
            if (!v.is_object()) {
                throw invalid_input("'verify' must be a table");
            }
            for (const auto &[k, x] : v.items()) {
                if (k == "q_window") {
                    cfg.q_window = positive_int(x, "verify.q_window");
                } else if (k == "newton_max") {
                    cfg.newton_max = positive_int(x, "verify.newton_max");
                } else if (k == "weight_cutoff") {
                    cfg.weight_cutoff = positive_int(x, "verify.weight_cutoff");
                } else {
                    throw invalid_input("unknown key 'verify." + k + "'");
                }
            }
        } else {
            throw invalid_input("unknown config key '" + key + "'");
        }
    }
    if (cfg.max_degree < 0) {
        throw invalid_input("'max_degree' must be nonnegative");
    }
    if (cfg.epsilon && *cfg.epsilon <= 0) {
        throw invalid_input("'epsilon' must be positive");
    }
}

HypergeomSpec resolve_spec(const RunConfig &cfg)
{
    if (cfg.spec) {
        if (cfg.spec->is_string()) {
            return hypergeom_spec_from_json(load_config_file(cfg.spec->get<std::string>()));
        }
        return hypergeom_spec_from_json(*cfg.spec);
    }
    if (cfg.preset) {
        return preset_by_name(*cfg.preset, cfg.max_degree);
    }
    throw invalid_input("no I-function given: set a preset or a spec");
}

} // namespace qkwc
