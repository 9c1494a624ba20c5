#ifndef QKWC_CONFIG_HPP
#define QKWC_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "qkwc/json_io.hpp"

namespace qkwc {

struct RunConfig {
    std::optional<std::string> preset;
    // Inline hypergeometric rule or a path to one; wins over `preset`.
    std::optional<json> spec;
    Rational max_degree = 2;
    std::optional<Rational> epsilon;
    std::uint64_t seed = 1;
    std::optional<int> trials;
    std::optional<std::string> out;
    // Potential for `transform`: inline object or a path to a JSON file.
    std::optional<json> potential;
    bool telescope = false;

    // Random-input shape for `verify`.
    int q_window = 3;
    int newton_max = 3;
    int weight_cutoff = 6;
};

// TOML (.toml) or JSON (.json), chosen by extension. Floats are rejected.
json load_config_file(const std::string &path);

// Merges a parsed document into `cfg`. Unknown keys are errors.
void apply_config(RunConfig &cfg, const json &doc);

// Spec from `cfg.spec` or the named preset, evaluated to `cfg.max_degree`.
HypergeomSpec resolve_spec(const RunConfig &cfg);

} // namespace qkwc

#endif
