#ifndef QKWC_VERIFY_HPP
#define QKWC_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qkwc/json_io.hpp"

namespace qkwc {

struct VerifyOptions {
    std::uint64_t seed = 1;
    // Overrides the trial count of every randomized check. For loccor it is
    // the number of seeds per (m, |D|, r) configuration.
    std::optional<int> trials;
    int q_window = 3;
    int newton_max = 3;
    int weight_cutoff = 6;
    // Negative control: split() returns a wrong plus part.
    bool inject_split_fault = false;
};

struct CheckOutcome {
    std::string name;
    std::string statement;
    long trials = 0;
    long passed = 0;
    // Lowest failing trial.
    long first_failure = -1;
    std::optional<json> counterexample;

    bool ok() const { return passed == trials; }
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckOutcome> checks;

    bool ok() const;
};

const std::vector<std::string> &suite_names();
std::vector<std::string> check_names(const std::string &suite);

SuiteReport run_suite(const std::string &suite, const VerifyOptions &opts);
CheckOutcome run_check(const std::string &suite, const std::string &check, const VerifyOptions &opts);

json to_json(const CheckOutcome &c);
json to_json(const SuiteReport &r);

} // namespace qkwc

#endif
