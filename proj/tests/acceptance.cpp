// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero when
// any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>

#include "qkwc/verify.hpp"

using namespace qkwc;

namespace {

using Clock = std::chrono::steady_clock;

struct Part {
    const char *suite;
    const char *check;
};

struct Criterion {
    int id;
    const char *title;
    std::vector<Part> parts;
    // Wall-clock limit in seconds, if the criterion has one.
    std::optional<double> limit;
};

bool report(int id, const char *title, bool ok, long passed, long trials, double seconds, std::optional<double> limit,
            const std::string &note = {})
{
    const bool in_time = !limit || seconds < *limit;
    const bool pass = ok && in_time;
    char timing[64];
    if (limit) {
        std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", seconds, *limit);
    } else {
        std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    }
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << title << " [" << passed << "/"
              << trials << " exact, " << timing << "]";
    if (!in_time) {
        std::cout << " over time limit";
    }
    if (!note.empty()) {
        std::cout << " " << note;
    }
    std::cout << std::endl;
    return pass;
}

bool run(const Criterion &c, const VerifyOptions &opts)
{
    const auto start = Clock::now();
    long passed = 0;
    long trials = 0;
    bool ok = true;
    std::string note;
    for (const auto &p : c.parts) {
        const auto out = run_check(p.suite, p.check, opts);
        passed += out.passed;
        trials += out.trials;
        if (!out.ok()) {
            ok = false;
            note += std::string("failed ") + p.suite + "/" + p.check + " at trial " + std::to_string(out.first_failure) + ";";
            if (out.counterexample) {
                std::cerr << p.suite << "/" << p.check << " counterexample:\n" << out.counterexample->dump(2) << "\n";
            }
        }
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report(c.id, c.title, ok, passed, trials, seconds, c.limit, note);
}

std::optional<std::string> capture(const std::string &command)
{
    std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) {
        return std::nullopt;
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) {
        out.append(buf.data(), n);
    }
    return out;
}

bool determinism(const std::string &qkwc)
{
    const auto start = Clock::now();
    const std::string cmd = qkwc + " verify all --seed 1 2>/dev/null";
    const auto a = capture(cmd);
    const auto b = capture(cmd);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool ok = a && b && !a->empty() && *a == *b;
    std::string note;
    if (a && !a->empty()) {
        note = json::parse(*a).value("ok", false) ? "(reports agree, all suites ok)" : "(reports agree, some suite failed)";
    }
    return report(11, "two full verify runs with the same seed give byte-identical reports", ok, ok ? 2 : 0, 2, seconds,
                  std::nullopt, ok ? note : "(reports differ or the run failed)");
}

} // namespace

int main(int argc, char **argv)
{
    const std::string qkwc = argc > 1 ? argv[1] : QKWC_BINARY;
    VerifyOptions opts;
    opts.seed = 1;
    opts.q_window = 3;
    opts.newton_max = 3;
    opts.weight_cutoff = 6;

    const std::vector<Criterion> criteria = {
        {1, "residue axioms: Res of Laurent polynomials vanishes; Res(f) = Res(f(q^r u)) for r >= 1, sign flip for r < 0",
         {{"residues", "laurent_vanishing"}, {"residues", "change_of_variable"}, {"residues", "orientation_reversal"}},
         10.0},
        {2, "constant-over-pole residues over Q[nu]/(nu^3)", {{"residues", "constant_over_pole"}}, std::nullopt},
        {3, "splitting f = [f]_+ + [f]_-, minus part proper", {{"split", "round_trip"}}, std::nullopt},
        {4, "negative projection: 25 coefficients of [h]_- are residues", {{"split", "negative_projection"}},
         std::nullopt},
        {5, "projective presets: q-difference recursion and vanishing mirror map",
         {{"wall", "q_difference"}, {"wall", "mirror_map_vanishes"}}, 5.0},
        {6, "genus-0 single-wall identity on P1, P2, P3 and P1-qtwist", {{"wall", "genus0_wall_identity"}},
         std::nullopt},
        {7, "Loc = Cor ledgers for m <= 3, |D| <= 2, r <= 2, 50 seeds each, with derivative cancellation",
         {{"loccor", "loc_eq_cor"}, {"loccor", "derivative_zero_lines"}, {"loccor", "derivative_infinity"}}, 60.0},
        {8, "lambda-ring laws: binomial, multinomial, first-order Leibniz",
         {{"lambda", "binomial"}, {"lambda", "multinomial"}, {"lambda", "leibniz_first_order"}}, std::nullopt},
        {9, "staircase identity, Koszul pushforward closed forms, generating identity",
         {{"inflated", "staircase"},
          {"inflated", "staircase_symbolic"},
          {"inflated", "koszul_pushforward"},
          {"inflated", "alpha_vanishing"},
          {"inflated", "generating_identity"}},
         30.0},
        {10, "telescoped single-wall transforms equal one mu substitution", {{"wall", "telescoping"}}, std::nullopt},
    };

    bool all = true;
    for (const auto &c : criteria) {
        all = run(c, opts) && all;
    }
    all = determinism(qkwc) && all;
    return all ? 0 : 1;
}
