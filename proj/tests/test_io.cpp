#include "support.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "qkwc/config.hpp"
#include "qkwc/randgen.hpp"
#include "qkwc/verify.hpp"

using namespace qkwc;

namespace {

std::string write_temp(const std::string &name, const std::string &text)
{
    const std::string path = "qkwc_test_" + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("rational and ring element JSON round-trip")
{
    CHECK(to_json(Rational(-3, 4)) == json("-3/4"));
    CHECK(rational_from_json(json(5)) == 5);
    CHECK(rational_from_json(json("6/8")) == Rational(3, 4));
    CHECK_THROWS_AS(rational_from_json(json(0.5)), invalid_input);
    CHECK_THROWS_AS(rational_from_json(json("1/0")), invalid_input);

    auto ring = make_ring({{"nu", 3}}, {"L"}, 3, 3, {{"t", 2}});
    CHECK(*ring_spec_from_json(to_json(*ring)) == *ring);
    gen::Rng rng(71);
    for (int i = 0; i < 100; ++i) {
        const auto a = gen::random_elem(rng, ring);
        REQUIRE(ring_elem_from_json(ring, to_json(a)) == a);
        const auto f = gen::random_qrational(rng, ring);
        REQUIRE(qrational_from_json(ring, to_json(f)) == f);
        const auto g = gen::random_laurent(rng, ring, -3, 3);
        REQUIRE(qlaurent_from_json(ring, to_json(g)) == g);
    }
}

TEST_CASE("JSON output is canonical")
{
    auto ring = make_ring({{"nu", 2}}, {"L"});
    const RingElem L = RingElem::generator(ring, "L");
    const RingElem nu = RingElem::generator(ring, "nu");
    CHECK(to_json(L + nu).dump() == to_json(nu + L).dump());
}

TEST_CASE("correlator series round-trip")
{
    auto ring = make_ring({{"nu", 2}});
    auto cone = std::make_shared<const ConeSpec>(std::vector<Rational>{1}, 3);
    CorrelatorSeries F(cone);
    F.register_label("t", QLaurent(RingElem(ring, 1)), {0});
    CorrelatorSymbol s;
    s.genus = 1;
    s.beta = {1};
    s.groups.push_back({"t", 2});
    F.add_term(s, Rational(2, 3));
    CHECK(correlator_series_from_json(ring, to_json(F)) == F);
}

TEST_CASE("hypergeometric spec from JSON matches the preset")
{
    const json j = json::parse(R"({
        "ring": {"nilpotent": [["nu", 2]]},
        "cone": {"weights": ["1"], "max_degree": "3"},
        "factors": [{"base": {"1": "1", "nu": "-1"}, "form": [1], "exponent": 2}]
    })");
    const auto spec = hypergeom_spec_from_json(j);
    CHECK(evaluate(spec, 3) == evaluate(preset_projective(2, 3), 3));
    CHECK_THROWS_AS(hypergeom_spec_from_json(json::parse(R"({"ring": {}})")), invalid_input);
}

TEST_CASE("config loading")
{
    const auto toml = write_temp("a.toml", R"(
preset = "P2"
max_degree = "3"
epsilon = "1/2"
seed = 9
[verify]
q_window = 2
)");
    RunConfig cfg;
    apply_config(cfg, load_config_file(toml));
    CHECK(*cfg.preset == "P2");
    CHECK(cfg.max_degree == 3);
    CHECK(*cfg.epsilon == Rational(1, 2));
    CHECK(cfg.seed == 9);
    CHECK(cfg.q_window == 2);
    CHECK(resolve_spec(cfg).projective_n == 3);

    const auto js = write_temp("b.json", R"({"preset": "P1", "max_degree": 2})");
    RunConfig c2;
    apply_config(c2, load_config_file(js));
    CHECK(c2.max_degree == 2);

    RunConfig c3;
    CHECK_THROWS_AS(apply_config(c3, load_config_file(write_temp("c.toml", "epsilon = 0.5\n"))), invalid_input);
    CHECK_THROWS_AS(apply_config(c3, load_config_file(write_temp("d.json", R"({"epsilon": 0.5})"))), invalid_input);
    CHECK_THROWS_AS(apply_config(c3, json::parse(R"({"colour": 1})")), invalid_input);
    CHECK_THROWS_AS(apply_config(c3, json::parse(R"({"verify": {"q_window": 0}})")), invalid_input);
    CHECK_THROWS_AS(load_config_file(write_temp("e.toml", "preset = \n")), invalid_input);
    CHECK_THROWS_AS(load_config_file("qkwc_test_missing.toml"), invalid_input);
    CHECK_THROWS_AS(load_config_file(write_temp("f.yaml", "")), invalid_input);

    RunConfig c4;
    c4.preset = "Q7";
    CHECK_THROWS_AS(resolve_spec(c4), invalid_input);
    for (const char *name : {"a.toml", "b.json", "c.toml", "d.json", "e.toml", "f.yaml"}) {
        std::remove((std::string("qkwc_test_") + name).c_str());
    }
}

TEST_CASE("verify reports are deterministic and detect faults")
{
    VerifyOptions opts;
    opts.seed = 3;
    opts.trials = 20;
    const auto a = to_json(run_suite("residues", opts)).dump();
    const auto b = to_json(run_suite("residues", opts)).dump();
    CHECK(a == b);
    CHECK(run_suite("residues", opts).ok());

    opts.inject_split_fault = true;
    const auto bad = run_check("split", "round_trip", opts);
    CHECK_FALSE(bad.ok());
    CHECK(bad.first_failure == 0);
    CHECK(bad.counterexample.has_value());
    CHECK_THROWS_AS(run_suite("nonsense", opts), invalid_input);
}

TEST_CASE("verify reports do not depend on the thread count")
{
    VerifyOptions opts;
    opts.seed = 4;
    opts.trials = 8;
    setenv("QKWC_THREADS", "1", 1);
    const auto one = to_json(run_suite("loccor", opts)).dump();
    setenv("QKWC_THREADS", "3", 1);
    const auto three = to_json(run_suite("loccor", opts)).dump();
    unsetenv("QKWC_THREADS");
    CHECK(one == three);
}
