#include "support.hpp"

#include "qkwc/kernels.hpp"
#include "qkwc/randgen.hpp"
#include "qkwc/ringcore.hpp"

using namespace qkwc;

namespace {

RingSpecPtr nu_ring(int n)
{
    return make_ring({{"nu", n}});
}

RingElem nu_of(const RingSpecPtr &r)
{
    return RingElem::generator(r, "nu");
}

} // namespace

TEST_CASE("products reduce by nilpotency and weight")
{
    auto r2 = nu_ring(2);
    CHECK((nu_of(r2) * nu_of(r2)).is_zero());

    auto r3 = nu_ring(3);
    const RingElem one(r3, 1);
    const RingElem nu = nu_of(r3);
    CHECK((one - nu) * (one + nu) == one - nu * nu);

    auto w3 = make_ring({}, {}, 3, 3);
    auto w2 = make_ring({}, {}, 3, 2);
    const auto p3 = RingElem::newton(w3, 1) * RingElem::newton(w3, 2);
    CHECK(to_string(p3) == "N1*N2");
    CHECK((RingElem::newton(w2, 1) * RingElem::newton(w2, 2)).is_zero());
}

TEST_CASE("ring axioms on random triples")
{
    auto spec = make_ring({{"nu", 3}}, {"L"}, 3, 3, {{"t", 2}});
    gen::Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const auto a = gen::random_elem(rng, spec);
        const auto b = gen::random_elem(rng, spec);
        const auto c = gen::random_elem(rng, spec);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE(a + b == b + a);
    }
}

TEST_CASE("mismatched rings are rejected")
{
    auto a = RingElem(nu_ring(2), 1);
    auto b = RingElem(nu_ring(3), 1);
    CHECK_THROWS_AS(a + b, spec_mismatch);
    CHECK_THROWS_AS(a * b, spec_mismatch);
}

TEST_CASE("invert")
{
    auto r3 = nu_ring(3);
    const RingElem one(r3, 1);
    const RingElem nu = nu_of(r3);
    CHECK(invert(one - nu) == one + nu + nu * nu);
    CHECK(invert(RingElem(r3, 2)) == RingElem(r3, Rational(1, 2)));
    CHECK_THROWS_AS(invert(nu), not_a_unit);
    CHECK_THROWS_AS(invert(RingElem(r3)), not_a_unit);

    auto rl = make_ring({{"nu", 2}}, {"L"});
    const RingElem L = RingElem::generator(rl, "L");
    const RingElem n2 = nu_of(rl);
    const RingElem onel(rl, 1);
    const RingElem inv = invert(L * (onel - n2));
    CHECK(inv == pow(L, -1) * (onel + n2));
    CHECK(inv * L * (onel - n2) == onel);

    auto spec = make_ring({{"nu", 3}}, {"L", "M"}, 2, 3, {{"t", 3}});
    gen::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto u = gen::random_unit(rng, spec);
        REQUIRE(is_unit(u));
        REQUIRE(u * invert(u) == RingElem(spec, 1));
        REQUIRE(invert(u) * u == RingElem(spec, 1));
    }
}

TEST_CASE("adams operations")
{
    auto w = make_ring({}, {}, 4, 4);
    CHECK(adams(2, RingElem::newton(w, 1)) == RingElem::newton(w, 2));
    CHECK(adams(3, RingElem::newton(w, 2)).is_zero());

    auto r3 = nu_ring(3);
    const RingElem nu = nu_of(r3);
    CHECK(adams(2, nu) == nu * Rational(2) - nu * nu);

    auto spec = make_ring({{"nu", 3}}, {"L"}, 12, 12, {{"t", 3}});
    gen::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto a = gen::random_elem(rng, spec);
        const auto b = gen::random_elem(rng, spec);
        REQUIRE(adams(1, a) == a);
        for (int r : {-2, -1, 2, 3}) {
            REQUIRE(adams(r, a * b) == adams(r, a) * adams(r, b));
            REQUIRE(adams(r, a + b) == adams(r, a) + adams(r, b));
        }
    }
    // Composition: keep Newton weight below the cutoff so no truncation is hit.
    auto small = make_ring({{"nu", 3}}, {"L"}, 12, 12, {{"t", 8}});
    for (int i = 0; i < 100; ++i) {
        RingElem a(small);
        const auto x = gen::random_elem(rng, small);
        for (const auto &t : x.terms()) {
            int weight = 0;
            for (int m = 1; m <= small->newton_max(); ++m) {
                weight += m * t.mono.exps[small->newton_offset() + static_cast<std::size_t>(m - 1)];
            }
            if (weight <= 2) {
                a += RingElem::monomial(small, t.mono, t.coeff);
            }
        }
        REQUIRE(adams(2, adams(3, a)) == adams(6, a));
        REQUIRE(adams(-1, adams(2, a)) == adams(-2, a));
    }
}

TEST_CASE("symmetric powers")
{
    auto w = make_ring({}, {"u"}, 4, 4);
    const RingElem N1 = RingElem::newton(w, 1);
    const RingElem N2 = RingElem::newton(w, 2);
    CHECK(sym_power(1, N1) == N1);
    CHECK(sym_power(2, N1) == (N1 * N1 + N2) * Rational(1, 2));
    const RingElem u = RingElem::generator(w, "u");
    CHECK(sym_power(2, u) == u * u);
    CHECK(sym_power(0, N1) == RingElem(w, 1));
}

TEST_CASE("binomial and multinomial laws for h_n")
{
    auto spec = make_ring({{"nu", 3}}, {"L"}, 5, 5);
    gen::Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = gen::random_elem(rng, spec, 3);
        const auto b = gen::random_elem(rng, spec, 3);
        const auto ha = sym_powers(5, a);
        const auto hb = sym_powers(5, b);
        const auto hab = sym_powers(5, a + b);
        for (int n = 0; n <= 5; ++n) {
            RingElem rhs(spec);
            for (int i = 0; i <= n; ++i) {
                rhs += ha[static_cast<std::size_t>(i)] * hb[static_cast<std::size_t>(n - i)];
            }
            REQUIRE(hab[static_cast<std::size_t>(n)] == rhs);
        }
        const auto c = gen::random_elem(rng, spec, 3);
        const auto hc = sym_powers(4, c);
        const auto habc = sym_powers(4, a + b + c);
        for (int n = 0; n <= 4; ++n) {
            RingElem rhs(spec);
            for (int i = 0; i <= n; ++i) {
                for (int j = 0; i + j <= n; ++j) {
                    rhs += ha[static_cast<std::size_t>(i)] * hb[static_cast<std::size_t>(j)] *
                           hc[static_cast<std::size_t>(n - i - j)];
                }
            }
            REQUIRE(habc[static_cast<std::size_t>(n)] == rhs);
        }
    }
}

TEST_CASE("euler class")
{
    auto rl = make_ring({{"nu", 2}}, {"L"});
    const RingElem L = RingElem::generator(rl, "L");
    const RingElem one(rl, 1);
    const std::vector<RingElem> single{L};
    CHECK(euler_class(single) == one - pow(L, -1));
    CHECK(euler_class(rl, {}) == one);
    const RingElem P = one - RingElem::generator(rl, "nu");
    const std::vector<RingElem> two{P, P};
    CHECK(euler_class(two).is_zero());
    const std::vector<RingElem> bad{RingElem::generator(rl, "nu")};
    CHECK_THROWS_AS(euler_class(bad), not_a_unit);

    auto spec = make_ring({{"nu", 3}}, {"L", "M"});
    gen::Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        std::vector<RingElem> A, B;
        for (int j = gen::uniform_int(rng, 0, 2); j > 0; --j) {
            A.push_back(gen::random_unit(rng, spec));
        }
        for (int j = gen::uniform_int(rng, 0, 2); j > 0; --j) {
            B.push_back(gen::random_unit(rng, spec));
        }
        std::vector<RingElem> AB = A;
        AB.insert(AB.end(), B.begin(), B.end());
        REQUIRE(euler_class(spec, AB) == euler_class(spec, A) * euler_class(spec, B));
    }
}

TEST_CASE("twist class")
{
    auto spec = make_ring({}, {"L", "u"}, 0, 0, {{"tp", 3}});
    TwistData det_only;
    det_only.det = {{"L", 1}};
    det_only.level = 1;
    CHECK(twist_class(spec, det_only) == pow(RingElem::generator(spec, "L"), -1));
    CHECK(twist_class(spec, TwistData{}) == RingElem(spec, 1));

    const RingElem tp = RingElem::generator(spec, "tp");
    const RingElem u = RingElem::generator(spec, "u");
    TwistData e;
    e.summands.push_back({1, tp * u});
    CHECK(twist_class(spec, e) == RingElem(spec, 1) + tp * u + tp * tp * u * u * Rational(1, 2));

    TwistData bad;
    bad.summands.push_back({1, u});
    CHECK_THROWS_AS(twist_class(spec, bad), invalid_input);
}

TEST_CASE("euler characteristic on projective presets")
{
    for (int n = 2; n <= 5; ++n) {
        auto r = nu_ring(n);
        const auto chi = ChiPreset::projective(*r, "nu");
        const RingElem P = RingElem(r, 1) - nu_of(r);
        // Hilbert polynomial oracle: chi(O(-m)) = C(n-1-m, n-1).
        for (int m = 0; m <= 2 * n; ++m) {
            REQUIRE(euler_char(pow(P, m), chi) == RingElem(r, binomial(n - 1 - m, n - 1)));
        }
    }
    auto r = nu_ring(2);
    const auto chi = ChiPreset::projective(*r, "nu");
    const RingElem one(r, 1);
    CHECK(euler_char(one, chi) == one);
    CHECK(euler_char(one - nu_of(r), chi).is_zero());
    CHECK(mukai_pairing(one, one, chi) == one);

    auto rl = make_ring({{"nu", 2}}, {"L"});
    CHECK_THROWS_AS(euler_char(RingElem::generator(rl, "L"), ChiPreset::projective(*rl, "nu")), invalid_input);
}

TEST_CASE("parallel and serial product kernels agree")
{
    auto spec = make_ring({{"nu", 4}}, {"L", "M"}, 4, 6, {{"t", 3}});
    gen::Rng rng(17);
    for (int i = 0; i < 10; ++i) {
        RingElem a(spec), b(spec);
        for (int j = 0; j < 20; ++j) {
            a += gen::random_elem(rng, spec, 6, 4);
            b += gen::random_elem(rng, spec, 6, 4);
        }
        const auto s = kernels::multiply_serial(*spec, a.terms(), b.terms());
        const auto p = kernels::multiply_parallel(*spec, a.terms(), b.terms());
        REQUIRE(RingElem::from_terms(spec, s) == RingElem::from_terms(spec, p));
    }
}

TEST_CASE("monomial keys round-trip")
{
    auto spec = make_ring({{"nu", 3}}, {"L"}, 2, 3, {{"t", 2}});
    gen::Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        const auto x = gen::random_elem(rng, spec);
        for (const auto &t : x.terms()) {
            REQUIRE(parse_monomial_key(*spec, monomial_key(*spec, t.mono)) == t.mono);
        }
    }
    CHECK_THROWS_AS(parse_monomial_key(*spec, "x^2"), invalid_input);
}
