#include "support.hpp"

#include <algorithm>
#include <set>

#include "qkwc/inflated.hpp"
#include "qkwc/randgen.hpp"

using namespace qkwc;

namespace {

std::vector<Rational> distinct_points(gen::Rng &rng, int r)
{
    std::set<Rational> seen;
    std::vector<Rational> x;
    while (static_cast<int>(x.size()) < r) {
        const Rational v = gen::nonzero_rational(rng, 7, 5);
        if (seen.insert(v).second) {
            x.push_back(v);
        }
    }
    return x;
}

} // namespace

TEST_CASE("staircase examples")
{
    const std::vector<Rational> x{2, Rational(-1, 3)};
    CHECK(staircase_sum(1, x) == x[0] + x[1]);
    CHECK(staircase_sum(-2, x) == -1 / (x[0] * x[1]));
    for (int r = 1; r <= 4; ++r) {
        std::vector<Rational> y;
        for (int i = 1; i <= r; ++i) {
            y.push_back(Rational(i + 1, 2));
        }
        CHECK(staircase_sum(0, y) == 1);
    }
    CHECK_THROWS_AS(staircase_sum(1, {1, 1}), invalid_input);
    CHECK_THROWS_AS(staircase_sum(1, {0, 1}), invalid_input);
}

TEST_CASE("staircase identity at random points")
{
    gen::Rng rng(71);
    for (int r = 1; r <= 5; ++r) {
        for (int s = -6; s <= 6; ++s) {
            for (int trial = 0; trial < 4; ++trial) {
                const auto x = distinct_points(rng, r);
                REQUIRE(staircase_sum(s, x) == staircase_closed_form(s, x));
            }
        }
    }
}

TEST_CASE("staircase identity symbolically")
{
    for (int r = 1; r <= 3; ++r) {
        for (int s = -4; s <= 4; ++s) {
            REQUIRE(staircase_symbolic(s, r));
        }
    }
}

TEST_CASE("Koszul reduction")
{
    const KoszulRing R(2);
    const RingElem t1 = R.theta(1), t2 = R.theta(2);
    const auto L2 = R.L_power(2);
    CHECK(L2[0] == -(t1 * t2));
    CHECK(L2[1] == t1 + t2);
    const auto Li = R.L_power(-1);
    const RingElem inv = invert(t1 * t2);
    CHECK(Li[0] == (t1 + t2) * inv);
    CHECK(Li[1] == -inv);
    CHECK(R.equal(R.multiply(Li, R.L_power(1)), R.constant(RingElem(R.theta_ring(), 1))));
    const auto L1 = R.L_power(1);
    CHECK(L1[0].is_zero());
    CHECK(L1[1] == RingElem(R.theta_ring(), 1));
    CHECK_THROWS_AS(KoszulRing(0), invalid_input);
}

TEST_CASE("pushforward examples")
{
    const KoszulRing R(2);
    CHECK(pushforward(R, 1) == R.theta(1) + R.theta(2));
    CHECK(pushforward(R, -1).is_zero());
    CHECK(pushforward(R, -2) == -invert(R.theta(1) * R.theta(2)));
}

TEST_CASE("pushforward closed forms and symmetry")
{
    for (int k = 1; k <= 4; ++k) {
        const KoszulRing R(k);
        for (int t = -6; t <= 6; ++t) {
            const RingElem p = pushforward(R, t);
            REQUIRE(p == pushforward_closed_form(R, t));
            // Swapping Theta_1 and Theta_2 fixes the result.
            if (k >= 2) {
                std::vector<Term> swapped;
                for (const auto &term : p.terms()) {
                    Term u = term;
                    std::swap(u.mono.exps[R.theta_ring()->require("Theta1")],
                              u.mono.exps[R.theta_ring()->require("Theta2")]);
                    swapped.push_back(u);
                }
                REQUIRE(RingElem::from_terms(R.theta_ring(), swapped) == p);
            }
        }
        for (int i = 1; i < k; ++i) {
            REQUIRE(R.pushforward(R.alpha(i)).is_zero());
        }
        REQUIRE(generating_identity(R));
    }
}
