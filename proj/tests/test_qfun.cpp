#include "support.hpp"

#include "qkwc/qfun.hpp"
#include "qkwc/randgen.hpp"

using namespace qkwc;

namespace {

struct Fixture {
    RingSpecPtr ring = make_ring({{"nu", 3}}, {"L", "M"});
    RingElem one{ring, 1};
    RingElem nu = RingElem::generator(ring, "nu");
    RingElem L = RingElem::generator(ring, "L");
    RingElem M = RingElem::generator(ring, "M");

    QLaurent q(int e = 1) const { return QLaurent::q(ring, e); }
    QLaurent c(const RingElem &x) const { return QLaurent(x); }
};

} // namespace

TEST_CASE("rational arithmetic")
{
    Fixture f;
    const auto a = QRational::pole(f.one, 1, f.L);
    CHECK((a + QRational::pole(-f.one, 1, f.L)) == QRational(f.ring));
    CHECK(QRational(f.q(1)) * QRational(f.q(-1)) == QRational(f.c(f.one)));
    const QRational num(f.c(f.one) - f.q(1) * f.c(f.L));
    CHECK(a * num == QRational(f.c(f.one)));
    CHECK_FALSE(a == QRational(f.c(f.one)));
}

TEST_CASE("negative exponent factors are normalized")
{
    Fixture f;
    const auto g = QRational::pole(f.one, -1, f.L);
    REQUIRE(g.den().size() == 1);
    CHECK(g.den()[0].a == 1);
    CHECK(g.den()[0].u == invert(f.L));
    // 1/(1 - q^{-1}L) * (1 - q^{-1}L) = 1.
    CHECK(g * QRational(f.c(f.one) - f.q(-1) * f.c(f.L)) == QRational(f.c(f.one)));
}

TEST_CASE("substitution")
{
    Fixture f;
    CHECK(substitute(f.q(1), 2, f.L) == f.q(2) * f.c(f.L));
    const RingElem P = f.one - f.nu;
    CHECK(substitute(QRational::pole(f.one, 1, P), 1, f.L) == QRational::pole(f.one, 1, f.L * P));
    const auto g = QRational::pole(f.one, -1, f.M);
    const auto s = substitute(g, -1, f.one);
    CHECK(s == QRational::pole(f.one, 1, f.M));
    // q -> q^{-1} reverses the orientation of dq/q.
    CHECK(residue(s) == -residue(g));
}

TEST_CASE("expansions")
{
    Fixture f;
    const auto a = QRational::pole(f.one, 1, f.L);
    CHECK(expand_at_zero(a, 2) == f.c(f.one) + f.q(1) * f.c(f.L) + f.q(2) * f.c(f.L * f.L));

    const RingElem g = f.one + f.nu * Rational(3);
    const auto b = QRational::pole(g, -1, f.L);
    const RingElem Li = invert(f.L);
    CHECK(expand_at_zero(b, 2) == -(f.q(1) * f.c(g * Li) + f.q(2) * f.c(g * Li * Li)));

    const QRational c(f.q(-1), {DenFactor{1, f.L, 1}});
    CHECK(expand_at_zero(c, 1) == f.q(-1) + f.c(f.L) + f.q(1) * f.c(f.L * f.L));

    CHECK(expand_at_infinity(a, 2) == -(f.q(1) * f.c(Li) + f.q(2) * f.c(Li * Li)));
    CHECK(expand_at_infinity(QRational(f.c(g)), 3) == f.c(g));
    CHECK(expand_at_infinity(QRational(f.q(1)), 3) == f.q(-1));
}

TEST_CASE("split examples")
{
    Fixture f;
    const RingElem g = f.one - f.nu;
    const auto s1 = split(QRational::pole(g, -1, f.L));
    CHECK(s1.plus == f.c(g));
    CHECK(s1.minus == QRational::pole(-g, 1, invert(f.L)));

    const auto p = f.q(-2) * f.c(f.L) + f.q(3) * f.c(f.nu);
    const auto s2 = split(QRational(p));
    CHECK(s2.plus == p);
    CHECK(s2.minus.num().is_zero());

    const auto s3 = split(QRational::pole(g, 1, f.L));
    CHECK(s3.plus.is_zero());
    CHECK(s3.minus == QRational::pole(g, 1, f.L));
}

TEST_CASE("residue examples")
{
    Fixture f;
    const QLaurent p = f.q(3) + f.c(f.one * Rational(5)) - f.q(-1) * f.c(f.one * Rational(2));
    CHECK(residue(QRational(p)).is_zero());
    const RingElem g = f.one + f.nu;
    CHECK(residue(QRational::pole(g, -1, f.L)) == -g);
    CHECK(residue(QRational::pole(g, 1, f.L)) == g);
}

TEST_CASE("residue properties on random inputs")
{
    auto ring = make_ring({{"nu", 3}}, {"L", "M"});
    gen::Rng rng(101);
    for (int i = 0; i < 300; ++i) {
        REQUIRE(residue(QRational(gen::random_laurent(rng, ring, -4, 4))).is_zero());
    }
    for (int i = 0; i < 150; ++i) {
        const auto fr = gen::random_qrational(rng, ring);
        int r = gen::uniform_int(rng, -3, 3);
        if (r == 0) {
            r = 1;
        }
        const auto u = gen::random_unit(rng, ring, 1);
        const auto res = residue(fr);
        REQUIRE((r > 0 ? res : -res) == residue(substitute(fr, r, u)));
        REQUIRE(res == residue_via_split(fr));
        const auto g = gen::random_qrational(rng, ring);
        const auto c = gen::random_elem(rng, ring, 2, 1);
        REQUIRE(residue(fr + g * c) == res + residue(g) * c);
    }
}

TEST_CASE("split round trip and properness")
{
    auto ring = make_ring({{"nu", 3}}, {"L", "M"});
    gen::Rng rng(202);
    for (int i = 0; i < 150; ++i) {
        const auto fr = gen::random_qrational(rng, ring);
        const auto s = split(fr);
        REQUIRE(QRational(s.plus) + s.minus == fr);
        REQUIRE(is_proper(s.minus));
        const auto z = split(s.minus);
        REQUIRE(z.plus.is_zero());
    }
}

TEST_CASE("residue of g over a pole at infinity, coefficientwise")
{
    // Res(g/(1 - q^{-1}L)) = -sum_{i>=1} [g]_{-i} L^{-i} - sum_{i>=0} [g(1/q)]_{-i} L^i,
    // with [h]_j the coefficient of q^j.
    auto ring = make_ring({{"nu", 3}}, {"L"});
    const RingElem L = RingElem::generator(ring, "L");
    gen::Rng rng(303);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = gen::random_laurent(rng, ring, -4, 4, 2, 1);
        const auto lhs = residue(QRational(g, {DenFactor{-1, L, 1}}));
        RingElem rhs(ring);
        for (const auto &[e, c] : g.coeffs()) {
            if (e <= -1) {
                rhs -= c * pow(L, e);
            }
            if (e >= 0) {
                // [g(1/q)]_{-i} = [g]_i.
                rhs -= c * pow(L, e);
            }
        }
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("negative projection")
{
    auto ring = make_ring({{"nu", 3}}, {"L", "M"});
    gen::Rng rng(404);
    for (int trial = 0; trial < 20; ++trial) {
        const auto h = gen::random_qrational(rng, ring);
        const auto expansion = expand_at_zero(split(h).minus, 24);
        for (int i = 0; i < 25; ++i) {
            REQUIRE(expansion.coeff(i) == residue(QRational(QLaurent::q(ring, -i)) * h));
        }
    }
}
