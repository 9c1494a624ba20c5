#include "support.hpp"

#include <functional>

#include "qkwc/perm.hpp"
#include "qkwc/randgen.hpp"

using namespace qkwc;

namespace {

SlotRing slot_ring(int novikov = 0, std::vector<RingSpec::TruncVar> extra = {})
{
    return make_slot_ring(make_ring({{"nu", 2}}, {"a", "b"}, 4, 4), novikov, std::move(extra));
}

RingElem base_gen(const SlotRing &sr, const char *name)
{
    return sr.slot_monomial(RingElem::generator(sr.base, name), 0);
}

// Sum over size-k multisets of `vectors` of the product of their entries.
RingElem multiset_oracle(const SlotRing &sr, const std::vector<RingElem> &vectors, int k)
{
    RingElem total = sr.zero();
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(pick.size()) == k) {
            RingElem prod = sr.one();
            for (auto i : pick) {
                prod *= vectors[i];
            }
            total += prod;
            return;
        }
        for (std::size_t i = start; i < vectors.size(); ++i) {
            pick.push_back(i);
            rec(i);
            pick.pop_back();
        }
    };
    rec(0);
    return total;
}

// Random graded slot element with rational coefficients.
SlotElem random_slot(gen::Rng &rng, const SlotRing &sr)
{
    SlotElem F = sr.zero();
    for (int i = gen::uniform_int(rng, 1, 3); i > 0; --i) {
        F += sr.slot_monomial(gen::random_elem(rng, sr.base, 2, 1), gen::uniform_int(rng, -2, 2),
                              gen::uniform_int(rng, 0, 1), gen::uniform_int(rng, -1, 1));
    }
    return F;
}

} // namespace

TEST_CASE("h_sym examples")
{
    const auto sr = slot_ring();
    const RingElem a = base_gen(sr, "a");
    const RingElem b = base_gen(sr, "b");
    const RingElem q = sr.slot_monomial(RingElem(sr.base, 1), 1);
    CHECK(h_sym(2, a * q) == a * a * q * q);
    CHECK(h_sym(2, a + b * q) == a * a + a * b * q + b * b * q * q);
    CHECK(h_sym(0, a + b) == sr.one());
    CHECK(extract_grade(sr, h_sym(2, a * q + b), 2, 0) == a * a);
    CHECK(extract_grade(sr, h_sym(2, a * q + b), 1, 0) == a * b);
    CHECK(extract_grade(sr, a * q, -1, 0).is_zero());
}

TEST_CASE("graded pieces of symmetric powers match multiset enumeration")
{
    const auto sr = slot_ring();
    gen::Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        // Line elements with positive integer multiplicities.
        std::vector<RingElem> vectors;
        SlotElem F = sr.zero();
        for (int i = gen::uniform_int(rng, 1, 3); i > 0; --i) {
            Monomial m;
            m.exps[sr.ring->require("a")] = gen::uniform_int(rng, -1, 1);
            m.exps[sr.q] = gen::uniform_int(rng, -2, 2);
            m.exps[sr.w] = gen::uniform_int(rng, 0, 1);
            const RingElem v = RingElem::monomial(sr.ring, m);
            for (int c = gen::uniform_int(rng, 1, 2); c > 0; --c) {
                vectors.push_back(v);
                F += v;
            }
        }
        for (int k = 0; k <= 3; ++k) {
            const auto oracle = multiset_oracle(sr, vectors, k);
            const auto h = h_sym(k, F);
            REQUIRE(h == oracle);
            for (int s = -6; s <= 6; ++s) {
                for (int w = 0; w <= 3; ++w) {
                    REQUIRE(extract_grade(sr, h, s, w) == extract_grade(sr, oracle, s, w));
                }
            }
        }
    }
}

TEST_CASE("multinomial identity for graded slot elements")
{
    const auto sr = slot_ring();
    gen::Rng rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const SlotElem F1 = random_slot(rng, sr);
        const SlotElem F2 = random_slot(rng, sr);
        const SlotElem F3 = random_slot(rng, sr);
        const auto h1 = h_syms(4, F1);
        const auto h2 = h_syms(4, F2);
        const auto h3 = h_syms(4, F3);
        const auto hs = h_syms(4, F1 + F2 + F3);
        for (int n = 0; n <= 4; ++n) {
            SlotElem rhs = sr.zero();
            for (int i = 0; i <= n; ++i) {
                for (int j = 0; i + j <= n; ++j) {
                    rhs += h1[static_cast<std::size_t>(i)] * h2[static_cast<std::size_t>(j)] *
                           h3[static_cast<std::size_t>(n - i - j)];
                }
            }
            REQUIRE(hs[static_cast<std::size_t>(n)] == rhs);
        }
    }
}

TEST_CASE("first-order expansion of h_k")
{
    const auto sr = slot_ring(0, {{"h", 2}});
    const RingElem hv = RingElem::generator(sr.ring, "h");
    gen::Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const SlotElem F = random_slot(rng, sr);
        const SlotElem delta = random_slot(rng, sr);
        for (int k = 1; k <= 4; ++k) {
            const auto lhs = h_sym(k, F + hv * delta) - h_sym(k, F);
            REQUIRE(lhs == hv * delta * h_sym(k - 1, F));
        }
    }
}

TEST_CASE("directional derivative")
{
    const auto sr = slot_ring(0, {{"h", 2}});
    const RingElem hv = RingElem::generator(sr.ring, "h");
    const auto base = sr.base;
    // T(f) = f(q) L, as a slot element.
    const LinearMap T = [&](const QLaurent &f) {
        SlotElem out = sr.zero();
        for (const auto &[e, c] : f.coeffs()) {
            out += sr.slot_monomial(c, e, 0, 1);
        }
        return out;
    };
    const LinearMap T2 = [&](const QLaurent &f) {
        SlotElem out = sr.zero();
        for (const auto &[e, c] : f.coeffs()) {
            out += sr.slot_monomial(c, 2 * e, 1, -1);
        }
        return out;
    };
    const RingElem a = RingElem::generator(base, "a");
    const QLaurent delta = QLaurent::monomial(a * Rational(3), 2);

    BracketExpr one(sr);
    one.add_term(BracketTerm{1, {SymFactor{1, 0, T}}});
    const auto d1 = directional_derivative(one, {delta});
    REQUIRE(d1.terms().size() == 1);
    QLaurent f(base);
    f.add_term(-1, RingElem(base, 2));
    f.add_term(1, a);
    CHECK(d1.evaluate({f}) == T(delta));

    BracketExpr two(sr);
    two.add_term(BracketTerm{1, {SymFactor{2, 0, T}}});
    CHECK(directional_derivative(two, {delta}).evaluate({f}) == T(delta) * h_sym(1, T(f)));

    BracketExpr other(sr);
    other.add_term(BracketTerm{1, {SymFactor{2, 1, T}}});
    CHECK(directional_derivative(other, {delta, QLaurent(base)}).evaluate({f, f}).is_zero());

    // Mixed polynomial against a first-order perturbation with h.
    BracketExpr expr(sr);
    expr.add_term(BracketTerm{Rational(2, 3), {SymFactor{3, 0, T}, SymFactor{2, 1, T2}}});
    expr.add_term(BracketTerm{-1, {SymFactor{1, 1, T}, FixedFactor{base_gen(sr, "b")}}});
    QLaurent g(base);
    g.add_term(0, RingElem::generator(base, "b"));
    g.add_term(2, RingElem(base, -1));
    const QLaurent dg = QLaurent::monomial(RingElem(base, 5), 1);
    const auto lift = [&](const QLaurent &x) {
        QLaurent y(sr.ring);
        for (const auto &[e, c] : x.coeffs()) {
            y.add_term(e, sr.lift(c));
        }
        return y;
    };
    const auto deriv = directional_derivative(expr, {delta, dg}).evaluate({f, g});
    // Numeric: evaluate with f + h delta, g + h dg, read off the h-coefficient.
    QLaurent fh = lift(f) + lift(delta) * hv;
    QLaurent gh = lift(g) + lift(dg) * hv;
    const LinearMap Tl = [&](const QLaurent &x) {
        SlotElem out = sr.zero();
        for (const auto &[e, c] : x.coeffs()) {
            Monomial m;
            m.exps[sr.q] = e;
            m.exps[sr.L] = 1;
            out += c * RingElem::monomial(sr.ring, m);
        }
        return out;
    };
    const LinearMap T2l = [&](const QLaurent &x) {
        SlotElem out = sr.zero();
        for (const auto &[e, c] : x.coeffs()) {
            Monomial m;
            m.exps[sr.q] = 2 * e;
            m.exps[sr.w] = 1;
            m.exps[sr.L] = -1;
            out += c * RingElem::monomial(sr.ring, m);
        }
        return out;
    };
    const SlotElem numeric = h_sym(3, Tl(fh)) * h_sym(2, T2l(gh)) * Rational(2, 3) - Tl(gh) * base_gen(sr, "b");
    const SlotElem plain = h_sym(3, Tl(lift(f))) * h_sym(2, T2l(lift(g))) * Rational(2, 3) -
                           Tl(lift(g)) * base_gen(sr, "b");
    CHECK(numeric - plain == hv * deriv);

    QLaurent two_terms(base);
    two_terms.add_term(0, a);
    two_terms.add_term(1, a);
    CHECK_THROWS_AS(directional_derivative(one, {two_terms}), invalid_input);
}

TEST_CASE("slot ring rejects clashing names")
{
    CHECK_THROWS_AS(make_slot_ring(make_ring({}, {"q"}), 1), invalid_input);
}
