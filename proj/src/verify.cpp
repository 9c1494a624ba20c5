#include "qkwc/verify.hpp"

#include <functional>
#include <map>
#include <set>

#include "qkwc/inflated.hpp"
#include "qkwc/kernels.hpp"
#include "qkwc/randgen.hpp"

namespace qkwc {

namespace {

using Trial = std::function<std::optional<json>(long index, gen::Rng &rng, const VerifyOptions &opts)>;

struct CheckDef {
    std::string name;
    std::string statement;
    // Randomized checks honour --trials; grid checks have a fixed size.
    long default_trials;
    bool grid;
    Trial body;
};

std::optional<json> fail(json detail)
{
    return detail;
}

// ---------------------------------------------------------------------------
// Shared rings and helpers.

RingSpecPtr residue_ring()
{
    static const RingSpecPtr r = make_ring({{"nu", 3}}, {"L", "M"});
    return r;
}

RingSpecPtr lambda_ring()
{
    static const RingSpecPtr r = make_ring({{"nu", 3}}, {"L"}, 5, 5, {{"t", 2}});
    return r;
}

int nonzero_r(gen::Rng &rng, int lo, int hi)
{
    for (;;) {
        const int r = gen::uniform_int(rng, lo, hi);
        if (r != 0) {
            return r;
        }
    }
}

Split checked_split(const QRational &f, const VerifyOptions &opts)
{
    Split s = split(f);
    if (opts.inject_split_fault) {
        s.plus += QLaurent(RingElem(f.spec(), 1));
    }
    return s;
}

json pair_json(const RingElem &lhs, const RingElem &rhs)
{
    return {{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
}

// ---------------------------------------------------------------------------
// residues

std::vector<CheckDef> residue_checks()
{
    std::vector<CheckDef> out;
    out.push_back({"laurent_vanishing", "Res(g) = 0 for every Laurent polynomial g", 1000, false,
                   [](long, gen::Rng &rng, const VerifyOptions &opts) -> std::optional<json> {
                       const auto g = gen::random_laurent(rng, residue_ring(), -opts.q_window - 2, opts.q_window + 2);
                       const auto res = residue(QRational(g));
                       if (!res.is_zero()) {
                           return fail({{"g", to_json(g)}, {"residue", to_json(res)}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"change_of_variable", "Res(f(q)) = Res(f(q^r u)) for r >= 1 and units u", 500, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       const auto f = gen::random_qrational(rng, residue_ring());
                       const int r = gen::uniform_int(rng, 1, 3);
                       const auto u = gen::random_unit(rng, residue_ring(), 1);
                       const auto a = residue(f);
                       const auto b = residue(substitute(f, r, u));
                       if (!(a == b)) {
                           return fail({{"f", to_json(f)}, {"r", r}, {"u", to_json(u)}, {"residues", pair_json(a, b)}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"orientation_reversal", "Res(f(q^r u)) = -Res(f(q)) for r <= -1", 200, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       const auto f = gen::random_qrational(rng, residue_ring());
                       const int r = gen::uniform_int(rng, -3, -1);
                       const auto u = gen::random_unit(rng, residue_ring(), 1);
                       const auto a = -residue(f);
                       const auto b = residue(substitute(f, r, u));
                       if (!(a == b)) {
                           return fail({{"f", to_json(f)}, {"r", r}, {"u", to_json(u)}, {"residues", pair_json(a, b)}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"constant_over_pole", "Res(g/(1 - q^{-1}L)) = -g and Res(g/(1 - qL)) = g", 200, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       const auto ring = residue_ring();
                       const auto g = gen::random_elem(rng, ring, 4, 2);
                       const RingElem L = RingElem::generator(ring, "L");
                       const auto a = residue(QRational::pole(g, -1, L));
                       const auto b = residue(QRational::pole(g, 1, L));
                       if (!(a == -g) || !(b == g)) {
                           return fail({{"g", to_json(g)}, {"at_infinity", to_json(a)}, {"at_zero", to_json(b)}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"two_definitions", "Res(f) from the two expansions equals the minus part at q = 0", 200, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       const auto f = gen::random_qrational(rng, residue_ring());
                       const auto a = residue(f);
                       const auto b = residue_via_split(f);
                       if (!(a == b)) {
                           return fail({{"f", to_json(f)}, {"residues", pair_json(a, b)}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"linearity", "Res(f + c g) = Res(f) + c Res(g)", 200, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       const auto ring = residue_ring();
                       const auto f = gen::random_qrational(rng, ring);
                       const auto g = gen::random_qrational(rng, ring);
                       const auto c = gen::random_elem(rng, ring, 2, 1);
                       const auto a = residue(f + g * c);
                       const auto b = residue(f) + residue(g) * c;
                       if (!(a == b)) {
                           return fail({{"f", to_json(f)}, {"g", to_json(g)}, {"c", to_json(c)}, {"residues", pair_json(a, b)}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"pole_at_infinity_series",
                   "Res(g(q)/(1 - q^{-1}L)) = -g(L) for Laurent polynomials g", 200, false,
                   [](long, gen::Rng &rng, const VerifyOptions &opts) -> std::optional<json> {
                       const auto ring = make_ring({{"nu", 3}}, {"L"});
                       const RingElem L = RingElem::generator(ring, "L");
                       const auto g = gen::random_laurent(rng, ring, -opts.q_window - 1, opts.q_window + 1, 2, 1);
                       const auto lhs = residue(QRational(g, {DenFactor{-1, L, 1}}));
                       RingElem rhs(ring);
                       for (const auto &[e, c] : g.coeffs()) {
                           rhs -= c * pow(L, e);
                       }
                       if (!(lhs == rhs)) {
                           return fail({{"g", to_json(g)}, {"residues", pair_json(lhs, rhs)}});
                       }
                       return std::nullopt;
                   }});
    return out;
}

// ---------------------------------------------------------------------------
// split

std::vector<std::string> preset_names()
{
    return {"P1", "P2", "P3", "P1-qtwist", "P2-qtwist"};
}

std::vector<CheckDef> split_checks()
{
    std::vector<CheckDef> out;
    out.push_back({"round_trip", "f = [f]_+ + [f]_- with [f]_- regular at 0 and vanishing at infinity", 500, false,
                   [](long, gen::Rng &rng, const VerifyOptions &opts) -> std::optional<json> {
                       const auto f = gen::random_qrational(rng, residue_ring(), 3);
                       const auto s = checked_split(f, opts);
                       const bool recombines = QRational(s.plus) + s.minus == f;
                       const bool proper = is_proper(s.minus);
                       if (!recombines || !proper) {
                           return fail({{"f", to_json(f)},
                                        {"plus", to_json(s.plus)},
                                        {"minus", to_json(s.minus)},
                                        {"recombines", recombines},
                                        {"proper", proper}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"negative_projection", "the first 25 coefficients of [h]_- at q = 0 are Res(q^{-i} h)", 200, false,
                   [](long, gen::Rng &rng, const VerifyOptions &opts) -> std::optional<json> {
                       const auto ring = residue_ring();
                       const auto h = gen::random_qrational(rng, ring, 3);
                       const auto ex = expand_at_zero(checked_split(h, opts).minus, 24);
                       for (int i = 0; i < 25; ++i) {
                           const auto res = residue(QRational(QLaurent::q(ring, -i)) * h);
                           if (!(ex.coeff(i) == res)) {
                               return fail({{"h", to_json(h)}, {"i", i}, {"values", pair_json(ex.coeff(i), res)}});
                           }
                       }
                       return std::nullopt;
                   }});
    out.push_back({"preset_mu", "(1 - q) I_beta = mu_beta + [(1 - q) I_beta]_- on every preset, degree <= 4", 20, true,
                   [](long index, gen::Rng &, const VerifyOptions &opts) -> std::optional<json> {
                       const auto names = preset_names();
                       const auto &name = names[static_cast<std::size_t>(index / 4)];
                       const int d = static_cast<int>(index % 4) + 1;
                       const auto I = evaluate(preset_by_name(name, 4), 4);
                       const QRational f = QRational(one_minus_q(I.ring())) * I.coeff({d});
                       const auto s = checked_split(f, opts);
                       const auto mu = mu_beta(I, {d});
                       const bool ok = s.plus == mu && QRational(mu) + s.minus == f && is_proper(s.minus);
                       if (!ok) {
                           return fail({{"preset", name}, {"degree", d}, {"plus", to_json(s.plus)}, {"mu", to_json(mu)}});
                       }
                       return std::nullopt;
                   }});
    return out;
}

// ---------------------------------------------------------------------------
// lambda

RingElem newton_bounded(const RingElem &a, int max_weight)
{
    const auto &spec = a.spec();
    std::vector<Term> keep;
    for (const auto &t : a.terms()) {
        int weight = 0;
        for (int m = 1; m <= spec->newton_max(); ++m) {
            weight += m * t.mono.exps[spec->newton_offset() + static_cast<std::size_t>(m - 1)];
        }
        if (weight <= max_weight) {
            keep.push_back(t);
        }
    }
    return RingElem::from_terms(spec, std::move(keep));
}

std::vector<CheckDef> lambda_checks()
{
    std::vector<CheckDef> out;
    out.push_back({"ring_axioms", "associativity, commutativity and distributivity", 1000, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       const auto spec = lambda_ring();
                       const auto a = gen::random_elem(rng, spec);
                       const auto b = gen::random_elem(rng, spec);
                       const auto c = gen::random_elem(rng, spec);
                       if (!((a * b) * c == a * (b * c)) || !(a * (b + c) == a * b + a * c) || !(a * b == b * a)) {
                           return fail({{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"invert", "u invert(u) = invert(u) u = 1 for units u", 200, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       const auto spec = lambda_ring();
                       const auto u = gen::random_unit(rng, spec);
                       const auto v = invert(u);
                       if (!(u * v == RingElem(spec, 1)) || !(v * u == RingElem(spec, 1))) {
                           return fail({{"u", to_json(u)}, {"inverse", to_json(v)}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"adams_homomorphism", "Psi^r(ab) = Psi^r(a) Psi^r(b) and Psi^r(a + b) = Psi^r(a) + Psi^r(b)", 200, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       const auto spec = lambda_ring();
                       const auto a = gen::random_elem(rng, spec);
                       const auto b = gen::random_elem(rng, spec);
                       const int r = nonzero_r(rng, -3, 3);
                       if (!(adams(r, a * b) == adams(r, a) * adams(r, b)) || !(adams(r, a + b) == adams(r, a) + adams(r, b))) {
                           return fail({{"a", to_json(a)}, {"b", to_json(b)}, {"r", r}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"adams_composition", "Psi^r Psi^s = Psi^{rs} away from the weight cutoff", 200, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       // M = W = 12, inputs of Newton weight <= 2, |rs| <= 6.
                       static const auto spec = make_ring({{"nu", 3}}, {"L"}, 12, 12, {{"t", 8}});
                       const auto a = newton_bounded(gen::random_elem(rng, spec), 2);
                       const int r = nonzero_r(rng, -3, 3);
                       const int s = nonzero_r(rng, -2, 2);
                       if (!(adams(r, adams(s, a)) == adams(r * s, a))) {
                           return fail({{"a", to_json(a)}, {"r", r}, {"s", s}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"binomial", "h_n(a + b) = sum_{i+j=n} h_i(a) h_j(b), n <= 5", 50, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       const auto spec = lambda_ring();
                       const auto a = gen::random_elem(rng, spec, 3);
                       const auto b = gen::random_elem(rng, spec, 3);
                       const auto ha = sym_powers(5, a);
                       const auto hb = sym_powers(5, b);
                       const auto hab = sym_powers(5, a + b);
                       for (std::size_t n = 0; n <= 5; ++n) {
                           RingElem rhs(spec);
                           for (std::size_t i = 0; i <= n; ++i) {
                               rhs += ha[i] * hb[n - i];
                           }
                           if (!(hab[n] == rhs)) {
                               return fail({{"a", to_json(a)}, {"b", to_json(b)}, {"n", n}});
                           }
                       }
                       return std::nullopt;
                   }});
    out.push_back({"multinomial", "h_n(a_1 + .. + a_m) = sum prod h_{k_i}(a_i), m <= 3, n <= 4", 30, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       const auto spec = lambda_ring();
                       const int m = gen::uniform_int(rng, 1, 3);
                       std::vector<RingElem> parts;
                       RingElem sum(spec);
                       for (int i = 0; i < m; ++i) {
                           parts.push_back(gen::random_elem(rng, spec, 3));
                           sum += parts.back();
                       }
                       std::vector<std::vector<RingElem>> h;
                       for (const auto &p : parts) {
                           h.push_back(sym_powers(4, p));
                       }
                       const auto hs = sym_powers(4, sum);
                       for (int n = 0; n <= 4; ++n) {
                           RingElem rhs(spec);
                           std::vector<int> k(static_cast<std::size_t>(m), 0);
                           std::function<void(int, int, RingElem)> rec = [&](int i, int left, RingElem prod) {
                               if (i == m - 1) {
                                   rhs += prod * h[static_cast<std::size_t>(i)][static_cast<std::size_t>(left)];
                                   return;
                               }
                               for (int c = 0; c <= left; ++c) {
                                   rec(i + 1, left - c, prod * h[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
                               }
                           };
                           rec(0, n, RingElem(spec, 1));
                           if (!(hs[static_cast<std::size_t>(n)] == rhs)) {
                               json ps = json::array();
                               for (const auto &p : parts) {
                                   ps.push_back(to_json(p));
                               }
                               return fail({{"parts", ps}, {"n", n}});
                           }
                       }
                       return std::nullopt;
                   }});
    out.push_back({"euler_multiplicative", "lambda_{-1}(A + B) = lambda_{-1}(A) lambda_{-1}(B)", 100, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       const auto spec = residue_ring();
                       std::vector<RingElem> A, B;
                       for (int j = gen::uniform_int(rng, 0, 2); j > 0; --j) {
                           A.push_back(gen::random_unit(rng, spec));
                       }
                       for (int j = gen::uniform_int(rng, 0, 2); j > 0; --j) {
                           B.push_back(gen::random_unit(rng, spec));
                       }
                       auto AB = A;
                       AB.insert(AB.end(), B.begin(), B.end());
                       if (!(euler_class(spec, AB) == euler_class(spec, A) * euler_class(spec, B))) {
                           return fail({{"sizes", {A.size(), B.size()}}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"leibniz_first_order", "h_k(F + h delta) = h_k(F) + h delta h_{k-1}(F) with h^2 = 0, k <= 4", 50, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       static const auto sr = make_slot_ring(make_ring({{"nu", 2}}, {"a"}, 4, 4), 0, {{"h", 2}});
                       const RingElem hv = RingElem::generator(sr.ring, "h");
                       auto slot = [&]() {
                           SlotElem F = sr.zero();
                           for (int i = gen::uniform_int(rng, 1, 3); i > 0; --i) {
                               F += sr.slot_monomial(gen::random_elem(rng, sr.base, 2, 1), gen::uniform_int(rng, -2, 2),
                                                     gen::uniform_int(rng, 0, 1), gen::uniform_int(rng, -1, 1));
                           }
                           return F;
                       };
                       const SlotElem F = slot();
                       const SlotElem delta = slot();
                       for (int k = 1; k <= 4; ++k) {
                           if (!(h_sym(k, F + hv * delta) - h_sym(k, F) == hv * delta * h_sym(k - 1, F))) {
                               return fail({{"F", to_json(F)}, {"delta", to_json(delta)}, {"k", k}});
                           }
                       }
                       return std::nullopt;
                   }});
    out.push_back({"graded_invariants", "graded pieces of h_k(F) match explicit multiset enumeration, k <= 3", 30, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       static const auto sr = make_slot_ring(make_ring({}, {"a"}), 0);
                       std::vector<RingElem> vectors;
                       SlotElem F = sr.zero();
                       for (int i = gen::uniform_int(rng, 1, 3); i > 0; --i) {
                           Monomial m;
                           m.exps[sr.ring->require("a")] = gen::uniform_int(rng, -1, 1);
                           m.exps[sr.q] = gen::uniform_int(rng, -2, 2);
                           const RingElem v = RingElem::monomial(sr.ring, m);
                           for (int c = gen::uniform_int(rng, 1, 2); c > 0; --c) {
                               vectors.push_back(v);
                               F += v;
                           }
                       }
                       for (int k = 0; k <= 3; ++k) {
                           RingElem oracle = sr.zero();
                           std::vector<std::size_t> pick;
                           std::function<void(std::size_t)> rec = [&](std::size_t start) {
                               if (static_cast<int>(pick.size()) == k) {
                                   RingElem prod = sr.one();
                                   for (auto i : pick) {
                                       prod *= vectors[i];
                                   }
                                   oracle += prod;
                                   return;
                               }
                               for (std::size_t i = start; i < vectors.size(); ++i) {
                                   pick.push_back(i);
                                   rec(i);
                                   pick.pop_back();
                               }
                           };
                           rec(0);
                           const auto h = h_sym(k, F);
                           for (int s = -3 * 2; s <= 3 * 2; ++s) {
                               if (!(extract_grade(sr, h, s, 0) == extract_grade(sr, oracle, s, 0))) {
                                   return fail({{"F", to_json(F)}, {"k", k}, {"grade", s}});
                               }
                           }
                       }
                       return std::nullopt;
                   }});
    return out;
}

// ---------------------------------------------------------------------------
// loccor

struct LocCorConfig {
    int m;
    int classes;
    int r;
};

const std::vector<LocCorConfig> &loccor_configs()
{
    static const std::vector<LocCorConfig> configs = [] {
        std::vector<LocCorConfig> c;
        for (int m = 1; m <= 3; ++m) {
            for (int n = 1; n <= 2; ++n) {
                for (int r = 1; r <= 2; ++r) {
                    c.push_back({m, n, r});
                }
            }
        }
        return c;
    }();
    return configs;
}

RingSpecPtr loccor_ring(const VerifyOptions &opts)
{
    return make_ring({{"nu", 2}}, {}, opts.newton_max, opts.weight_cutoff);
}

json wall_input_json(const WallInput &in)
{
    json g0 = json::array(), gi = json::array();
    for (const auto &f : in.g0) {
        g0.push_back(to_json(f));
    }
    for (const auto &f : in.ginf) {
        gi.push_back(to_json(f));
    }
    return {{"ring", to_json(*in.ring)}, {"m", in.m}, {"r", in.r}, {"g0", g0}, {"ginf", gi}};
}

std::vector<CheckDef> loccor_checks()
{
    std::vector<CheckDef> out;
    out.push_back({"loc_eq_cor", "Loc = Cor as ledgers for m <= 3, |D| <= 2, r <= 2", 50, false,
                   [](long index, gen::Rng &rng, const VerifyOptions &opts) -> std::optional<json> {
                       const auto &cfg = loccor_configs()[static_cast<std::size_t>(index) % loccor_configs().size()];
                       const auto in = gen::random_wall_input(rng, loccor_ring(opts), cfg.m, cfg.classes, cfg.r, opts.q_window);
                       const auto rep = verify_loc_eq_cor(in);
                       if (!rep.equal) {
                           return fail({{"input", wall_input_json(in)}, {"diff", to_json(rep.diff)}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"derivative_zero_lines",
                   "the g0-direction derivative of Loc splits into four lines cancelling in pairs, and Cor does not move",
                   24, false,
                   [](long index, gen::Rng &rng, const VerifyOptions &opts) -> std::optional<json> {
                       const auto &cfg = loccor_configs()[static_cast<std::size_t>(index) % loccor_configs().size()];
                       const auto ring = loccor_ring(opts);
                       const auto in = gen::random_wall_input(rng, ring, cfg.m, cfg.classes, cfg.r, opts.q_window);
                       std::vector<RingElem> delta;
                       std::vector<int> l;
                       for (int i = 0; i < cfg.classes; ++i) {
                           delta.push_back(RingElem(ring, gen::nonzero_rational(rng)));
                           l.push_back(gen::uniform_int(rng, 0, 2));
                       }
                       const auto lines = derivative_lines_zero(in, delta, l);
                       const bool sum = lines.numeric_loc == lines.line1 + lines.line2 + lines.line3 + lines.line4;
                       const bool first = (lines.line1 + lines.line2).is_zero();
                       const bool second = (lines.line3 + lines.line4).is_zero();
                       const bool cor = lines.numeric_cor.is_zero();
                       if (!sum || !first || !second || !cor) {
                           return fail({{"input", wall_input_json(in)},
                                        {"l", l},
                                        {"lines_sum_to_derivative", sum},
                                        {"lines_1_2_cancel", first},
                                        {"lines_3_4_cancel", second},
                                        {"cor_constant", cor}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"derivative_infinity", "Loc - Cor does not move along ginf + delta q^l, l > 0", 24, false,
                   [](long index, gen::Rng &rng, const VerifyOptions &opts) -> std::optional<json> {
                       const auto &cfg = loccor_configs()[static_cast<std::size_t>(index) % loccor_configs().size()];
                       const auto ring = loccor_ring(opts);
                       const auto in = gen::random_wall_input(rng, ring, cfg.m, cfg.classes, cfg.r, opts.q_window);
                       std::vector<RingElem> delta;
                       std::vector<int> l;
                       for (int i = 0; i < cfg.classes; ++i) {
                           delta.push_back(RingElem(ring, gen::nonzero_rational(rng)));
                           l.push_back(gen::uniform_int(rng, 1, 2));
                       }
                       const auto d = derivative_infinity(in, delta, l);
                       if (!d.is_zero()) {
                           return fail({{"input", wall_input_json(in)}, {"l", l}, {"derivative", to_json(d)}});
                       }
                       return std::nullopt;
                   }});
    return out;
}

// ---------------------------------------------------------------------------
// inflated

std::vector<CheckDef> inflated_checks()
{
    std::vector<CheckDef> out;
    out.push_back({"staircase", "staircase sum = closed form, r <= 5, -6 <= s <= 6, 20 points each", 5 * 13 * 20, true,
                   [](long index, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       const int r = static_cast<int>(index / (13 * 20)) + 1;
                       const int s = static_cast<int>((index / 20) % 13) - 6;
                       std::set<Rational> seen;
                       std::vector<Rational> x;
                       while (static_cast<int>(x.size()) < r) {
                           const Rational v = gen::nonzero_rational(rng, 9, 7);
                           if (seen.insert(v).second) {
                               x.push_back(v);
                           }
                       }
                       const auto a = staircase_sum(s, x);
                       const auto b = staircase_closed_form(s, x);
                       if (a != b) {
                           json xs = json::array();
                           for (const auto &v : x) {
                               xs.push_back(to_json(v));
                           }
                           return fail({{"r", r}, {"s", s}, {"x", xs}, {"sum", to_json(a)}, {"closed_form", to_json(b)}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"staircase_symbolic", "staircase identity over Q[x^{+-1}] times the Vandermonde, r <= 3", 3 * 13, true,
                   [](long index, gen::Rng &, const VerifyOptions &) -> std::optional<json> {
                       const int r = static_cast<int>(index / 13) + 1;
                       const int s = static_cast<int>(index % 13) - 6;
                       if (!staircase_symbolic(s, r)) {
                           return fail({{"r", r}, {"s", s}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"koszul_pushforward", "p_*(L^t) by Koszul reduction = closed form and is S_k-symmetric, k <= 4, |t| <= 6",
                   4 * 13, true,
                   [](long index, gen::Rng &, const VerifyOptions &) -> std::optional<json> {
                       const int k = static_cast<int>(index / 13) + 1;
                       const int t = static_cast<int>(index % 13) - 6;
                       const KoszulRing R(k);
                       const auto p = pushforward(R, t);
                       const auto c = pushforward_closed_form(R, t);
                       bool symmetric = true;
                       if (k >= 2) {
                           std::vector<Term> swapped;
                           const auto i1 = R.theta_ring()->require("Theta1");
                           const auto ik = R.theta_ring()->require("Theta" + std::to_string(k));
                           for (const auto &term : p.terms()) {
                               Term u = term;
                               std::swap(u.mono.exps[i1], u.mono.exps[ik]);
                               swapped.push_back(u);
                           }
                           symmetric = RingElem::from_terms(R.theta_ring(), swapped) == p;
                       }
                       if (!(p == c) || !symmetric) {
                           return fail({{"k", k}, {"t", t}, {"koszul", to_json(p)}, {"closed_form", to_json(c)}, {"symmetric", symmetric}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"alpha_vanishing", "p_*(alpha_i) = 0 for 1 <= i <= k - 1, k <= 4", 4, true,
                   [](long index, gen::Rng &, const VerifyOptions &) -> std::optional<json> {
                       const int k = static_cast<int>(index) + 1;
                       const KoszulRing R(k);
                       for (int i = 1; i < k; ++i) {
                           const auto v = R.pushforward(R.alpha(i));
                           if (!v.is_zero()) {
                               return fail({{"k", k}, {"i", i}, {"value", to_json(v)}});
                           }
                       }
                       return std::nullopt;
                   }});
    out.push_back({"generating_identity", "(1 - L/lambda) sum lambda^{-i} alpha_i = prod (1 - Theta_i/lambda), k <= 4", 4, true,
                   [](long index, gen::Rng &, const VerifyOptions &) -> std::optional<json> {
                       const int k = static_cast<int>(index) + 1;
                       if (!generating_identity(KoszulRing(k))) {
                           return fail({{"k", k}});
                       }
                       return std::nullopt;
                   }});
    return out;
}

// ---------------------------------------------------------------------------
// wall

CorrelatorSeries random_potential(gen::Rng &rng, const ConeSpecPtr &cone, const RingSpecPtr &ring)
{
    CorrelatorSeries F(cone);
    F.register_label("t", QLaurent(RingElem(ring, 1)), cone->zero());
    for (int s = gen::uniform_int(rng, 1, 2); s > 0; --s) {
        CorrelatorSymbol sym;
        sym.genus = gen::uniform_int(rng, 1, 2);
        sym.beta = {gen::uniform_int(rng, 0, 4), gen::uniform_int(rng, 0, 2)};
        const int n = gen::uniform_int(rng, 0, 2);
        if (n > 0) {
            sym.groups.push_back({"t", n});
        }
        F.add_term(std::move(sym), gen::nonzero_rational(rng));
    }
    return F;
}

MuSeries random_mu(gen::Rng &rng, const ConeSpec &cone, const RingSpecPtr &ring)
{
    MuSeries mu;
    for (const auto &beta : cone.classes_up_to(cone.max_degree)) {
        if (cone.degree(beta) > 0 && gen::uniform_int(rng, 0, 2) > 0) {
            QLaurent v = gen::random_laurent(rng, ring, -1, 1, 1, 0);
            v.add_term(0, RingElem(ring, 1));
            mu.emplace(beta, v);
        }
    }
    return mu;
}

std::vector<CheckDef> wall_checks()
{
    std::vector<CheckDef> out;
    out.push_back({"q_difference", "(1 - q^d P)^n I_d = I_{d-1} for projective presets, n = 2, 3, 4, d <= 4", 12, true,
                   [](long index, gen::Rng &, const VerifyOptions &) -> std::optional<json> {
                       const int n = static_cast<int>(index / 4) + 2;
                       const int d = static_cast<int>(index % 4) + 1;
                       const auto spec = preset_projective(n);
                       const auto I = evaluate(spec, 4);
                       const RingElem P = RingElem(spec.ring, 1) - RingElem::generator(spec.ring, "nu");
                       QLaurent factor(RingElem(spec.ring, 1));
                       factor.add_term(d, -P);
                       QLaurent power(RingElem(spec.ring, 1));
                       for (int i = 0; i < n; ++i) {
                           power = power * factor;
                       }
                       if (!(QRational(power) * I.coeff({d}) == I.coeff({d - 1}))) {
                           return fail({{"n", n}, {"d", d}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"mirror_map_vanishes", "mu_beta = 0 for untwisted projective presets, n = 2, 3, 4, d <= 4", 12, true,
                   [](long index, gen::Rng &, const VerifyOptions &) -> std::optional<json> {
                       const int n = static_cast<int>(index / 4) + 2;
                       const int d = static_cast<int>(index % 4) + 1;
                       const auto I = evaluate(preset_projective(n), 4);
                       const auto mu = mu_beta(I, {d});
                       if (!mu.is_zero()) {
                           return fail({{"n", n}, {"d", d}, {"mu", to_json(mu)}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"genus0_wall_identity",
                   "(1 - q) I_beta = mu_beta + tail at every wall <= 4, tails read off by residues, for P1, P2, P3 and P1-qtwist",
                   4, true,
                   [](long index, gen::Rng &, const VerifyOptions &) -> std::optional<json> {
                       static const std::vector<std::string> names{"P1", "P2", "P3", "P1-qtwist"};
                       const auto &name = names[static_cast<std::size_t>(index)];
                       const auto spec = preset_by_name(name, 4);
                       const auto rep = j_transform(QLaurent(spec.ring), spec, Rational(1, 4), 4, 25, 2);
                       if (!rep.all_equal || rep.entries.size() != 4) {
                           json bad = json::array();
                           for (const auto &e : rep.entries) {
                               bad.push_back({{"beta", e.beta},
                                              {"split_identity", e.split_identity},
                                              {"residue_series", e.residue_series},
                                              {"substitution_invariant", e.substitution_invariant}});
                           }
                           return fail({{"preset", name}, {"degree_zero", rep.degree_zero}, {"entries", bad}});
                       }
                       return std::nullopt;
                   }});
    out.push_back({"telescoping", "composed single-wall transforms = one substitution t -> t + mu^{>=eps}, degree <= 4", 100,
                   false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       static const auto ring = make_ring({{"nu", 2}});
                       static const auto cone = std::make_shared<const ConeSpec>(std::vector<Rational>{1, 2}, 4);
                       const auto F = random_potential(rng, cone, ring);
                       const auto mu = random_mu(rng, *cone, ring);
                       for (const Rational eps : {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1)}) {
                           MuSeries cut;
                           for (const auto &[beta, v] : mu) {
                               if (cone->degree(beta) <= 1 / eps) {
                                   cut.emplace(beta, v);
                               }
                           }
                           const auto a = telescoped_transform(F, mu, eps);
                           const auto b = potential_transform(F, cut);
                           if (!(a == b)) {
                               return fail({{"potential", to_json(F)}, {"epsilon", to_json(eps)}, {"telescoped", to_json(a)},
                                            {"substituted", to_json(b)}});
                           }
                       }
                       return std::nullopt;
                   }});
    out.push_back({"zero_mirror_map", "with mu = 0 every transform is the identity", 20, false,
                   [](long, gen::Rng &rng, const VerifyOptions &) -> std::optional<json> {
                       static const auto ring = make_ring({{"nu", 2}});
                       static const auto cone = std::make_shared<const ConeSpec>(std::vector<Rational>{1, 2}, 4);
                       const auto F = random_potential(rng, cone, ring);
                       if (!(telescoped_transform(F, {}, Rational(1, 4)) == F) || !(potential_transform(F, {}) == F) ||
                           !(single_wall_transform(F, {}, 1) == F)) {
                           return fail({{"potential", to_json(F)}});
                       }
                       return std::nullopt;
                   }});
    return out;
}

// ---------------------------------------------------------------------------

const std::map<std::string, std::vector<CheckDef>> &registry()
{
    static const std::map<std::string, std::vector<CheckDef>> r = {
        {"residues", residue_checks()}, {"split", split_checks()},     {"lambda", lambda_checks()},
        {"loccor", loccor_checks()},    {"inflated", inflated_checks()}, {"wall", wall_checks()},
    };
    return r;
}

const std::vector<CheckDef> &suite(const std::string &name)
{
    auto it = registry().find(name);
    if (it == registry().end()) {
        throw invalid_input("unknown verify suite '" + name + "'");
    }
    return it->second;
}

std::uint64_t name_hash(const std::string &s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h = (h ^ c) * 1099511628211ULL;
    }
    return h;
}

CheckOutcome execute(const std::string &suite_name, const CheckDef &def, const VerifyOptions &opts)
{
    long trials = def.default_trials;
    if (!def.grid && opts.trials) {
        trials = *opts.trials;
    }
    if (suite_name == "loccor" && def.name == "loc_eq_cor") {
        trials *= static_cast<long>(loccor_configs().size());
    }
    std::vector<std::optional<json>> results(static_cast<std::size_t>(trials));
    const std::uint64_t stream = name_hash(suite_name + "/" + def.name);
    kernels::parallel_for(results.size(), [&](std::size_t i) {
        gen::Rng rng(gen::derive_seed(opts.seed, stream, i));
        try {
            results[i] = def.body(static_cast<long>(i), rng, opts);
        } catch (const std::exception &e) {
            results[i] = json{{"error", e.what()}};
        }
    });
    CheckOutcome out;
    out.name = def.name;
    out.statement = def.statement;
    out.trials = trials;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i]) {
            ++out.passed;
        } else if (out.first_failure < 0) {
            out.first_failure = static_cast<long>(i);
            out.counterexample = std::move(results[i]);
        }
    }
    return out;
}

} // namespace

bool SuiteReport::ok() const
{
    for (const auto &c : checks) {
        if (!c.ok()) {
            return false;
        }
    }
    return true;
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"residues", "split", "lambda", "loccor", "inflated", "wall"};
    return names;
}

std::vector<std::string> check_names(const std::string &suite_name)
{
    std::vector<std::string> out;
    for (const auto &c : suite(suite_name)) {
        out.push_back(c.name);
    }
    return out;
}

SuiteReport run_suite(const std::string &suite_name, const VerifyOptions &opts)
{
    SuiteReport rep;
    rep.suite = suite_name;
    for (const auto &def : suite(suite_name)) {
        rep.checks.push_back(execute(suite_name, def, opts));
    }
    return rep;
}

CheckOutcome run_check(const std::string &suite_name, const std::string &check, const VerifyOptions &opts)
{
    for (const auto &def : suite(suite_name)) {
        if (def.name == check) {
            return execute(suite_name, def, opts);
        }
    }
    throw invalid_input("suite '" + suite_name + "' has no check '" + check + "'");
}

json to_json(const CheckOutcome &c)
{
    json j = {{"name", c.name}, {"statement", c.statement}, {"trials", c.trials}, {"passed", c.passed}, {"ok", c.ok()}};
    if (c.counterexample) {
        j["first_failure"] = c.first_failure;
        j["counterexample"] = *c.counterexample;
    }
    return j;
}

json to_json(const SuiteReport &r)
{
    json checks = json::array();
    for (const auto &c : r.checks) {
        checks.push_back(to_json(c));
    }
    return {{"suite", r.suite}, {"ok", r.ok()}, {"checks", checks}};
}

} // namespace qkwc
