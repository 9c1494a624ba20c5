#include "qkwc/wallcross.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qkwc {

RingElem lau(const QRational &f)
{
    return split(f).plus.evaluate_at_one();
}

SlotRing wall_slot_ring(const WallInput &in)
{
    return make_slot_ring(in.ring, static_cast<int>(in.class_count()));
}

namespace {

void check_wall_input(const WallInput &in)
{
    if (in.m < 1) {
        throw invalid_input("wall input needs m >= 1");
    }
    if (in.r < 1) {
        throw invalid_input("orbifold exponent r must be >= 1");
    }
    if (in.g0.size() != in.ginf.size()) {
        throw invalid_input("g0 and ginf must list the same classes");
    }
    if (in.beta && in.classes.size() != in.g0.size()) {
        throw invalid_input("effectivity filter needs one curve class per series");
    }
}

std::vector<int> unit_q(std::size_t n, std::size_t i)
{
    std::vector<int> v(n, 0);
    v[i] = 1;
    return v;
}

// q-graded pieces of X at w^0, keyed by q-exponent.
std::map<int, RingElem> q_pieces(const SlotRing &sr, const SlotElem &X)
{
    std::map<int, std::vector<Term>> raw;
    for (const auto &t : X.terms()) {
        if (t.mono.exps[sr.w] != 0) {
            continue;
        }
        Term u = t;
        u.mono.exps[sr.q] = 0;
        raw[t.mono.exps[sr.q]].push_back(std::move(u));
    }
    std::map<int, RingElem> out;
    for (auto &[e, terms] : raw) {
        out.emplace(e, RingElem::from_terms(sr.ring, std::move(terms)));
    }
    return out;
}

// w-graded pieces of Y at q^0, keyed by w-exponent.
std::map<int, RingElem> w_pieces(const SlotRing &sr, const SlotElem &Y)
{
    std::map<int, std::vector<Term>> raw;
    for (const auto &t : Y.terms()) {
        if (t.mono.exps[sr.q] != 0) {
            continue;
        }
        Term u = t;
        u.mono.exps[sr.w] = 0;
        raw[t.mono.exps[sr.w]].push_back(std::move(u));
    }
    std::map<int, RingElem> out;
    for (auto &[e, terms] : raw) {
        out.emplace(e, RingElem::from_terms(sr.ring, std::move(terms)));
    }
    return out;
}

RingElem first_order(const RingSpecPtr &ring, const SlotElem &X, std::size_t h)
{
    std::vector<Term> out;
    for (const auto &t : X.terms()) {
        if (t.mono.exps[h] == 1) {
            Term u = t;
            u.mono.exps[h] = 0;
            out.push_back(std::move(u));
        }
    }
    return RingElem::from_terms(ring, std::move(out));
}

WallInput with_parameter(const WallInput &in, const std::string &name)
{
    if (in.ring->find(name)) {
        throw invalid_input("coefficient ring already has a generator named '" + name + "'");
    }
    WallInput out = in;
    out.ring = in.ring->extended({}, {{name, 2}});
    auto lift = [&](const QLaurent &f) {
        QLaurent g(out.ring);
        for (const auto &[e, c] : f.coeffs()) {
            g.add_term(e, reembed(c, out.ring));
        }
        return g;
    };
    for (auto &f : out.g0) {
        f = lift(f);
    }
    for (auto &f : out.ginf) {
        f = lift(f);
    }
    return out;
}

} // namespace

WallSeries wall_series(const SlotRing &sr, const WallInput &in)
{
    check_wall_input(in);
    const std::size_t n = in.class_count();
    const int r = in.r;
    WallSeries s{sr.zero(), sr.zero(), sr.zero(), sr.zero()};
    for (std::size_t g = 0; g < n; ++g) {
        const auto nov = unit_q(n, g);
        const QLaurent &g0 = in.g0[g];
        const QLaurent &gi = in.ginf[g];
        for (const auto &[e, c] : g0.coeffs()) {
            s.F0 += sr.slot_monomial(c, r * e, 0, e, nov);
        }
        for (const auto &[e, c] : gi.coeffs()) {
            s.Finf += sr.slot_monomial(c, r * e, 0, -e, nov);
        }
        // -Res(q^{-j} f) = [(f)_inf]_{-j} - [(f)_0]_j with j = r e, e >= 0.
        for (const auto &[e, c] : gi.coeffs()) {
            if (e <= 0) {
                s.Gminus += sr.slot_monomial(c, 0, -r * e, -e, nov);
            }
        }
        for (const auto &[e, c] : g0.coeffs()) {
            if (e >= 0) {
                s.Gminus -= sr.slot_monomial(c, 0, r * e, e, nov);
            }
        }
        // Res(q^j f) = [(f)_0]_{-j} - [(f)_inf]_j with j = r e, e > 0.
        for (const auto &[e, c] : g0.coeffs()) {
            if (e < 0) {
                s.Gplus += sr.slot_monomial(c, 0, -r * e, e, nov);
            }
        }
        for (const auto &[e, c] : gi.coeffs()) {
            if (e > 0) {
                s.Gplus -= sr.slot_monomial(c, 0, r * e, -e, nov);
            }
        }
    }
    return s;
}

SlotElem mixed_sum(const SlotRing &sr, const SlotElem &X, const SlotElem &Y, int shift)
{
    const auto xs = q_pieces(sr, X);
    const auto ys = w_pieces(sr, Y);
    SlotElem total = sr.zero();
    for (const auto &[we, y] : ys) {
        const int t = we - shift;
        if (t < 0) {
            continue;
        }
        SlotElem acc = sr.zero();
        for (const auto &[qe, x] : xs) {
            if (qe > -t - 1) {
                break;
            }
            acc += x;
        }
        if (!acc.is_zero()) {
            total += acc * y;
        }
    }
    return total;
}

namespace {

SlotElem q_tail_sum(const SlotRing &sr, const SlotElem &X, int q_max)
{
    return extract_q_at_most(sr, X, q_max, 0);
}

} // namespace

SlotElem loc_expression(const SlotRing &sr, const WallInput &in)
{
    const WallSeries s = wall_series(sr, in);
    const int m = in.m;
    const auto hF0 = h_syms(m, s.F0);
    const auto hFi = h_syms(m, s.Finf);
    const auto hGm = h_syms(m, s.Gminus);
    const auto hGp = h_syms(m, s.Gplus);
    SlotElem loc = sr.zero();
    for (int k = 1; k <= m; ++k) {
        loc -= q_tail_sum(sr, hF0[static_cast<std::size_t>(k)], -1);
        loc -= q_tail_sum(sr, hFi[static_cast<std::size_t>(k)], 0);
    }
    for (int k = 2; k <= m; ++k) {
        for (int r = 1; r <= k - 1; ++r) {
            const auto kr = static_cast<std::size_t>(k - r);
            const auto ur = static_cast<std::size_t>(r);
            loc -= mixed_sum(sr, hF0[kr], hGm[ur], 0);
            loc -= mixed_sum(sr, hFi[kr], hGp[ur], 1);
        }
    }
    return loc;
}

SlotElem cor_expression(const SlotRing &sr, const WallInput &in)
{
    check_wall_input(in);
    const std::size_t n = in.class_count();
    SlotElem lau_sum = sr.zero();
    for (std::size_t g = 0; g < n; ++g) {
        const auto nov = unit_q(n, g);
        for (const auto &[e, c] : in.g0[g].coeffs()) {
            if (e < 0) {
                lau_sum += sr.slot_monomial(c, 0, 0, e, nov);
            }
        }
        for (const auto &[e, c] : in.ginf[g].coeffs()) {
            if (e <= 0) {
                lau_sum += sr.slot_monomial(c, 0, 0, -e, nov);
            }
        }
    }
    const auto h = h_syms(in.m, lau_sum);
    SlotElem cor = sr.zero();
    for (int k = 1; k <= in.m; ++k) {
        cor -= h[static_cast<std::size_t>(k)];
    }
    return cor;
}

Ledger to_ledger(const SlotRing &sr, const WallInput &in, const SlotElem &value)
{
    const std::size_t n = in.class_count();
    std::map<std::vector<int>, std::vector<Term>> raw;
    for (const auto &t : value.terms()) {
        std::vector<int> key(n);
        int total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            key[i] = t.mono.exps[sr.novikov[i]];
            total += key[i];
        }
        if (total > in.m) {
            continue;
        }
        if (in.beta) {
            bool effective = true;
            for (std::size_t c = 0; c < in.beta->size(); ++c) {
                long rest = (*in.beta)[c];
                for (std::size_t i = 0; i < n; ++i) {
                    rest -= static_cast<long>(key[i]) * in.classes[i].at(c);
                }
                effective = effective && rest >= 0;
            }
            if (!effective) {
                continue;
            }
        }
        Term u = t;
        for (std::size_t i = 0; i < n; ++i) {
            u.mono.exps[sr.novikov[i]] = 0;
        }
        raw[key].push_back(std::move(u));
    }
    Ledger out;
    for (auto &[key, terms] : raw) {
        RingElem v = RingElem::from_terms(sr.ring, std::move(terms));
        if (!v.is_zero()) {
            out.emplace(key, std::move(v));
        }
    }
    return out;
}

LocCorReport verify_loc_eq_cor(const WallInput &in)
{
    const SlotRing sr = wall_slot_ring(in);
    LocCorReport rep;
    rep.loc = to_ledger(sr, in, loc_expression(sr, in));
    rep.cor = to_ledger(sr, in, cor_expression(sr, in));
    std::map<std::vector<int>, RingElem> keys;
    for (const auto &[k, v] : rep.loc) {
        keys.emplace(k, v);
    }
    for (const auto &[k, v] : rep.cor) {
        auto it = keys.find(k);
        if (it == keys.end()) {
            keys.emplace(k, -v);
        } else {
            it->second -= v;
        }
    }
    for (const auto &[k, v] : keys) {
        if (!v.is_zero()) {
            rep.diff.emplace(k, v);
        }
    }
    rep.equal = rep.diff.empty();
    return rep;
}

DerivativeLines derivative_lines_zero(const WallInput &in0, const std::vector<RingElem> &delta,
                                      const std::vector<int> &l)
{
    const WallInput in = with_parameter(in0, "h");
    const std::size_t n = in.class_count();
    if (delta.size() != n || l.size() != n) {
        throw invalid_input("direction needs one increment per class");
    }
    for (int x : l) {
        if (x < 0) {
            throw invalid_input("increments of g0 need l >= 0");
        }
    }
    const SlotRing sr = wall_slot_ring(in);
    const std::size_t h = sr.ring->require("h");
    const RingElem hb = RingElem::generator(in.ring, "h");

    WallInput moved = in;
    SlotElem D = sr.zero();
    SlotElem Dw = sr.zero();
    for (std::size_t g = 0; g < n; ++g) {
        const RingElem d = reembed(delta[g], in.ring);
        moved.g0[g] += QLaurent::monomial(hb * d, l[g]);
        D += sr.slot_monomial(d, l[g] * in.r, 0, l[g], unit_q(n, g));
        Dw += sr.slot_monomial(d, 0, l[g] * in.r, l[g], unit_q(n, g));
    }

    DerivativeLines out{sr.zero(), sr.zero(), sr.zero(), sr.zero(), sr.zero(), sr.zero()};
    out.numeric_loc = first_order(sr.ring, loc_expression(sr, moved), h);
    out.numeric_cor = first_order(sr.ring, cor_expression(sr, moved), h);

    const WallSeries s = wall_series(sr, in);
    const int m = in.m;
    const auto hF0 = h_syms(m, s.F0);
    const auto hGm = h_syms(m, s.Gminus);
    for (int k = 2; k <= m; ++k) {
        const auto k1 = static_cast<std::size_t>(k - 1);
        out.line1 -= q_tail_sum(sr, D * hF0[k1], -1);
        out.line2 += mixed_sum(sr, hF0[k1], Dw, 0);
    }
    for (int k = 3; k <= m; ++k) {
        for (int r = 1; r <= k - 2; ++r) {
            out.line3 -= mixed_sum(sr, D * hF0[static_cast<std::size_t>(k - r - 1)], hGm[static_cast<std::size_t>(r)], 0);
        }
        for (int r = 2; r <= k - 1; ++r) {
            out.line4 += mixed_sum(sr, hF0[static_cast<std::size_t>(k - r)], Dw * hGm[static_cast<std::size_t>(r - 1)], 0);
        }
    }
    return out;
}

SlotElem derivative_infinity(const WallInput &in0, const std::vector<RingElem> &delta, const std::vector<int> &l)
{
    const WallInput in = with_parameter(in0, "h");
    const std::size_t n = in.class_count();
    if (delta.size() != n || l.size() != n) {
        throw invalid_input("direction needs one increment per class");
    }
    for (int x : l) {
        if (x <= 0) {
            throw invalid_input("increments of ginf need l > 0");
        }
    }
    const SlotRing sr = wall_slot_ring(in);
    const RingElem hb = RingElem::generator(in.ring, "h");
    WallInput moved = in;
    for (std::size_t g = 0; g < n; ++g) {
        moved.ginf[g] += QLaurent::monomial(hb * reembed(delta[g], in.ring), l[g]);
    }
    return first_order(sr.ring, loc_expression(sr, moved) - cor_expression(sr, moved), sr.ring->require("h"));
}

// ---------------------------------------------------------------------------

int CorrelatorSymbol::n() const
{
    int total = 0;
    for (const auto &g : groups) {
        total += g.count;
    }
    return total;
}

void CorrelatorSymbol::normalize()
{
    groups.erase(std::remove_if(groups.begin(), groups.end(), [](const InsertionGroup &g) { return g.count == 0; }),
                 groups.end());
    std::sort(groups.begin(), groups.end());
}

std::string mu_label(const CurveClass &beta)
{
    std::string s = "mu[";
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (i > 0) {
            s += ",";
        }
        s += std::to_string(beta[i]);
    }
    return s + "]";
}

std::string to_string(const CorrelatorSymbol &s)
{
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < s.groups.size(); ++i) {
        if (i > 0) {
            os << ", ";
        }
        os << s.groups[i].label << "^" << s.groups[i].count;
    }
    os << ">_{g=" << s.genus << ",n=" << s.n() << ",beta=" << mu_label(s.beta).substr(2) << "}";
    return os.str();
}

void CorrelatorSeries::register_label(const std::string &label, const QLaurent &value, const CurveClass &cls)
{
    auto it = basis_.find(label);
    if (it != basis_.end()) {
        if (!(it->second == value) || label_classes_.at(label) != cls) {
            throw invalid_input("insertion label '" + label + "' already bound to a different value");
        }
        return;
    }
    basis_.emplace(label, value);
    label_classes_.emplace(label, cls);
}

CurveClass CorrelatorSeries::label_class(const std::string &label) const
{
    auto it = label_classes_.find(label);
    if (it == label_classes_.end()) {
        throw invalid_input("insertion label '" + label + "' is not in the basis");
    }
    return it->second;
}

CurveClass CorrelatorSeries::total_class(const CorrelatorSymbol &s) const
{
    CurveClass total = s.beta;
    for (const auto &g : s.groups) {
        const CurveClass c = label_class(g.label);
        for (std::size_t i = 0; i < total.size(); ++i) {
            total[i] += g.count * c.at(i);
        }
    }
    return total;
}

void CorrelatorSeries::add_term(CorrelatorSymbol s, const Rational &c)
{
    if (c == 0) {
        return;
    }
    s.normalize();
    if (cone_->degree(total_class(s)) > cone_->max_degree) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

bool operator==(const CorrelatorSeries &a, const CorrelatorSeries &b)
{
    return *a.cone_ == *b.cone_ && a.terms_ == b.terms_;
}

MuSeries restrict_to_degree(const ConeSpec &cone, const MuSeries &mu, const Rational &d0)
{
    MuSeries out;
    for (const auto &[beta, v] : mu) {
        if (cone.degree(beta) == d0 && !v.is_zero()) {
            out.emplace(beta, v);
        }
    }
    return out;
}

namespace {

// Appends one group per class, over every multiset of classes whose sum fits
// inside the symbol's class.
void expand_symbol(CorrelatorSeries &out, const CorrelatorSymbol &s, const Rational &c,
                   const std::vector<CurveClass> &classes)
{
    std::vector<int> counts(classes.size(), 0);
    std::function<void(std::size_t, CurveClass)> rec = [&](std::size_t i, CurveClass rest) {
        if (i == classes.size()) {
            CorrelatorSymbol t = s;
            t.beta = rest;
            for (std::size_t j = 0; j < classes.size(); ++j) {
                if (counts[j] > 0) {
                    t.groups.push_back(InsertionGroup{mu_label(classes[j]), counts[j]});
                }
            }
            out.add_term(std::move(t), c);
            return;
        }
        for (int k = 0;; ++k) {
            counts[i] = k;
            rec(i + 1, rest);
            bool fits = true;
            for (std::size_t a = 0; a < rest.size(); ++a) {
                rest[a] -= classes[i][a];
                fits = fits && rest[a] >= 0;
            }
            if (!fits) {
                break;
            }
        }
        counts[i] = 0;
    };
    rec(0, s.beta);
}

CorrelatorSeries with_mu_labels(const CorrelatorSeries &F, const MuSeries &mu, std::vector<CurveClass> &classes)
{
    CorrelatorSeries out(F.cone());
    for (const auto &[label, v] : F.basis()) {
        out.register_label(label, v, F.label_class(label));
    }
    for (const auto &[beta, v] : mu) {
        if (v.is_zero()) {
            continue;
        }
        if (F.cone()->degree(beta) == 0) {
            throw invalid_input("mu data at beta = 0");
        }
        out.register_label(mu_label(beta), v, beta);
        classes.push_back(beta);
    }
    return out;
}

} // namespace

CorrelatorSeries single_wall_transform(const CorrelatorSeries &F, const MuSeries &mu, const Rational &d0)
{
    if (d0 <= 0) {
        throw invalid_input("wall degree must be positive");
    }
    const MuSeries at_wall = restrict_to_degree(*F.cone(), mu, d0);
    std::vector<CurveClass> classes;
    CorrelatorSeries out = with_mu_labels(F, at_wall, classes);
    for (const auto &[s, c] : F.terms()) {
        const Rational stability = 2 * s.genus - 2 + s.n() + F.cone()->degree(s.beta) / d0;
        if (stability <= 0) {
            out.add_term(s, c);
            continue;
        }
        expand_symbol(out, s, c, classes);
    }
    return out;
}

CorrelatorSeries potential_transform(const CorrelatorSeries &F, const MuSeries &mu)
{
    std::vector<CurveClass> classes;
    CorrelatorSeries out = with_mu_labels(F, mu, classes);
    for (const auto &[s, c] : F.terms()) {
        expand_symbol(out, s, c, classes);
    }
    return out;
}

CorrelatorSeries telescoped_transform(const CorrelatorSeries &F, const MuSeries &mu, const Rational &epsilon)
{
    if (epsilon <= 0) {
        throw invalid_input("epsilon must be positive");
    }
    const Rational bound = std::min<Rational>(Rational(1 / epsilon), F.cone()->max_degree);
    auto degrees = F.cone()->attainable_degrees(bound);
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    CorrelatorSeries cur = F;
    for (const auto &d0 : degrees) {
        cur = single_wall_transform(cur, mu, d0);
    }
    return cur;
}

// ---------------------------------------------------------------------------

JTransformReport j_transform(const QLaurent &t, const HypergeomSpec &spec, const Rational &epsilon,
                             const Rational &max_degree, int residue_terms, int orbifold_r)
{
    if (epsilon <= 0) {
        throw invalid_input("epsilon must be positive");
    }
    const auto &ring = spec.ring;
    const NovikovSeries I = evaluate(spec, max_degree);
    const QRational omq(one_minus_q(ring));
    JTransformReport rep;
    rep.all_equal = true;

    // Q^0: both sides read 1 - q + t.
    const QRational lhs0 = omq * I.coeff(I.cone()->zero()) + QRational(t);
    const QRational rhs0 = omq + QRational(t);
    rep.degree_zero = lhs0 == rhs0;
    rep.all_equal = rep.all_equal && rep.degree_zero;
    if (!t.is_zero()) {
        rep.shifted_input.emplace(I.cone()->zero(), t);
    }

    const Rational bound = std::min<Rational>(Rational(1 / epsilon), max_degree);
    const RingElem one(ring, 1);
    for (const auto &beta : I.cone()->classes_up_to(bound)) {
        const Rational deg = I.cone()->degree(beta);
        if (deg == 0) {
            continue;
        }
        WallIdentityEntry e;
        e.beta = beta;
        e.wall = 1 / deg;
        e.lhs = omq * I.coeff(beta);
        const Split sp = split(e.lhs);
        e.mu = sp.plus;
        e.tail = sp.minus;
        e.split_identity = e.lhs == QRational(e.mu) + e.tail && is_proper(e.tail);

        const QLaurent tail_series = expand_at_zero(e.tail, residue_terms - 1);
        e.residue_series = true;
        for (int i = 0; i < residue_terms; ++i) {
            const QRational shifted = QRational(QLaurent::q(ring, -i)) * e.lhs;
            if (!(tail_series.coeff(i) == residue(shifted))) {
                e.residue_series = false;
                break;
            }
        }
        e.substitution_invariant = true;
        if (orbifold_r > 1) {
            const QRational lhs_r = substitute(e.lhs, orbifold_r, one);
            for (int i = 0; i < std::min(residue_terms, 6); ++i) {
                const QRational a = QRational(QLaurent::q(ring, -i * orbifold_r)) * lhs_r;
                const QRational b = QRational(QLaurent::q(ring, -i)) * e.lhs;
                if (!(residue(a) == residue(b))) {
                    e.substitution_invariant = false;
                    break;
                }
            }
        }
        if (!e.mu.is_zero()) {
            rep.shifted_input.emplace(beta, e.mu);
        }
        rep.all_equal = rep.all_equal && e.split_identity && e.residue_series && e.substitution_invariant;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

} // namespace qkwc
