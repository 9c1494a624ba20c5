#include "qkwc/perm.hpp"

namespace qkwc {

SlotRing make_slot_ring(const RingSpecPtr &base, int novikov_count,
                        const std::vector<RingSpec::TruncVar> &extra_t_vars)
{
    std::vector<std::string> units = {"q", "w", "L"};
    for (int i = 1; i <= novikov_count; ++i) {
        units.push_back("Q" + std::to_string(i));
    }
    for (const auto &u : units) {
        if (base->find(u)) {
            throw invalid_input("coefficient ring already has a generator named '" + u + "'");
        }
    }
    SlotRing sr;
    sr.base = base;
    sr.ring = base->extended(units, extra_t_vars);
    sr.q = sr.ring->require("q");
    sr.w = sr.ring->require("w");
    sr.L = sr.ring->require("L");
    for (int i = 1; i <= novikov_count; ++i) {
        sr.novikov.push_back(sr.ring->require("Q" + std::to_string(i)));
    }
    return sr;
}

RingElem SlotRing::lift(const RingElem &base_elem) const
{
    return reembed(base_elem, ring);
}

RingElem SlotRing::slot_monomial(const RingElem &c, int qe, int we, int le, const std::vector<int> &nov) const
{
    Monomial m;
    m.exps[q] = qe;
    m.exps[w] = we;
    m.exps[L] = le;
    for (std::size_t i = 0; i < nov.size(); ++i) {
        m.exps[novikov.at(i)] = nov[i];
    }
    const RingElem lifted = same_ring(c.spec(), ring) ? c : lift(c);
    return lifted * RingElem::monomial(ring, m);
}

SlotElem h_sym(int k, const SlotElem &F)
{
    return sym_power(k, F);
}

std::vector<SlotElem> h_syms(int k, const SlotElem &F)
{
    return sym_powers(k, F);
}

RingElem extract_grade(const SlotRing &sr, const SlotElem &F, int qe, int we)
{
    std::vector<Term> out;
    for (const auto &t : F.terms()) {
        if (t.mono.exps[sr.q] == qe && t.mono.exps[sr.w] == we) {
            Term u = t;
            u.mono.exps[sr.q] = 0;
            u.mono.exps[sr.w] = 0;
            out.push_back(std::move(u));
        }
    }
    return RingElem::from_terms(sr.ring, std::move(out));
}

RingElem extract_q_at_most(const SlotRing &sr, const SlotElem &F, int q_max, int we)
{
    std::vector<Term> out;
    for (const auto &t : F.terms()) {
        if (t.mono.exps[sr.q] <= q_max && t.mono.exps[sr.w] == we) {
            Term u = t;
            u.mono.exps[sr.q] = 0;
            u.mono.exps[sr.w] = 0;
            out.push_back(std::move(u));
        }
    }
    return RingElem::from_terms(sr.ring, std::move(out));
}

SlotElem BracketExpr::evaluate(const std::vector<QLaurent> &inputs) const
{
    SlotElem total = sr_.zero();
    for (const auto &term : terms_) {
        SlotElem prod = sr_.one();
        for (const auto &f : term.factors) {
            if (const auto *s = std::get_if<SymFactor>(&f)) {
                prod *= h_sym(s->k, s->T(inputs.at(static_cast<std::size_t>(s->input))));
            } else {
                prod *= std::get<FixedFactor>(f).value;
            }
            if (prod.is_zero()) {
                break;
            }
        }
        total += prod * term.coeff;
    }
    return total;
}

BracketExpr directional_derivative(const BracketExpr &expr, const std::vector<QLaurent> &direction)
{
    for (const auto &d : direction) {
        if (d.coeffs().size() > 1) {
            throw invalid_input("direction must be a monomial increment delta*q^l");
        }
    }
    BracketExpr out(expr.slot_ring());
    for (const auto &term : expr.terms()) {
        for (std::size_t i = 0; i < term.factors.size(); ++i) {
            const auto *s = std::get_if<SymFactor>(&term.factors[i]);
            if (s == nullptr || s->k == 0) {
                continue;
            }
            const auto &d = direction.at(static_cast<std::size_t>(s->input));
            if (d.is_zero()) {
                continue;
            }
            BracketTerm t = term;
            t.factors[i] = SymFactor{s->k - 1, s->input, s->T};
            t.factors.push_back(FixedFactor{s->T(d)});
            out.add_term(std::move(t));
        }
    }
    return out;
}

} // namespace qkwc
