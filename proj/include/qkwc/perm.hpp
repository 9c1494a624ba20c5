#ifndef QKWC_PERM_HPP
#define QKWC_PERM_HPP

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "qkwc/qfun.hpp"

namespace qkwc {

// Coefficient ring extended by the slot gradings: q and w (loop and residue
// bookkeeping), the shared cotangent variable L, Novikov markers Q1..Qn and
// optional truncated variables (e.g. a first-order parameter).
struct SlotRing {
    RingSpecPtr base;
    RingSpecPtr ring;
    std::size_t q = 0;
    std::size_t w = 0;
    std::size_t L = 0;
    std::vector<std::size_t> novikov;

    RingElem one() const { return RingElem(ring, 1); }
    RingElem zero() const { return RingElem(ring); }
    // c * q^qe * w^we * L^le * prod Q_i^{nov_i}, with c a base-ring element.
    RingElem slot_monomial(const RingElem &c, int qe, int we = 0, int le = 0, const std::vector<int> &nov = {}) const;
    RingElem lift(const RingElem &base_elem) const;
};

SlotRing make_slot_ring(const RingSpecPtr &base, int novikov_count,
                        const std::vector<RingSpec::TruncVar> &extra_t_vars = {});

using SlotElem = RingElem;

// S_k-invariants of F^{tensor k}; gradings add across slots.
SlotElem h_sym(int k, const SlotElem &F);
std::vector<SlotElem> h_syms(int k, const SlotElem &F);

// Graded piece at q^qe w^we with q and w removed; L and Q stay.
RingElem extract_grade(const SlotRing &sr, const SlotElem &F, int qe, int we);

// Sum of graded pieces with q-exponent <= q_max and w-exponent == we.
RingElem extract_q_at_most(const SlotRing &sr, const SlotElem &F, int q_max, int we);

// Linear functional from an input series to slot elements.
using LinearMap = std::function<SlotElem(const QLaurent &)>;

// Factor of a bracket monomial: h_k(T(f_input)) or a fixed insertion.
struct SymFactor {
    int k;
    int input;
    LinearMap T;
};
struct FixedFactor {
    SlotElem value;
};
using BracketFactor = std::variant<SymFactor, FixedFactor>;

struct BracketTerm {
    Rational coeff;
    std::vector<BracketFactor> factors;
};

// Polynomial in brackets of the input series, realized by the h-model.
class BracketExpr {
public:
    explicit BracketExpr(SlotRing sr) : sr_(std::move(sr)) {}

    void add_term(BracketTerm term) { terms_.push_back(std::move(term)); }
    const std::vector<BracketTerm> &terms() const { return terms_; }
    const SlotRing &slot_ring() const { return sr_; }

    SlotElem evaluate(const std::vector<QLaurent> &inputs) const;

private:
    SlotRing sr_;
    std::vector<BracketTerm> terms_;
};

// Leibniz rule: every h_k(T(f_a)) is replaced by T(delta_a q^{l_a}) h_{k-1}(T(f_a)).
// Each direction entry must be zero or a single monomial.
BracketExpr directional_derivative(const BracketExpr &expr, const std::vector<QLaurent> &direction);

} // namespace qkwc

#endif
