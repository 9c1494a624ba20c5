#ifndef QKWC_WALLCROSS_HPP
#define QKWC_WALLCROSS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qkwc/ifun.hpp"
#include "qkwc/perm.hpp"

namespace qkwc {

// [f]_+ at q = 1.
RingElem lau(const QRational &f);

// Per-class truncated expansions of (1 - q) I_gamma at 0 and at infinity,
// for the classes gamma in D_beta.
struct WallInput {
    RingSpecPtr ring;
    int m = 1;
    int r = 1;
    std::vector<QLaurent> g0;
    std::vector<QLaurent> ginf;
    // Optional filter: keep only tail totals with beta - total effective.
    std::vector<CurveClass> classes;
    std::optional<CurveClass> beta;

    std::size_t class_count() const { return g0.size(); }
};

SlotRing wall_slot_ring(const WallInput &in);

// Slot series of the wall input: F0 = sum Q^gamma g0_gamma(q^r L),
// Finf = sum Q^gamma ginf_gamma(q^r L^{-1}), and the residue generating
// elements Gminus = sum Q^gamma sum_{j>=0} -Res(q^{-j} f_gamma) w^j,
// Gplus = sum Q^gamma sum_{j>0} Res(q^j f_gamma) w^j.
struct WallSeries {
    SlotElem F0;
    SlotElem Finf;
    SlotElem Gminus;
    SlotElem Gplus;
};

WallSeries wall_series(const SlotRing &sr, const WallInput &in);

// Q-exponent vector (one entry per class in D_beta) -> bracket value.
using Ledger = std::map<std::vector<int>, RingElem>;

SlotElem loc_expression(const SlotRing &sr, const WallInput &in);
SlotElem cor_expression(const SlotRing &sr, const WallInput &in);
Ledger to_ledger(const SlotRing &sr, const WallInput &in, const SlotElem &value);

struct LocCorReport {
    bool equal = false;
    Ledger loc;
    Ledger cor;
    // Only the shapes where the two sides differ.
    Ledger diff;
};

LocCorReport verify_loc_eq_cor(const WallInput &in);

// sum_{t>=0, s>=1} [X]_{q^{-t-s}} [Y]_{w^{t+shift}}.
SlotElem mixed_sum(const SlotRing &sr, const SlotElem &X, const SlotElem &Y, int shift);

// Term groups of the directional derivative of Loc in the direction
// g0_gamma -> g0_gamma + delta_gamma q^{l_gamma}, l_gamma >= 0. `numeric_*`
// are first-order coefficients computed by perturbing with a nilpotent h.
struct DerivativeLines {
    SlotElem line1;
    SlotElem line2;
    SlotElem line3;
    SlotElem line4;
    SlotElem numeric_loc;
    SlotElem numeric_cor;
};

DerivativeLines derivative_lines_zero(const WallInput &in, const std::vector<RingElem> &delta,
                                      const std::vector<int> &l);

// First-order change of Loc - Cor for g_inf_gamma -> g_inf_gamma + delta q^{l'}, l' > 0.
SlotElem derivative_infinity(const WallInput &in, const std::vector<RingElem> &delta, const std::vector<int> &l);

// ---------------------------------------------------------------------------

struct InsertionGroup {
    std::string label;
    int count = 0;

    friend auto operator<=>(const InsertionGroup &, const InsertionGroup &) = default;
};

// Free correlator symbol <label_1^{count_1}, ...>_{g, n, beta} with
// S_{count_1} x S_{count_2} x ... symmetrization. Groups with equal labels are
// kept apart.
struct CorrelatorSymbol {
    int genus = 0;
    CurveClass beta;
    std::vector<InsertionGroup> groups;

    int n() const;
    void normalize();

    friend auto operator<=>(const CorrelatorSymbol &, const CorrelatorSymbol &) = default;
};

std::string mu_label(const CurveClass &beta);
std::string to_string(const CorrelatorSymbol &s);

class CorrelatorSeries {
public:
    explicit CorrelatorSeries(ConeSpecPtr cone) : cone_(std::move(cone)) {}

    const ConeSpecPtr &cone() const { return cone_; }
    const std::map<CorrelatorSymbol, Rational> &terms() const { return terms_; }
    const std::map<std::string, QLaurent> &basis() const { return basis_; }

    // Registers an insertion label with its value and the Novikov class it carries.
    void register_label(const std::string &label, const QLaurent &value, const CurveClass &cls);
    CurveClass label_class(const std::string &label) const;
    // beta plus the classes carried by the insertions.
    CurveClass total_class(const CorrelatorSymbol &s) const;

    // Dropped when the total class exceeds the degree bound.
    void add_term(CorrelatorSymbol s, const Rational &c);

    friend bool operator==(const CorrelatorSeries &a, const CorrelatorSeries &b);

private:
    ConeSpecPtr cone_;
    std::map<CorrelatorSymbol, Rational> terms_;
    std::map<std::string, QLaurent> basis_;
    std::map<std::string, CurveClass> label_classes_;
};

// Expresses symbols at epsilon_- through symbols at epsilon_+ across the wall
// 1/d0. Symbols failing 2g - 2 + n + deg(beta)/d0 > 0 pass through unchanged.
CorrelatorSeries single_wall_transform(const CorrelatorSeries &F, const MuSeries &mu, const Rational &d0);

// t -> t + mu^{>=epsilon} on every symbol.
CorrelatorSeries potential_transform(const CorrelatorSeries &F, const MuSeries &mu);

// Single-wall transforms composed over every wall with d0 <= 1/epsilon, d0 descending.
CorrelatorSeries telescoped_transform(const CorrelatorSeries &F, const MuSeries &mu, const Rational &epsilon);

MuSeries restrict_to_degree(const ConeSpec &cone, const MuSeries &mu, const Rational &d0);

// ---------------------------------------------------------------------------

struct WallIdentityEntry {
    CurveClass beta;
    Rational wall;
    QRational lhs;
    QLaurent mu;
    QRational tail;
    bool split_identity = false;
    bool residue_series = false;
    bool substitution_invariant = false;
};

struct JTransformReport {
    std::vector<WallIdentityEntry> entries;
    std::map<CurveClass, QLaurent> shifted_input;
    bool degree_zero = false;
    bool all_equal = false;
};

// Both sides of the genus-0 single-wall identity at every wall with
// epsilon <= 1/d0 and d0 <= D. Tails are read off through the residue series
// sum_i q^i Res(q^{-i} (1 - q) I_beta), compared with the minus part on the
// first `residue_terms` coefficients.
JTransformReport j_transform(const QLaurent &t, const HypergeomSpec &spec, const Rational &epsilon,
                             const Rational &max_degree, int residue_terms = 25, int orbifold_r = 2);

} // namespace qkwc

#endif
