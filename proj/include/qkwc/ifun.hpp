#ifndef QKWC_IFUN_HPP
#define QKWC_IFUN_HPP

#include <map>
#include <string>
#include <vector>

#include "qkwc/novikov.hpp"

namespace qkwc {

// prod_{i=1}^{l(beta)} (1 - q^i base)^{-exponent} for l(beta) >= 0 and
// prod_{i=l(beta)+1}^{0} (1 - q^i base)^{exponent} for l(beta) < 0, where
// l(beta) = form . beta.
struct HypergeomFactor {
    RingElem base;
    std::vector<int> form;
    int exponent = 1;
};

// q^{a(beta)} prod_j u_j^{l_j(beta)} with a(beta) = lin . beta + beta^T quad beta.
struct Prefactor {
    std::vector<Rational> q_linear;
    std::vector<std::vector<Rational>> q_quadratic;
    std::vector<std::pair<RingElem, std::vector<int>>> units;

    bool is_identity() const;
    int q_exponent(const CurveClass &beta) const;
    RingElem unit_part(const RingSpecPtr &ring, const CurveClass &beta) const;
};

struct HypergeomSpec {
    ConeSpecPtr cone;
    RingSpecPtr ring;
    std::vector<HypergeomFactor> factors;
    std::vector<Prefactor> prefactors;
    // Projective presets record n so the q-difference oracle can be run.
    int projective_n = 0;
    std::string nilpotent = "nu";
};

using MuSeries = std::map<CurveClass, QLaurent>;

// I_beta for a single class.
QRational hypergeom_term(const HypergeomSpec &spec, const CurveClass &beta);

// I(Q, q) through Novikov degree d.
NovikovSeries evaluate(const HypergeomSpec &spec, const Rational &d);

// Q[nu]/(nu^n), P = 1 - nu, I_d = prod_{i=1}^d (1 - q^i P)^{-n}.
HypergeomSpec preset_projective(int n, const Rational &max_degree = 4);

// Extra per-class monomial factor composed into the rule.
HypergeomSpec twist_I(HypergeomSpec spec, const Prefactor &prefactor);

// "P<k>" or "P<k>-qtwist"; unknown names throw invalid_input.
HypergeomSpec preset_by_name(const std::string &name, const Rational &max_degree);

// [(1 - q) I_beta]_+.
QLaurent mu_beta(const NovikovSeries &I, const CurveClass &beta);

// Sum of mu_beta Q^beta over 0 < deg beta <= 1/epsilon; zero terms are omitted.
MuSeries mu_geq_epsilon(const NovikovSeries &I, const Rational &epsilon);

// (1 - q) I, termwise.
NovikovSeries small_j_from_I(const NovikovSeries &I);

QLaurent one_minus_q(const RingSpecPtr &ring);

} // namespace qkwc

#endif
