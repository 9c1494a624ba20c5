#ifndef QKWC_RINGCORE_HPP
#define QKWC_RINGCORE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qkwc/rational.hpp"

namespace qkwc {

// Upper bound on the number of generators of a coefficient ring. Monomials are
// fixed-size exponent arrays so the product kernel never allocates per term.
inline constexpr std::size_t kMaxVars = 24;

struct Monomial {
    std::array<std::int32_t, kMaxVars> exps{};

    friend auto operator<=>(const Monomial &, const Monomial &) = default;
    friend bool operator==(const Monomial &, const Monomial &) = default;

    bool is_one() const
    {
        for (auto e : exps) {
            if (e != 0) {
                return false;
            }
        }
        return true;
    }
};

struct Term {
    Monomial mono;
    Rational coeff;
};

enum class VarKind { nilpotent, unit, newton, tvar };

// Finite-dimensional quotient coefficient ring
//
//   Q[nu_i]/(nu_i^{n_i}) [u_j^{+-1}] [N_1..N_M]/(weight > W) [t_k]/(t_k^{c_k}).
//
// Generator layout inside a Monomial: nilpotents, units, Newton generators
// N_1..N_M, truncated variables.
class RingSpec {
public:
    struct Nilpotent {
        std::string name;
        int order;
    };
    struct TruncVar {
        std::string name;
        int order;
    };

    RingSpec(std::vector<Nilpotent> nilpotents, std::vector<std::string> units, int newton_max,
             int weight_cutoff, std::vector<TruncVar> t_vars);

    const std::vector<Nilpotent> &nilpotents() const { return nilpotents_; }
    const std::vector<std::string> &units() const { return units_; }
    int newton_max() const { return newton_max_; }
    int weight_cutoff() const { return weight_cutoff_; }
    const std::vector<TruncVar> &t_vars() const { return t_vars_; }

    std::size_t num_vars() const { return kinds_.size(); }
    std::size_t unit_offset() const { return nilpotents_.size(); }
    std::size_t newton_offset() const { return unit_offset() + units_.size(); }
    std::size_t tvar_offset() const { return newton_offset() + static_cast<std::size_t>(newton_max_); }

    VarKind kind(std::size_t var) const { return kinds_[var]; }
    // Nilpotency / truncation order, or Newton weight m for N_m.
    int order(std::size_t var) const { return orders_[var]; }
    const std::string &var_name(std::size_t var) const { return names_[var]; }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t require(std::string_view name) const;

    // True when the monomial vanishes in the quotient.
    bool truncated(const Monomial &m) const;

    // Same generators plus extra units / truncated variables appended at the end
    // of their blocks.
    std::shared_ptr<const RingSpec> extended(const std::vector<std::string> &extra_units,
                                             const std::vector<TruncVar> &extra_t_vars = {}) const;

    friend bool operator==(const RingSpec &a, const RingSpec &b);

private:
    std::vector<Nilpotent> nilpotents_;
    std::vector<std::string> units_;
    int newton_max_;
    int weight_cutoff_;
    std::vector<TruncVar> t_vars_;

    std::vector<VarKind> kinds_;
    std::vector<int> orders_;
    std::vector<std::string> names_;
};

using RingSpecPtr = std::shared_ptr<const RingSpec>;

RingSpecPtr make_ring(std::vector<RingSpec::Nilpotent> nilpotents, std::vector<std::string> units = {},
                      int newton_max = 0, int weight_cutoff = 0, std::vector<RingSpec::TruncVar> t_vars = {});

bool same_ring(const RingSpecPtr &a, const RingSpecPtr &b);

// Element of a RingSpec in normal form: terms sorted by monomial, no zero
// coefficients, no truncated monomials. Immutable in spirit: every operation
// returns a fresh value.
class RingElem {
public:
    RingElem() = default;
    explicit RingElem(RingSpecPtr spec) : spec_(std::move(spec)) {}
    RingElem(RingSpecPtr spec, const Rational &constant);

    static RingElem generator(RingSpecPtr spec, std::string_view name);
    // N_m, the m-th Newton generator.
    static RingElem newton(RingSpecPtr spec, int m);
    static RingElem monomial(RingSpecPtr spec, const Monomial &mono, const Rational &coeff = 1);
    static RingElem from_terms(RingSpecPtr spec, std::vector<Term> terms);

    const RingSpecPtr &spec() const { return spec_; }
    const std::vector<Term> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    Rational coefficient(const Monomial &mono) const;

    // Terms with no nilpotent, Newton or truncated-variable content.
    RingElem constant_part() const;

    RingElem operator-() const;
    RingElem &operator+=(const RingElem &other);
    RingElem &operator-=(const RingElem &other);
    RingElem &operator*=(const RingElem &other);
    RingElem &operator*=(const Rational &scalar);

    friend RingElem operator+(RingElem a, const RingElem &b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem &b) { return a -= b; }
    friend RingElem operator*(const RingElem &a, const RingElem &b);
    friend RingElem operator*(RingElem a, const Rational &s) { return a *= s; }
    friend RingElem operator*(const Rational &s, RingElem a) { return a *= s; }
    friend bool operator==(const RingElem &a, const RingElem &b);

private:
    RingSpecPtr spec_;
    std::vector<Term> terms_;
};

void check_same_ring(const RingElem &a, const RingElem &b);

// a^e; negative exponents go through invert().
RingElem pow(const RingElem &a, long e);

bool is_unit(const RingElem &a);

// Two-sided inverse of a unit: invert the single constant monomial, then sum
// the terminating geometric series in the nilpotent remainder.
RingElem invert(const RingElem &a);

// Adams operation Psi^r, r != 0. On generators: nu -> 1 - (1 - nu)^r,
// u -> u^r, N_m -> N_{|r| m} (zero beyond N_M), t -> t^{|r|}.
RingElem adams(int r, const RingElem &a);

// h_0(a) .. h_k(a) by the Newton recurrence k h_k = sum_r Psi^r(a) h_{k-r}.
std::vector<RingElem> sym_powers(int k, const RingElem &a);
RingElem sym_power(int k, const RingElem &a);

// lambda_{-1} of the dual of a sum of line elements: prod (1 - line^{-1}).
RingElem euler_class(std::span<const RingElem> lines);
// Same, with the ring given explicitly so that an empty list yields 1.
RingElem euler_class(const RingSpecPtr &spec, std::span<const RingElem> lines);

struct TwistSummand {
    int m;
    RingElem cls;
};

struct TwistData {
    std::vector<TwistSummand> summands;
    // det as an integer combination of unit generators.
    std::vector<std::pair<std::string, int>> det;
    int level = 0;
};

// exp(sum_m Psi^m(E_m) / m) * det^{-level}.
RingElem twist_class(RingSpecPtr spec, const TwistData &data);

// Linear Euler-characteristic functional on the nilpotent basis. Values are
// keyed by the nilpotent exponent vector; Newton and truncated-variable content
// passes through as a residual monomial.
class ChiPreset {
public:
    ChiPreset() = default;
    explicit ChiPreset(std::map<std::vector<int>, Rational> values) : values_(std::move(values)) {}

    // chi on P^{n-1} presented as Q[nu]/(nu^n) with P = 1 - nu = [O(-1)].
    static ChiPreset projective(const RingSpec &spec, std::string_view nilpotent_name);

    const std::map<std::vector<int>, Rational> &values() const { return values_; }

private:
    std::map<std::vector<int>, Rational> values_;
};

RingElem euler_char(const RingElem &a, const ChiPreset &chi);

// Mukai pairing with the trivial involution.
RingElem mukai_pairing(const RingElem &a, const RingElem &b, const ChiPreset &chi);

// Re-expresses `a` over `target`, matching generators by name and kind.
RingElem reembed(const RingElem &a, const RingSpecPtr &target);

// Unit monomial prod u_j^{c_j}.
RingElem unit_monomial(const RingSpecPtr &spec, const std::vector<std::pair<std::string, int>> &exps);

std::string to_string(const RingElem &a);
std::string monomial_key(const RingSpec &spec, const Monomial &m);
Monomial parse_monomial_key(const RingSpec &spec, std::string_view key);

} // namespace qkwc

#endif
