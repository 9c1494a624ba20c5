#ifndef QKWC_QFUN_HPP
#define QKWC_QFUN_HPP

#include <map>
#include <string>
#include <vector>

#include "qkwc/ringcore.hpp"

namespace qkwc {

// Laurent polynomial in q with RingElem coefficients. Also used for truncated
// expansions, where the caller tracks the truncation order.
class QLaurent {
public:
    QLaurent() = default;
    explicit QLaurent(RingSpecPtr spec) : spec_(std::move(spec)) {}
    explicit QLaurent(const RingElem &constant);

    static QLaurent monomial(const RingElem &coeff, int exponent);
    static QLaurent q(const RingSpecPtr &spec, int exponent = 1);

    const RingSpecPtr &spec() const { return spec_; }
    const std::map<int, RingElem> &coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    RingElem coeff(int exponent) const;
    // Only defined on nonzero elements.
    int degree() const;
    int order() const;

    void add_term(int exponent, const RingElem &c);

    QLaurent operator-() const;
    QLaurent &operator+=(const QLaurent &other);
    QLaurent &operator-=(const QLaurent &other);
    QLaurent &operator*=(const RingElem &scalar);

    friend QLaurent operator+(QLaurent a, const QLaurent &b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent &b) { return a -= b; }
    friend QLaurent operator*(const QLaurent &a, const QLaurent &b);
    friend QLaurent operator*(QLaurent a, const RingElem &s) { return a *= s; }
    friend bool operator==(const QLaurent &a, const QLaurent &b);

    // Drops every term with exponent above n.
    QLaurent truncated_above(int n) const;
    QLaurent shifted(int k) const;
    RingElem evaluate_at_one() const;

private:
    RingSpecPtr spec_;
    std::map<int, RingElem> coeffs_;
};

// (1 - q^a u)^mult with a > 0 and u a unit.
struct DenFactor {
    int a;
    RingElem u;
    int mult;
};

class QRational {
public:
    QRational() = default;
    explicit QRational(RingSpecPtr spec) : num_(std::move(spec)) {}
    explicit QRational(QLaurent num) : num_(std::move(num)) {}
    // Factors with a < 0 are rewritten via 1 - q^a u = -q^a u (1 - q^{-a} u^{-1}).
    QRational(QLaurent num, const std::vector<DenFactor> &den);

    // c / (1 - q^a u).
    static QRational pole(const RingElem &c, int a, const RingElem &u);

    const RingSpecPtr &spec() const { return num_.spec(); }
    const QLaurent &num() const { return num_; }
    const std::vector<DenFactor> &den() const { return den_; }
    bool is_laurent() const { return den_.empty(); }

    // prod (1 - q^a u)^mult as a polynomial; constant term 1.
    QLaurent denominator() const;
    int denominator_degree() const;

    QRational operator-() const;
    QRational &operator+=(const QRational &other);
    QRational &operator-=(const QRational &other);
    QRational &operator*=(const QRational &other);

    friend QRational operator+(QRational a, const QRational &b) { return a += b; }
    friend QRational operator-(QRational a, const QRational &b) { return a -= b; }
    friend QRational operator*(QRational a, const QRational &b) { return a *= b; }
    friend QRational operator*(QRational a, const RingElem &s);

    // Cross-multiplication equality.
    friend bool operator==(const QRational &a, const QRational &b);

    // Same function over the common denominator of this and `other`.
    QRational over_common_denominator(const QRational &other) const;

private:
    QLaurent num_;
    std::vector<DenFactor> den_;
};

// q -> q^r u.
QLaurent substitute(const QLaurent &f, int r, const RingElem &u);
QRational substitute(const QRational &f, int r, const RingElem &u);

// Expansion at q = 0, exact through q^n.
QLaurent expand_at_zero(const QRational &f, int n);
// Expansion of f(1/w) at w = 0, exact through w^n; exponents are powers of w.
QLaurent expand_at_infinity(const QRational &f, int n);

struct Split {
    QLaurent plus;
    QRational minus;
};

Split split(const QRational &f);

// Res_{q=0} + Res_{q=inf} of f dq/q.
RingElem residue(const QRational &f);
// The same residue read off the minus part at q = 0.
RingElem residue_via_split(const QRational &f);

// Minus part is regular at 0 and vanishes at infinity.
bool is_proper(const QRational &f);

std::string to_string(const QLaurent &f, const std::string &var = "q");
std::string to_string(const QRational &f);

} // namespace qkwc

#endif
