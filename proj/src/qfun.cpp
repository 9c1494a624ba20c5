#include "qkwc/qfun.hpp"

#include <algorithm>
#include <sstream>

namespace qkwc {

namespace {

bool same_unit(const RingElem &a, const RingElem &b)
{
    return a == b;
}

bool factor_less(const DenFactor &x, const DenFactor &y)
{
    if (x.a != y.a) {
        return x.a < y.a;
    }
    const auto &tx = x.u.terms();
    const auto &ty = y.u.terms();
    return std::lexicographical_compare(tx.begin(), tx.end(), ty.begin(), ty.end(),
                                        [](const Term &s, const Term &t) {
                                            if (s.mono != t.mono) {
                                                return s.mono < t.mono;
                                            }
                                            return s.coeff < t.coeff;
                                        });
}

QLaurent one_minus(const RingSpecPtr &spec, int a, const RingElem &u)
{
    QLaurent f(RingElem(spec, 1));
    f.add_term(a, -u);
    return f;
}

QLaurent laurent_pow(const QLaurent &f, int e)
{
    QLaurent result(RingElem(f.spec(), 1));
    for (int i = 0; i < e; ++i) {
        result = result * f;
    }
    return result;
}

} // namespace

QLaurent::QLaurent(const RingElem &constant) : spec_(constant.spec())
{
    if (!constant.is_zero()) {
        coeffs_.emplace(0, constant);
    }
}

QLaurent QLaurent::monomial(const RingElem &coeff, int exponent)
{
    QLaurent f(coeff.spec());
    f.add_term(exponent, coeff);
    return f;
}

QLaurent QLaurent::q(const RingSpecPtr &spec, int exponent)
{
    return monomial(RingElem(spec, 1), exponent);
}

RingElem QLaurent::coeff(int exponent) const
{
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? RingElem(spec_) : it->second;
}

int QLaurent::degree() const
{
    if (coeffs_.empty()) {
        throw invalid_input("degree of the zero Laurent polynomial");
    }
    return coeffs_.rbegin()->first;
}

int QLaurent::order() const
{
    if (coeffs_.empty()) {
        throw invalid_input("order of the zero Laurent polynomial");
    }
    return coeffs_.begin()->first;
}

void QLaurent::add_term(int exponent, const RingElem &c)
{
    if (c.is_zero()) {
        return;
    }
    if (!spec_) {
        spec_ = c.spec();
    }
    auto [it, inserted] = coeffs_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            coeffs_.erase(it);
        }
    } else {
        check_same_ring(RingElem(spec_), c);
    }
}

QLaurent QLaurent::operator-() const
{
    QLaurent r(spec_);
    for (const auto &[e, c] : coeffs_) {
        r.coeffs_.emplace(e, -c);
    }
    return r;
}

QLaurent &QLaurent::operator+=(const QLaurent &other)
{
    for (const auto &[e, c] : other.coeffs_) {
        add_term(e, c);
    }
    return *this;
}

QLaurent &QLaurent::operator-=(const QLaurent &other)
{
    for (const auto &[e, c] : other.coeffs_) {
        add_term(e, -c);
    }
    return *this;
}

QLaurent &QLaurent::operator*=(const RingElem &scalar)
{
    std::map<int, RingElem> out;
    for (const auto &[e, c] : coeffs_) {
        RingElem p = c * scalar;
        if (!p.is_zero()) {
            out.emplace(e, std::move(p));
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

QLaurent operator*(const QLaurent &a, const QLaurent &b)
{
    QLaurent r(a.spec_ ? a.spec_ : b.spec_);
    for (const auto &[ea, ca] : a.coeffs_) {
        for (const auto &[eb, cb] : b.coeffs_) {
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

bool operator==(const QLaurent &a, const QLaurent &b)
{
    if (a.coeffs_.size() != b.coeffs_.size()) {
        return false;
    }
    auto it = b.coeffs_.begin();
    for (const auto &[e, c] : a.coeffs_) {
        if (it->first != e || !(it->second == c)) {
            return false;
        }
        ++it;
    }
    return true;
}

QLaurent QLaurent::truncated_above(int n) const
{
    QLaurent r(spec_);
    for (const auto &[e, c] : coeffs_) {
        if (e <= n) {
            r.coeffs_.emplace(e, c);
        }
    }
    return r;
}

QLaurent QLaurent::shifted(int k) const
{
    QLaurent r(spec_);
    for (const auto &[e, c] : coeffs_) {
        r.coeffs_.emplace(e + k, c);
    }
    return r;
}

RingElem QLaurent::evaluate_at_one() const
{
    RingElem sum(spec_);
    for (const auto &[e, c] : coeffs_) {
        sum += c;
    }
    return sum;
}

// ---------------------------------------------------------------------------

QRational::QRational(QLaurent num, const std::vector<DenFactor> &den) : num_(std::move(num))
{
    for (const auto &f : den) {
        if (f.mult < 0) {
            throw invalid_input("denominator multiplicity must be nonnegative");
        }
        if (f.mult == 0) {
            continue;
        }
        if (f.a == 0) {
            throw invalid_input("denominator factor 1 - q^0 u is not allowed");
        }
        if (!is_unit(f.u)) {
            throw not_a_unit("denominator factor base is not a unit: " + to_string(f.u));
        }
        if (!num_.spec()) {
            num_ = QLaurent(f.u.spec());
        }
        DenFactor g = f;
        if (f.a < 0) {
            // 1/(1 - q^a u) = -q^{-a} u^{-1} / (1 - q^{-a} u^{-1})
            const RingElem u_inv = invert(f.u);
            const RingElem c = (f.mult % 2 == 0 ? RingElem(u_inv.spec(), 1) : RingElem(u_inv.spec(), -1)) *
                               pow(u_inv, f.mult);
            num_ = num_.shifted(-f.a * f.mult) * c;
            g = DenFactor{-f.a, u_inv, f.mult};
        }
        bool merged = false;
        for (auto &h : den_) {
            if (h.a == g.a && same_unit(h.u, g.u)) {
                h.mult += g.mult;
                merged = true;
                break;
            }
        }
        if (!merged) {
            den_.push_back(std::move(g));
        }
    }
    std::sort(den_.begin(), den_.end(), factor_less);
}

QRational QRational::pole(const RingElem &c, int a, const RingElem &u)
{
    return QRational(QLaurent(c), {DenFactor{a, u, 1}});
}

QLaurent QRational::denominator() const
{
    QLaurent d(RingElem(spec(), 1));
    for (const auto &f : den_) {
        d = d * laurent_pow(one_minus(spec(), f.a, f.u), f.mult);
    }
    return d;
}

int QRational::denominator_degree() const
{
    int deg = 0;
    for (const auto &f : den_) {
        deg += f.a * f.mult;
    }
    return deg;
}

QRational QRational::operator-() const
{
    QRational r(*this);
    r.num_ = -num_;
    return r;
}

QRational QRational::over_common_denominator(const QRational &other) const
{
    QRational r(*this);
    for (const auto &g : other.den_) {
        int have = 0;
        for (const auto &f : r.den_) {
            if (f.a == g.a && same_unit(f.u, g.u)) {
                have = f.mult;
            }
        }
        if (g.mult > have) {
            const int extra = g.mult - have;
            r.num_ = r.num_ * laurent_pow(one_minus(spec(), g.a, g.u), extra);
            bool found = false;
            for (auto &f : r.den_) {
                if (f.a == g.a && same_unit(f.u, g.u)) {
                    f.mult = g.mult;
                    found = true;
                }
            }
            if (!found) {
                r.den_.push_back(g);
            }
        }
    }
    std::sort(r.den_.begin(), r.den_.end(), factor_less);
    return r;
}

QRational &QRational::operator+=(const QRational &other)
{
    if (!num_.spec()) {
        *this = QRational(QLaurent(other.spec()));
    }
    QRational a = over_common_denominator(other);
    const QRational b = other.over_common_denominator(a);
    a.num_ += b.num_;
    *this = std::move(a);
    return *this;
}

QRational &QRational::operator-=(const QRational &other)
{
    return *this += -other;
}

QRational &QRational::operator*=(const QRational &other)
{
    std::vector<DenFactor> den = den_;
    den.insert(den.end(), other.den_.begin(), other.den_.end());
    *this = QRational(num_ * other.num_, den);
    return *this;
}

QRational operator*(QRational a, const RingElem &s)
{
    a.num_ *= s;
    return a;
}

bool operator==(const QRational &a, const QRational &b)
{
    return a.num_ * b.denominator() == b.num_ * a.denominator();
}

// ---------------------------------------------------------------------------

QLaurent substitute(const QLaurent &f, int r, const RingElem &u)
{
    if (r == 0) {
        throw invalid_input("substitution exponent must be nonzero");
    }
    QLaurent out(f.spec());
    for (const auto &[e, c] : f.coeffs()) {
        out.add_term(r * e, c * pow(u, e));
    }
    return out;
}

QRational substitute(const QRational &f, int r, const RingElem &u)
{
    std::vector<DenFactor> den;
    for (const auto &g : f.den()) {
        den.push_back(DenFactor{r * g.a, pow(u, g.a) * g.u, g.mult});
    }
    return QRational(substitute(f.num(), r, u), den);
}

namespace {

// Coefficients S_0..S_len of 1/D, one geometric division per factor: S_k += u S_{k-a}.
std::vector<RingElem> inverse_denominator_series(const QRational &f, int len)
{
    const auto &spec = f.spec();
    std::vector<RingElem> s(static_cast<std::size_t>(len + 1), RingElem(spec));
    s[0] = RingElem(spec, 1);
    for (const auto &fac : f.den()) {
        for (int rep = 0; rep < fac.mult; ++rep) {
            for (int k = fac.a; k <= len; ++k) {
                const auto &prev = s[static_cast<std::size_t>(k - fac.a)];
                if (!prev.is_zero()) {
                    s[static_cast<std::size_t>(k)] += fac.u * prev;
                }
            }
        }
    }
    return s;
}

// Coefficient of q^n in the expansion at q = 0.
RingElem coefficient_at_zero(const QRational &f, int n)
{
    const auto &spec = f.spec();
    if (f.num().is_zero() || f.num().order() > n) {
        return RingElem(spec);
    }
    if (f.is_laurent()) {
        return f.num().coeff(n);
    }
    const auto s = inverse_denominator_series(f, n - f.num().order());
    RingElem out(spec);
    for (const auto &[e, c] : f.num().coeffs()) {
        if (e <= n) {
            out += c * s[static_cast<std::size_t>(n - e)];
        }
    }
    return out;
}

} // namespace

QLaurent expand_at_zero(const QRational &f, int n)
{
    const auto &spec = f.spec();
    if (f.num().is_zero()) {
        return QLaurent(spec);
    }
    if (f.is_laurent()) {
        return f.num().truncated_above(n);
    }
    const int lo = f.num().order();
    const int len = n - lo;
    if (len < 0) {
        return QLaurent(spec);
    }
    const auto s = inverse_denominator_series(f, len);
    QLaurent out(spec);
    for (const auto &[e, c] : f.num().coeffs()) {
        for (int k = 0; e + k <= n; ++k) {
            out.add_term(e + k, c * s[static_cast<std::size_t>(k)]);
        }
    }
    return out;
}

QLaurent expand_at_infinity(const QRational &f, int n)
{
    return expand_at_zero(substitute(f, -1, RingElem(f.spec(), 1)), n);
}

Split split(const QRational &f)
{
    const auto &spec = f.spec();
    if (f.is_laurent()) {
        return Split{f.num(), QRational(QLaurent(spec))};
    }
    const QLaurent d = f.denominator();
    const int delta = f.denominator_degree();
    const RingElem lead_inv = invert(d.coeff(delta));
    QLaurent rest = f.num();
    QLaurent plus(spec);
    while (!rest.is_zero() && rest.degree() >= delta) {
        const int e = rest.degree();
        const QLaurent quotient = QLaurent::monomial(rest.coeff(e) * lead_inv, e - delta);
        rest -= quotient * d;
        plus += quotient;
    }
    while (!rest.is_zero() && rest.order() < 0) {
        const int e = rest.order();
        const QLaurent quotient = QLaurent::monomial(rest.coeff(e), e);
        rest -= quotient * d;
        plus += quotient;
    }
    return Split{plus, QRational(rest, f.den())};
}

RingElem residue(const QRational &f)
{
    return coefficient_at_zero(f, 0) - coefficient_at_zero(substitute(f, -1, RingElem(f.spec(), 1)), 0);
}

RingElem residue_via_split(const QRational &f)
{
    return split(f).minus.num().coeff(0);
}

bool is_proper(const QRational &f)
{
    if (f.num().is_zero()) {
        return true;
    }
    return f.num().order() >= 0 && f.num().degree() < f.denominator_degree();
}

std::string to_string(const QLaurent &f, const std::string &var)
{
    if (f.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : f.coeffs()) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << to_string(c) << ")";
        if (e != 0) {
            os << "*" << var;
            if (e != 1) {
                os << "^" << e;
            }
        }
    }
    return os.str();
}

std::string to_string(const QRational &f)
{
    std::string s = "[" + to_string(f.num()) + "]";
    if (f.is_laurent()) {
        return s;
    }
    s += " / (";
    bool first = true;
    for (const auto &g : f.den()) {
        if (!first) {
            s += "*";
        }
        first = false;
        s += "(1 - q";
        if (g.a != 1) {
            s += "^" + std::to_string(g.a);
        }
        s += "*(" + to_string(g.u) + "))";
        if (g.mult != 1) {
            s += "^" + std::to_string(g.mult);
        }
    }
    return s + ")";
}

} // namespace qkwc
