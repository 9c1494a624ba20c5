#include "qkwc/novikov.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qkwc {

ConeSpec::ConeSpec(std::vector<Rational> w, Rational bound) : weights(std::move(w)), max_degree(std::move(bound))
{
    if (weights.empty()) {
        throw invalid_input("cone rank must be positive");
    }
    for (const auto &x : weights) {
        if (x <= 0) {
            throw invalid_input("degree weights must be positive");
        }
    }
    if (max_degree < 0) {
        throw invalid_input("degree bound must be nonnegative");
    }
}

Rational ConeSpec::degree(const CurveClass &beta) const
{
    if (beta.size() != weights.size()) {
        throw spec_mismatch("curve class has the wrong rank");
    }
    Rational d = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] < 0) {
            throw invalid_input("curve class is not effective");
        }
        d += weights[i] * beta[i];
    }
    return d;
}

std::vector<CurveClass> ConeSpec::classes_up_to(const Rational &bound) const
{
    std::vector<CurveClass> out;
    CurveClass cur(weights.size(), 0);
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational used) {
        if (i == weights.size()) {
            out.push_back(cur);
            return;
        }
        for (int c = 0; used + weights[i] * c <= bound; ++c) {
            cur[i] = c;
            rec(i + 1, used + weights[i] * c);
        }
        cur[i] = 0;
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> ConeSpec::attainable_degrees(const Rational &bound) const
{
    std::set<Rational> seen;
    for (const auto &beta : classes_up_to(bound)) {
        const Rational d = degree(beta);
        if (d > 0) {
            seen.insert(d);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Rational> walls(const ConeSpec &cone, const Rational &d)
{
    if (d <= 0) {
        throw invalid_input("wall bound must be positive");
    }
    std::vector<Rational> out;
    for (const auto &deg : cone.attainable_degrees(d)) {
        out.push_back(1 / deg);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

CurveClass add_classes(const CurveClass &a, const CurveClass &b)
{
    if (a.size() != b.size()) {
        throw spec_mismatch("curve classes of different rank");
    }
    CurveClass c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[i] + b[i];
    }
    return c;
}

std::vector<Decomposition> ordered_decompositions(const ConeSpec &cone, const CurveClass &beta, const Rational &d0)
{
    if (d0 <= 0) {
        throw invalid_input("wall degree must be positive");
    }
    std::vector<CurveClass> atoms;
    for (const auto &gamma : cone.classes_up_to(d0)) {
        if (cone.degree(gamma) == d0) {
            atoms.push_back(gamma);
        }
    }
    std::vector<Decomposition> out;
    std::vector<CurveClass> tails;
    std::function<void(const CurveClass &)> rec = [&](const CurveClass &rest) {
        if (!tails.empty()) {
            out.push_back(Decomposition{rest, tails});
        }
        for (const auto &gamma : atoms) {
            CurveClass next(rest.size());
            bool effective = true;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                next[i] = rest[i] - gamma[i];
                effective = effective && next[i] >= 0;
            }
            if (effective) {
                tails.push_back(gamma);
                rec(next);
                tails.pop_back();
            }
        }
    };
    cone.degree(beta);
    rec(beta);
    std::sort(out.begin(), out.end(), [](const Decomposition &x, const Decomposition &y) {
        if (x.tails.size() != y.tails.size()) {
            return x.tails.size() < y.tails.size();
        }
        return x.tails < y.tails;
    });
    return out;
}

OrbitData orbit_stabilizer(const std::vector<CurveClass> &tails)
{
    std::map<CurveClass, int> mult;
    for (const auto &t : tails) {
        ++mult[t];
    }
    Integer stab = 1;
    for (const auto &[cls, m] : mult) {
        for (int i = 2; i <= m; ++i) {
            stab *= i;
        }
    }
    Integer total = 1;
    for (std::size_t i = 2; i <= tails.size(); ++i) {
        total *= static_cast<unsigned long>(i);
    }
    return OrbitData{total / stab, stab};
}

// ---------------------------------------------------------------------------

NovikovSeries NovikovSeries::one(ConeSpecPtr cone, RingSpecPtr ring)
{
    NovikovSeries s(cone, ring);
    s.add_term(cone->zero(), QRational(QLaurent(RingElem(ring, 1))));
    return s;
}

QRational NovikovSeries::coeff(const CurveClass &beta) const
{
    auto it = terms_.find(beta);
    return it == terms_.end() ? QRational(ring_) : it->second;
}

void NovikovSeries::add_term(const CurveClass &beta, const QRational &c)
{
    if (cone_->degree(beta) > cone_->max_degree) {
        return;
    }
    auto it = terms_.find(beta);
    if (it == terms_.end()) {
        if (!c.num().is_zero()) {
            terms_.emplace(beta, c);
        }
        return;
    }
    it->second += c;
    if (it->second.num().is_zero()) {
        terms_.erase(it);
    }
}

void NovikovSeries::check_compatible(const NovikovSeries &other) const
{
    if (!(*cone_ == *other.cone_)) {
        throw spec_mismatch("Novikov series over different cones");
    }
    if (!same_ring(ring_, other.ring_)) {
        throw spec_mismatch("Novikov series over different coefficient rings");
    }
}

NovikovSeries &NovikovSeries::operator+=(const NovikovSeries &other)
{
    check_compatible(other);
    for (const auto &[beta, c] : other.terms_) {
        add_term(beta, c);
    }
    return *this;
}

NovikovSeries operator*(const NovikovSeries &a, const NovikovSeries &b)
{
    a.check_compatible(b);
    NovikovSeries r(a.cone_, a.ring_);
    for (const auto &[ba, ca] : a.terms_) {
        for (const auto &[bb, cb] : b.terms_) {
            const CurveClass beta = add_classes(ba, bb);
            if (a.cone_->degree(beta) <= a.cone_->max_degree) {
                r.add_term(beta, ca * cb);
            }
        }
    }
    return r;
}

bool operator==(const NovikovSeries &a, const NovikovSeries &b)
{
    a.check_compatible(b);
    std::set<CurveClass> keys;
    for (const auto &[beta, c] : a.terms_) {
        keys.insert(beta);
    }
    for (const auto &[beta, c] : b.terms_) {
        keys.insert(beta);
    }
    for (const auto &beta : keys) {
        if (!(a.coeff(beta) == b.coeff(beta))) {
            return false;
        }
    }
    return true;
}

} // namespace qkwc
