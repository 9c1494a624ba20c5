#ifndef QKWC_NOVIKOV_HPP
#define QKWC_NOVIKOV_HPP

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "qkwc/qfun.hpp"

namespace qkwc {

using CurveClass = std::vector<int>;

// Effective cone N^rank with a positive degree functional and a truncation bound.
struct ConeSpec {
    std::vector<Rational> weights;
    Rational max_degree;

    ConeSpec(std::vector<Rational> weights, Rational max_degree);

    int rank() const { return static_cast<int>(weights.size()); }
    Rational degree(const CurveClass &beta) const;
    CurveClass zero() const { return CurveClass(weights.size(), 0); }
    // Every class with degree <= bound, in lexicographic order.
    std::vector<CurveClass> classes_up_to(const Rational &bound) const;
    // Distinct positive degree values <= bound, ascending.
    std::vector<Rational> attainable_degrees(const Rational &bound) const;

    friend bool operator==(const ConeSpec &, const ConeSpec &) = default;
};

using ConeSpecPtr = std::shared_ptr<const ConeSpec>;

// Walls 1/d' for attainable degrees d' <= d, descending.
std::vector<Rational> walls(const ConeSpec &cone, const Rational &d);

struct Decomposition {
    CurveClass rest;
    std::vector<CurveClass> tails;
};

// beta = rest + tail_1 + ... + tail_k with k >= 1, deg(tail_i) = d0, rest effective.
std::vector<Decomposition> ordered_decompositions(const ConeSpec &cone, const CurveClass &beta, const Rational &d0);

struct OrbitData {
    Integer orbit_size;
    Integer stabilizer_order;
};

OrbitData orbit_stabilizer(const std::vector<CurveClass> &tails);

CurveClass add_classes(const CurveClass &a, const CurveClass &b);

class NovikovSeries {
public:
    NovikovSeries(ConeSpecPtr cone, RingSpecPtr ring) : cone_(std::move(cone)), ring_(std::move(ring)) {}

    static NovikovSeries one(ConeSpecPtr cone, RingSpecPtr ring);

    const ConeSpecPtr &cone() const { return cone_; }
    const RingSpecPtr &ring() const { return ring_; }
    const std::map<CurveClass, QRational> &terms() const { return terms_; }
    QRational coeff(const CurveClass &beta) const;

    // Adds c Q^beta; terms above the degree bound are dropped.
    void add_term(const CurveClass &beta, const QRational &c);

    NovikovSeries &operator+=(const NovikovSeries &other);
    friend NovikovSeries operator+(NovikovSeries a, const NovikovSeries &b) { return a += b; }
    friend NovikovSeries operator*(const NovikovSeries &a, const NovikovSeries &b);
    // Coefficientwise cross-multiplication equality.
    friend bool operator==(const NovikovSeries &a, const NovikovSeries &b);

private:
    void check_compatible(const NovikovSeries &other) const;

    ConeSpecPtr cone_;
    RingSpecPtr ring_;
    std::map<CurveClass, QRational> terms_;
};

} // namespace qkwc

#endif
