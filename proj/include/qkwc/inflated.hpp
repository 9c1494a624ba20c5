#ifndef QKWC_INFLATED_HPP
#define QKWC_INFLATED_HPP

#include <map>
#include <vector>

#include "qkwc/ringcore.hpp"

namespace qkwc {

// sum over S_r of x_{s(1)}^s / prod_{i<r} (1 - x_{s(i)}^{-1} x_{s(i+1)}) at
// rational points. Throws on zero or coincident points.
Rational staircase_sum(int s, const std::vector<Rational> &x);

// h_s(x) for s >= 0, (-1)^{r-1} sum_{j_1+..+j_r = -s, j_i > 0} x^{-j} for s < 0.
Rational staircase_closed_form(int s, const std::vector<Rational> &x);

// Fraction-free check over Q[x_1^{+-1}..x_r^{+-1}]: both sides times the
// Vandermonde product agree as Laurent polynomials.
bool staircase_symbolic(int s, int r);

// Q[Theta_1^{+-1}..Theta_k^{+-1}][L] / prod (L - Theta_i).
class KoszulRing {
public:
    explicit KoszulRing(int k);

    int k() const { return k_; }
    const RingSpecPtr &theta_ring() const { return ring_; }
    RingElem theta(int i) const;
    // e_i(Theta), i = 0..k.
    const RingElem &elementary(int i) const { return e_[static_cast<std::size_t>(i)]; }

    // Element as coefficients of L^0..L^{k-1}.
    using Elem = std::vector<RingElem>;

    Elem zero() const;
    Elem constant(const RingElem &c) const;
    // Reduces sum_j c_j L^j with arbitrary integer j.
    Elem reduce(const std::map<int, RingElem> &poly) const;
    Elem L_power(int t) const;
    Elem multiply(const Elem &a, const Elem &b) const;
    Elem add(const Elem &a, const Elem &b) const;
    bool equal(const Elem &a, const Elem &b) const;

    // L^j -> h_j(Theta) for 0 <= j < k, extended linearly.
    RingElem pushforward(const Elem &a) const;

    // alpha_i = sum_j L^j h_{i-j}(-sum Theta).
    Elem alpha(int i) const;

private:
    int k_;
    RingSpecPtr ring_;
    std::vector<RingElem> e_;
    std::vector<RingElem> h_;
    Elem L_inverse_;
};

// p_*(L^t) through Koszul reduction.
RingElem pushforward(const KoszulRing &R, int t);

// Closed forms: sum_{|j| = t, j >= 0} Theta^j for t >= 0 and
// -sum_{|j| = -t, j > 0} prod (-Theta_i^{-j_i}) for t < 0.
RingElem pushforward_closed_form(const KoszulRing &R, int t);

// (1 - lambda^{-1} L) sum_{i<k} lambda^{-i} alpha_i == prod (1 - lambda^{-1} Theta_i),
// coefficientwise in lambda^{-1}.
bool generating_identity(const KoszulRing &R);

} // namespace qkwc

#endif
