#ifndef QKWC_RANDGEN_HPP
#define QKWC_RANDGEN_HPP

#include <cstdint>
#include <random>

#include "qkwc/wallcross.hpp"

namespace qkwc::gen {

using Rng = std::mt19937_64;

// splitmix64 mix of (master, stream, index); gives each trial its own seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

int uniform_int(Rng &rng, int lo, int hi);

// p/q with |p| <= num_bound, 1 <= q <= den_bound.
Rational small_rational(Rng &rng, int num_bound = 3, int den_bound = 3);
Rational nonzero_rational(Rng &rng, int num_bound = 3, int den_bound = 3);

// Up to max_terms random monomials of the ring; unit exponents in [-unit_bound, unit_bound].
RingElem random_elem(Rng &rng, const RingSpecPtr &spec, int max_terms = 4, int unit_bound = 2);

// c * (unit monomial) * (1 + nilpotent part), c nonzero.
RingElem random_unit(Rng &rng, const RingSpecPtr &spec, int unit_bound = 2);

// Random ring coefficients on a random subset of q^lo..q^hi.
QLaurent random_laurent(Rng &rng, const RingSpecPtr &spec, int lo, int hi, int max_terms = 3, int unit_bound = 2);

// Random numerator over 1..max_factors distinct denominator factors.
QRational random_qrational(Rng &rng, const RingSpecPtr &spec, int max_factors = 3);

// Random g0 / ginf supported on q^{-window..window}, one pair per class.
WallInput random_wall_input(Rng &rng, const RingSpecPtr &spec, int m, int classes, int r, int window = 3);

} // namespace qkwc::gen

#endif
