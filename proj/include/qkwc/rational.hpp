#ifndef QKWC_RATIONAL_HPP
#define QKWC_RATIONAL_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qkwc {

// Exact coefficients everywhere. No floating point is used by the engine.
using Rational = mpq_class;
using Integer = mpz_class;

// Base of every error the engine raises.
class qkwc_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live over different coefficient rings (or cones).
class spec_mismatch : public qkwc_error {
public:
    using qkwc_error::qkwc_error;
};

// invert() or a denominator factor was handed a non-unit.
class not_a_unit : public qkwc_error {
public:
    using qkwc_error::qkwc_error;
};

// Malformed data: parse failures, violated preconditions.
class invalid_input : public qkwc_error {
public:
    using qkwc_error::qkwc_error;
};

// Parses "p", "-p" or "p/q" into a canonical rational. Throws invalid_input.
Rational parse_rational(std::string_view text);

// Canonical "p" or "p/q" form.
std::string to_string(const Rational &value);

Rational binomial(long n, long k);
Rational factorial(long n);

} // namespace qkwc

#endif
