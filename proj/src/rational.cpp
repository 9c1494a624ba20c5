#include "qkwc/rational.hpp"

#include <cctype>

namespace qkwc {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw invalid_input("not an exact rational: '" + std::string(text) + "'");
    }
    Integer n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) {
        throw invalid_input("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &value)
{
    return value.get_str();
}

Rational binomial(long n, long k)
{
    if (k < 0) {
        return 0;
    }
    // Polynomial in n, so negative n is allowed.
    Rational result = 1;
    for (long i = 0; i < k; ++i) {
        result *= Rational(n - i);
        result /= Rational(i + 1);
    }
    return result;
}

Rational factorial(long n)
{
    Integer f = 1;
    for (long i = 2; i <= n; ++i) {
        f *= i;
    }
    return Rational(f);
}

} // namespace qkwc
