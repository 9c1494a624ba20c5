#ifndef QKWC_TESTS_SUPPORT_HPP
#define QKWC_TESTS_SUPPORT_HPP

#include <doctest.h>

#include "qkwc/qfun.hpp"

namespace doctest {

template <> struct StringMaker<qkwc::RingElem> {
    static String convert(const qkwc::RingElem &a) { return qkwc::to_string(a).c_str(); }
};
template <> struct StringMaker<qkwc::QLaurent> {
    static String convert(const qkwc::QLaurent &a) { return qkwc::to_string(a).c_str(); }
};
template <> struct StringMaker<qkwc::QRational> {
    static String convert(const qkwc::QRational &a) { return qkwc::to_string(a).c_str(); }
};

} // namespace doctest

#endif
