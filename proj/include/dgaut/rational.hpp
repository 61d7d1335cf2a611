#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "dgaut/errors.hpp"

namespace dgaut {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the backing type.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Renders "p" when the denominator is one, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace detail

/// Parses "p", "-p", "p/q" or "-p/q". Anything else is a ParseError.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!detail::all_digits(num) || !detail::all_digits(den))
        throw ParseError("bad rational literal: '" + std::string(text) + "'");
    BigInt p{std::string(num)}, q{std::string(den)};
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    return negative ? Rational(-r) : r;
}

/// r^e for e >= 0 by repeated squaring.
inline Rational rational_pow(const Rational& r, unsigned e) {
    Rational acc = 1, base = r;
    while (e != 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

/// Exact n-th root of a non-negative integer, if one exists.
inline std::optional<BigInt> integer_nth_root(const BigInt& x, unsigned n) {
    if (n == 0) return std::nullopt;
    if (x < 0) return std::nullopt;
    if (x == 0 || x == 1 || n == 1) return x;
    BigInt lo = 0, hi = x;
    while (lo <= hi) {
        BigInt mid = (lo + hi) / 2;
        BigInt p = boost::multiprecision::pow(mid, n);
        if (p == x) return mid;
        if (p < x)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return std::nullopt;
}

/// Exact rational n-th root, if one exists over the rationals.
inline std::optional<Rational> rational_nth_root(const Rational& r, unsigned n) {
    if (n == 0) return std::nullopt;
    bool negative = r < 0;
    if (negative && n % 2 == 0) return std::nullopt;
    Rational a = negative ? Rational(-r) : r;
    auto p = integer_nth_root(numerator(a), n);
    auto q = integer_nth_root(denominator(a), n);
    if (!p || !q) return std::nullopt;
    Rational root(*p, *q);
    return negative ? Rational(-root) : root;
}

}  // namespace dgaut
