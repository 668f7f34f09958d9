#pragma once

// Exact arithmetic aliases and helpers. Every quantity in this library that is
// not a plain count is an arbitrary-precision integer or a rational in lowest
// terms with positive denominator; nothing is ever rounded.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "pfl/errors.hpp"

namespace pfl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline Rational make_rational(Int n, Int d) {
    if (d == 0) throw InvalidInput("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

inline bool is_integer(const Rational& x) { return den(x) == 1; }

// floor(p/q), exact for either sign.
inline Int rat_floor(const Rational& x) {
    Int q = num(x) / den(x); // truncates toward zero
    if (num(x) < 0 && q * den(x) != num(x)) --q;
    return q;
}

// "p/q" for non-integers, "p" otherwise.
inline std::string rat_str(const Rational& x) {
    std::string s = num(x).str();
    if (!is_integer(x)) s += "/" + den(x).str();
    return s;
}

// Accepts "p" or "p/q" with optional sign; q must be nonzero.
inline Rational rat_parse(const std::string& s) {
    auto bad = [&] { throw InvalidInput("cannot parse rational '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) bad();
        return make_rational(n, d);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational(0); // unreachable
}

} // namespace pfl
