#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hopfint {

// Exact arbitrary-precision rationals. cpp_rational keeps the canonical
// form we rely on everywhere: gcd(|num|, den) = 1 and den > 0, so equality
// of values is equality of representations.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p" when the denominator is 1, "p/q" otherwise.
inline std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input
/// (including q = 0).
inline Rational parse_rational(const std::string& s) {
    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("not a rational: '" + s + "'");
    };
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

}  // namespace hopfint
