#pragma once
/**
 * @file rational.hpp
 * @brief Exact rational scalars used throughout the library.
 *
 * All symbolic computation is over Q, so coefficients never lose precision.
 * Backed by boost::multiprecision::cpp_rational (arbitrary precision,
 * always stored gcd-reduced with positive denominator).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qrpw {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rational_from(long long n, long long d = 1) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(Integer(n), Integer(d));
}

/// Canonical text form: "p" or "p/q" with q > 1, sign on the numerator.
inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

/// Parses "p" or "p/q" (optionally signed). Throws std::invalid_argument on junk.
Rational rational_parse(const std::string& text);

inline double rational_to_double(const Rational& r) {
    return static_cast<double>(r);
}

}  // namespace qrpw
