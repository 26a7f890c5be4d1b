#pragma once

/**
 * @file exact.hpp
 * @brief Arbitrary-precision integers and rationals used throughout hamq.
 *
 * Every eigenvalue, multiplicity and bound in this library is an exact
 * integer or rational; floating point only appears in the projector
 * certification code (colouring.hpp).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hamq {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// C(n, k) with C(n, k) = 0 for k < 0 or k > n. Negative n is rejected.
inline ExactInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: negative upper index " + std::to_string(n));
    }
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    ExactInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) is divisible by i at every step
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

inline ExactInt ipow(const ExactInt& base, std::int64_t exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

inline ExactInt sign_power(std::int64_t exp) { return (exp % 2 == 0) ? ExactInt{1} : ExactInt{-1}; }

inline ExactInt pow2(std::int64_t exp) { return ipow(ExactInt{2}, exp); }

/// Exact a / b; throws std::logic_error when b does not divide a.
inline ExactInt exact_div(const ExactInt& a, const ExactInt& b, std::string_view what) {
    if (b == 0) throw std::logic_error(std::string(what) + ": division by zero");
    ExactInt q = a / b;
    if (q * b != a) {
        throw std::logic_error(std::string(what) + ": inexact division " + a.str() + " / " + b.str());
    }
    return q;
}

inline std::string to_string(const ExactInt& v) { return v.str(); }

/// Rationals print as "p/q", or "p" when the denominator is one.
inline std::string to_string(const ExactRational& v) {
    const ExactInt num = boost::multiprecision::numerator(v);
    const ExactInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline ExactInt parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_int: empty string");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("parse_int: no digits in '" + std::string(s) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') {
            throw std::invalid_argument("parse_int: bad digit in '" + std::string(s) + "'");
        }
    }
    return ExactInt(std::string(s));
}

inline ExactRational parse_rational(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return ExactRational(parse_int(s));
    const ExactInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return ExactRational(parse_int(s.substr(0, slash)), den);
}

/// Smallest integer >= r.
inline ExactInt ceil(const ExactRational& r) {
    const ExactInt num = boost::multiprecision::numerator(r);
    const ExactInt den = boost::multiprecision::denominator(r);  // always positive
    ExactInt q = num / den;  // truncates toward zero
    if (q * den != num && num > 0) q += 1;
    return q;
}

}  // namespace hamq
