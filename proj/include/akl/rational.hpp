// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "akl/errors.hpp"

namespace akl {

// Exact rational scalar. cpp_rational keeps numerator/denominator coprime
// with a positive denominator, which is exactly the canonical form the rest
// of the code relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Accepts "p", "-p", "p/q" with optional sign on the numerator.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

// True when |r| = (p/q)^2 for some rational p/q; if so *root is the
// nonnegative square root. r must be >= 0.
bool rational_square_root(const Rational& r, Rational* root);

} // namespace akl

// ---- implementation-grade inline helpers ----------------------------------

namespace akl {

inline Rational parse_rational(const std::string& text) {
    auto bad = [&]() { throw ParseError("invalid rational literal: '" + text + "'"); };
    if (text.empty()) bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) bad();
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const ParseError*>(&e)) throw;
        bad();
    }
    return Rational(0); // unreachable
}

inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline bool rational_square_root(const Rational& r, Rational* root) {
    if (r < 0) return false;
    const Integer num = numerator(r), den = denominator(r);
    const Integer sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return false;
    if (root) *root = Rational(sn, sd);
    return true;
}

} // namespace akl
